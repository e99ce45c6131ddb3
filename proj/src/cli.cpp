#include "collatz/cli.hpp"

#include "collatz/cycles.hpp"
#include "collatz/export.hpp"
#include "collatz/indexing.hpp"
#include "collatz/invariants.hpp"
#include "collatz/oracle.hpp"
#include "collatz/tree.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

namespace collatz::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Dot };

struct Config {
  unsigned depth_limit{kDefaultDepthLimit};
  Format format{Format::Text};
  std::string out_path;
  bool parity_word{false};
  std::string fallback_bound{"1000000"};
};

const std::map<std::string, Format> kTextJson{{"text", Format::Text}, {"json", Format::Json}};
const std::map<std::string, Format> kAllFormats{
    {"text", Format::Text}, {"json", Format::Json}, {"dot", Format::Dot}};

class UsageError : public Error {
 public:
  using Error::Error;
};

Integer parse_nonnegative(const std::string& text, const char* what) {
  Integer v;
  try {
    v = parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + " must be a decimal integer, got '" + text + "'");
  }
  if (v < 0) throw UsageError(std::string(what) + " must be >= 0, got " + text);
  return v;
}

OperatorWord parse_word(const std::string& text, bool parity_word) {
  return parity_word ? word_from_branches(text) : OperatorWord::parse(text);
}

void dump(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_build(unsigned depth, const Config& cfg, std::ostream& out, std::ostream& err) {
  const Tree tree = build(depth, cfg.depth_limit);
  std::string body;
  switch (cfg.format) {
    case Format::Json: body = tree_to_json(tree).dump(2) + "\n"; break;
    case Format::Dot: body = tree_to_dot(tree); break;
    case Format::Text: body = tree_to_text(tree); break;
  }

  std::ostream* summary = &out;
  if (!cfg.out_path.empty()) {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + cfg.out_path + "'");
    file << body;
  } else {
    out << body;
    // Keep stdout machine-readable for json and dot.
    if (cfg.format != Format::Text) summary = &err;
  }
  *summary << "nodes: " << tree.size() << "\nlevels: " << tree.depth() + 1 << '\n';
  return kOk;
}

int cmd_trace(const std::string& word_text, const std::string& j_text, const Config& cfg,
              std::ostream& out) {
  const OperatorWord word = parse_word(word_text, cfg.parity_word);
  const Integer j = parse_nonnegative(j_text, "--j");
  const TreeNode node = walk(word);
  const Integer value = value_at(node.progression, j);
  const Integer seed = node.index_map.seed_at(j);
  const unsigned depth = node.depth;

  std::optional<bool> match;
  Integer oracle_value;
  if (seed >= 1) {
    oracle_value = run(seed, depth, StepVariant::Compact).steps.back();
    match = oracle_value == value;
  }

  if (cfg.format == Format::Json) {
    json j_out{{"word", word.str()},
               {"depth", depth},
               {"a", to_decimal(node.progression.a())},
               {"b", to_decimal(node.progression.b())},
               {"alpha", to_decimal(node.index_map.alpha)},
               {"beta", to_decimal(node.index_map.beta)},
               {"j", to_decimal(j)},
               {"value", to_decimal(value)},
               {"seed", to_decimal(seed)},
               {"density", to_decimal(density(word))},
               {"oracle_match", match ? json(*match) : json(nullptr)}};
    dump(out, j_out);
  } else {
    out << "word: " << word.str() << '\n'
        << "node: " << to_string(node.progression) << '\n'
        << "index map: " << to_string(node.index_map) << '\n'
        << "j: " << j << '\n'
        << "value: " << value << '\n'
        << "seed: " << seed << '\n'
        << "density: " << to_decimal(density(word)) << '\n';
    if (!match) {
      out << "oracle: skipped (seed 0 is not a Collatz seed)\n";
    } else {
      out << "oracle: " << (*match ? "match" : "MISMATCH") << " (compact step " << depth
          << " = " << oracle_value << ")\n";
    }
  }
  return match.value_or(true) ? kOk : kCheckFailed;
}

int cmd_odd_path(unsigned k, const Config& cfg, std::ostream& out) {
  const AllOddReport report = all_odd_path(k);
  if (cfg.format == Format::Json)
    dump(out, report_to_json(report));
  else
    out << report_to_text(report);
  return report.invariant_holds() ? kOk : kCheckFailed;
}

int cmd_cycles(unsigned depth, bool verify, bool all_pairs, bool integers, unsigned workers,
               const Config& cfg, std::ostream& out, std::ostream& err) {
  const Tree tree = build(depth, cfg.depth_limit);
  ScanOptions options;
  options.all_pairs = all_pairs;
  options.domain = integers ? IndexDomain::AllIntegers : IndexDomain::NonNegative;
  options.fallback_bound = parse_nonnegative(cfg.fallback_bound, "--fallback-bound");
  options.verify = verify;
  options.workers = workers;
  const ScanResult result = scan(tree, depth, options);

  if (cfg.format == Format::Json) {
    json list = solutions_to_json(result.solutions);
    if (!verify)
      for (json& rec : list) rec.erase("verified");
    dump(out, list);
  } else {
    out << "descendant\tancestor\tt\tx\ty\tvalue\tseed" << (verify ? "\tverified" : "") << '\n';
    for (const CycleSolution& s : result.solutions) {
      out << '"' << s.pair.descendant.word.str() << "\"\t\"" << s.pair.ancestor.word.str()
          << "\"\t" << s.pair.t << '\t' << s.x << '\t' << s.y << '\t' << s.value << '\t'
          << s.seed;
      if (verify) out << '\t' << (s.verified ? "yes" : "NO");
      out << '\n';
    }
    out << "solutions: " << result.solutions.size() << '\n';
  }
  err << "pairs examined: " << result.pairs_examined
      << ", degenerate: " << result.degenerate_pairs
      << ", zero-seed skipped: " << result.nonpositive_seed_skipped << '\n';

  const bool all_verified = std::all_of(result.solutions.begin(), result.solutions.end(),
                                        [](const CycleSolution& s) { return s.verified; });
  return !verify || all_verified ? kOk : kCheckFailed;
}

int cmd_verify(const std::string& seed_text, std::size_t steps, bool full, const Config& cfg,
               std::ostream& out) {
  const Integer seed = parse_nonnegative(seed_text, "--seed");
  if (seed < 1) throw UsageError("--seed must be >= 1");
  const Trajectory t = run(seed, steps, full ? StepVariant::Full : StepVariant::Compact);
  if (cfg.format == Format::Json) {
    json values = json::array();
    for (std::size_t i = 1; i < t.steps.size(); ++i) values.push_back(to_decimal(t.steps[i]));
    dump(out, {{"seed", to_decimal(seed)},
               {"variant", full ? "full" : "compact"},
               {"steps", std::move(values)}});
  } else {
    for (std::size_t i = 1; i < t.steps.size(); ++i) out << t.steps[i] << '\n';
  }
  return kOk;
}

int cmd_density(const std::string& word_text, const Config& cfg, std::ostream& out) {
  const OperatorWord word = parse_word(word_text, cfg.parity_word);
  const Progression seeds = seed_progression(word);
  if (cfg.format == Format::Json) {
    dump(out, {{"word", word.str()},
               {"density", to_decimal(density(word))},
               {"seed_alpha", to_decimal(seeds.a())},
               {"seed_beta", to_decimal(seeds.b())}});
  } else {
    out << "word: " << word.str() << '\n'
        << "seeds: " << to_string(seeds) << '\n'
        << "density: " << to_decimal(density(word)) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic Collatz dynamics on arithmetic progressions", "collatz-ap"};
  app.require_subcommand(1);
  Config cfg;

  auto add_format = [&cfg](CLI::App* sub, const std::map<std::string, Format>& allowed) {
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(allowed, CLI::ignore_case));
  };

  unsigned depth = 0;
  std::string word;
  std::string j_text;
  std::string seed_text;
  std::size_t steps = 0;
  bool verify = false;
  bool all_pairs = false;
  bool integers = false;
  bool full = false;
  bool compact = false;
  unsigned workers = 0;

  auto* build_cmd = app.add_subcommand("build", "Build the possibility tree and export it");
  build_cmd->add_option("--depth", depth, "Tree depth")->required();
  add_format(build_cmd, kAllFormats);
  build_cmd->add_option("--out", cfg.out_path, "Write the export to this file");
  build_cmd->add_option("--depth-limit", cfg.depth_limit, "Maximum allowed depth");

  auto* trace_cmd = app.add_subcommand("trace", "Trace a word and node index back to its seed");
  trace_cmd->add_option("--word", word, "Operator word over 1/2 (or e/o with --parity-word)")
      ->required();
  trace_cmd->add_option("--j", j_text, "Node-local index")->required();
  trace_cmd->add_flag("--parity-word", cfg.parity_word, "Read --word as e/o branch letters");
  add_format(trace_cmd, kTextJson);

  auto* odd_cmd = app.add_subcommand("odd-path", "Check the b = a - 1 invariant on the all-odd path");
  odd_cmd->add_option("--depth", depth, "Number of odd steps")->required();
  add_format(odd_cmd, kTextJson);

  auto* cycles_cmd = app.add_subcommand("cycles", "Scan node pairs for cycle solutions");
  cycles_cmd->add_option("--depth", depth, "Tree depth to scan")->required();
  cycles_cmd->add_flag("--verify", verify, "Confirm each solution with the compact oracle");
  cycles_cmd->add_flag("--all-pairs", all_pairs, "Pair nodes across branches, not only ancestors");
  cycles_cmd->add_flag("--integers", integers, "Accept negative x, y");
  cycles_cmd->add_option("--fallback-bound", cfg.fallback_bound,
                         "Search bound for zero-determinant pairs");
  cycles_cmd->add_option("--depth-limit", cfg.depth_limit, "Maximum allowed depth");
  cycles_cmd->add_option("--workers", workers, "Worker threads (0: all cores)");
  add_format(cycles_cmd, kTextJson);

  auto* verify_cmd = app.add_subcommand("verify", "Print a concrete Collatz trajectory");
  verify_cmd->add_option("--seed", seed_text, "Starting value (>= 1)")->required();
  verify_cmd->add_option("--steps", steps, "Number of steps")->required();
  auto* full_flag = verify_cmd->add_flag("--full", full, "Use n/2, 3n+1 steps");
  auto* compact_flag = verify_cmd->add_flag("--compact", compact, "Use n/2, (3n+1)/2 steps (default)");
  full_flag->excludes(compact_flag);
  add_format(verify_cmd, kTextJson);

  auto* density_cmd = app.add_subcommand("density", "Seed progression and density of a word");
  density_cmd->add_option("--word", word, "Operator word")->required();
  density_cmd->add_flag("--parity-word", cfg.parity_word, "Read --word as e/o branch letters");
  add_format(density_cmd, kTextJson);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (build_cmd->parsed()) return cmd_build(depth, cfg, out, err);
    if (trace_cmd->parsed()) return cmd_trace(word, j_text, cfg, out);
    if (odd_cmd->parsed()) return cmd_odd_path(depth, cfg, out);
    if (cycles_cmd->parsed())
      return cmd_cycles(depth, verify, all_pairs, integers, workers, cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(seed_text, steps, full, cfg, out);
    if (density_cmd->parsed()) return cmd_density(word, cfg, out);
  } catch (const DepthLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidWord& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kResourceLimit;
  }
  return kUsage;
}

}  // namespace collatz::cli
