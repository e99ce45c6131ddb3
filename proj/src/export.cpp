#include "collatz/export.hpp"

#include <sstream>

namespace collatz {

using nlohmann::json;

json tree_to_json(const Tree& tree) {
  json out = json::array();
  for (const TreeNode& n : tree.nodes()) {
    json rec;
    rec["id"] = n.id.value;
    rec["parent"] = n.parent ? json(n.parent->value) : json(nullptr);
    rec["depth"] = n.depth;
    rec["a"] = to_decimal(n.progression.a());
    rec["b"] = to_decimal(n.progression.b());
    rec["alpha"] = to_decimal(n.index_map.alpha);
    rec["beta"] = to_decimal(n.index_map.beta);
    rec["word"] = n.word.str();
    rec["branch"] = n.branch ? json(std::string(to_string(*n.branch))) : json(nullptr);
    out.push_back(std::move(rec));
  }
  return out;
}

std::string tree_to_dot(const Tree& tree) {
  std::ostringstream os;
  os << "digraph collatz {\n  node [shape=box];\n";
  for (const TreeNode& n : tree.nodes()) {
    os << "  n" << n.id.value << " [label=\"" << to_string(n.progression) << "\\n"
       << to_string(n.index_map) << "\\n" << n.word.str() << "\"];\n";
  }
  for (const TreeNode& n : tree.nodes()) {
    if (!n.parent) continue;
    os << "  n" << n.parent->value << " -> n" << n.id.value << " [label=\""
       << to_string(*n.branch) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string tree_to_text(const Tree& tree) {
  std::ostringstream os;
  for (unsigned d = 0; d <= tree.depth(); ++d) {
    os << "depth " << d << ":";
    for (const TreeNode& n : tree.level(d))
      os << ' ' << to_string(n.progression) << "[\"" << n.word.str() << "\"]";
    os << '\n';
  }
  return os.str();
}

json report_to_json(const AllOddReport& report) {
  json levels = json::array();
  for (const AllOddLevel& l : report.levels) {
    levels.push_back({{"depth", l.depth},
                      {"a", to_decimal(l.progression.a())},
                      {"b", to_decimal(l.progression.b())},
                      {"alpha", to_decimal(l.index_map.alpha)},
                      {"beta", to_decimal(l.index_map.beta)},
                      {"invariant_holds", l.holds()}});
  }
  return {{"depth", report.depth},
          {"levels", std::move(levels)},
          {"min_seed", to_decimal(report.min_seed)},
          {"violations", report.violations()}};
}

std::string report_to_text(const AllOddReport& report) {
  std::ostringstream os;
  os << "depth\ta\tb\tmap\tmin_seed\tb=a-1\n";
  for (const AllOddLevel& l : report.levels) {
    os << l.depth << '\t' << l.progression.a() << '\t' << l.progression.b() << '\t'
       << to_string(l.index_map) << '\t' << l.index_map.beta << '\t'
       << (l.holds() ? "ok" : "VIOLATED") << '\n';
  }
  os << "violations: " << report.violations() << '\n';
  return os.str();
}

json solution_to_json(const CycleSolution& s) {
  return {{"descendant_word", s.pair.descendant.word.str()},
          {"ancestor_word", s.pair.ancestor.word.str()},
          {"t", s.pair.t},
          {"x", to_decimal(s.x)},
          {"y", to_decimal(s.y)},
          {"value", to_decimal(s.value)},
          {"seed", to_decimal(s.seed)},
          {"verified", s.verified}};
}

json solutions_to_json(const std::vector<CycleSolution>& solutions) {
  json out = json::array();
  for (const CycleSolution& s : solutions) out.push_back(solution_to_json(s));
  return out;
}

}  // namespace collatz
