#include "collatz/cycles.hpp"

#include "collatz/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace collatz {

CycleEnd cycle_end(const TreeNode& n) {
  return {n.id, n.depth, n.progression, n.index_map, n.word};
}

CyclePair make_cycle_pair(const TreeNode& deeper, const TreeNode& shallower) {
  if (deeper.depth <= shallower.depth)
    throw std::invalid_argument("cycle pair needs the first node strictly deeper");
  return {cycle_end(deeper), cycle_end(shallower), deeper.depth - shallower.depth};
}

Integer determinant(const CyclePair& p) {
  const auto& d = p.descendant;
  const auto& a = p.ancestor;
  return d.progression.a() * a.index_map.alpha - a.progression.a() * d.index_map.alpha;
}

namespace {

bool admissible(const Integer& v, IndexDomain domain) {
  return domain == IndexDomain::AllIntegers || v >= 0;
}

}  // namespace

PairOutcome solve_pair(const CyclePair& p, IndexDomain domain) {
  const Integer& a1 = p.descendant.progression.a();
  const Integer& b1 = p.descendant.progression.b();
  const Integer& alpha1 = p.descendant.index_map.alpha;
  const Integer& beta1 = p.descendant.index_map.beta;
  const Integer& a2 = p.ancestor.progression.a();
  const Integer& b2 = p.ancestor.progression.b();
  const Integer& alpha2 = p.ancestor.index_map.alpha;
  const Integer& beta2 = p.ancestor.index_map.beta;

  const Integer det = a1 * alpha2 - a2 * alpha1;
  if (det == 0) return Degenerate{};

  const Integer x_num = a2 * (beta1 - beta2) + alpha2 * (b2 - b1);
  const Integer y_num = a1 * (beta1 - beta2) + alpha1 * (b2 - b1);
  if (x_num % det != 0 || y_num % det != 0) return NoSolution{};

  UniqueSolution s{x_num / det, y_num / det};
  if (!admissible(s.x, domain) || !admissible(s.y, domain)) return NoSolution{};
  return s;
}

std::optional<UniqueSolution> search_bounded(const CyclePair& p, const Integer& bound,
                                             IndexDomain domain) {
  const auto& d = p.descendant;
  const auto& a = p.ancestor;
  // The seed equation fixes y for each x; the value equation then confirms.
  for (Integer x = 0; x <= bound; ++x) {
    const Integer rhs = d.index_map.seed_at(x) - a.index_map.beta;
    if (rhs % a.index_map.alpha != 0) continue;
    const Integer y = rhs / a.index_map.alpha;
    if (!admissible(y, domain)) continue;
    if (value_at(d.progression, x) == a.progression.b() + a.progression.a() * y)
      return UniqueSolution{x, y};
  }
  return std::nullopt;
}

bool verify_solution(const CycleSolution& s) {
  if (s.seed < 1) return false;
  const unsigned deep = s.pair.descendant.depth;
  const unsigned shallow = s.pair.ancestor.depth;
  const Trajectory traj = run(s.seed, deep, StepVariant::Compact);
  return traj.steps[deep] == s.value && traj.steps[shallow] == s.value;
}

namespace {

struct WorkerOutput {
  std::vector<CycleSolution> solutions;
  std::size_t pairs{0};
  std::size_t degenerate{0};
  std::size_t skipped{0};
};

void consider(const TreeNode& deeper, const TreeNode& shallower, const ScanOptions& options,
              WorkerOutput& out) {
  CyclePair pair = make_cycle_pair(deeper, shallower);
  ++out.pairs;

  std::optional<UniqueSolution> found;
  const PairOutcome outcome = solve_pair(pair, options.domain);
  if (const auto* unique = std::get_if<UniqueSolution>(&outcome)) {
    found = *unique;
  } else if (std::holds_alternative<Degenerate>(outcome)) {
    ++out.degenerate;
    found = search_bounded(pair, options.fallback_bound, options.domain);
  }
  if (!found) return;

  CycleSolution s;
  s.value = value_at(pair.descendant.progression, found->x);
  s.seed = pair.descendant.index_map.seed_at(found->x);
  s.x = std::move(found->x);
  s.y = std::move(found->y);
  s.pair = std::move(pair);
  if (s.seed < 1) {
    ++out.skipped;
    return;
  }
  s.verified = options.verify && verify_solution(s);
  out.solutions.push_back(std::move(s));
}

}  // namespace

ScanResult scan(const Tree& tree, unsigned max_depth, const ScanOptions& options) {
  if (max_depth > tree.depth()) {
    throw DepthLimitExceeded("scan depth " + std::to_string(max_depth) +
                             " exceeds built tree depth " + std::to_string(tree.depth()));
  }
  const std::size_t node_count = (std::size_t{2} << max_depth) - 1;
  const auto nodes = tree.nodes().first(node_count);

  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, 64);

  std::vector<WorkerOutput> outputs(workers);
  auto work = [&](unsigned w) {
    for (std::size_t k = 1 + w; k < nodes.size(); k += workers) {
      const TreeNode& deeper = nodes[k];
      if (options.all_pairs) {
        const std::size_t level_start = (std::size_t{1} << deeper.depth) - 1;
        for (std::size_t s = 0; s < level_start; ++s) consider(deeper, nodes[s], options, outputs[w]);
      } else {
        for (NodeId a : tree.ancestors(deeper.id)) consider(deeper, tree.node(a), options, outputs[w]);
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  ScanResult result;
  for (WorkerOutput& o : outputs) {
    result.pairs_examined += o.pairs;
    result.degenerate_pairs += o.degenerate;
    result.nonpositive_seed_skipped += o.skipped;
    std::move(o.solutions.begin(), o.solutions.end(), std::back_inserter(result.solutions));
  }
  std::sort(result.solutions.begin(), result.solutions.end(),
            [](const CycleSolution& l, const CycleSolution& r) {
              return std::tuple(l.pair.descendant.id, l.pair.t, l.pair.ancestor.id) <
                     std::tuple(r.pair.descendant.id, r.pair.t, r.pair.ancestor.id);
            });
  return result;
}

}  // namespace collatz
