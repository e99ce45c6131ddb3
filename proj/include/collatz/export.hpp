#pragma once

#include "collatz/cycles.hpp"
#include "collatz/invariants.hpp"
#include "collatz/tree.hpp"

#include <json.hpp>

#include <string>

namespace collatz {

// Big integers are always written as decimal strings.

/// [{id, parent, depth, a, b, alpha, beta, word, branch}, ...] in id order.
nlohmann::json tree_to_json(const Tree& tree);

/// Graphviz digraph, one vertex per node, edges labelled "even"/"odd".
std::string tree_to_dot(const Tree& tree);

/// One line per level: "depth d: S(a,b)["word"] ...".
std::string tree_to_text(const Tree& tree);

nlohmann::json report_to_json(const AllOddReport& report);
std::string report_to_text(const AllOddReport& report);

/// {descendant_word, ancestor_word, t, x, y, value, seed, verified}
nlohmann::json solution_to_json(const CycleSolution& s);
nlohmann::json solutions_to_json(const std::vector<CycleSolution>& solutions);

}  // namespace collatz
