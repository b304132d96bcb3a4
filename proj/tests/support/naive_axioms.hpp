#pragma once

#include "centlab/axioms.hpp"
#include "centlab/graph.hpp"
#include "centlab/measures.hpp"

namespace centlab::testing {

struct NaiveVerdict {
    CheckStatus status = CheckStatus::satisfied;
    bool vacuous = false;
};

/// Direct quantifier expansion of one axiom: every permutation, every node
/// pair, every injection is enumerated literally. Independent oracle for the
/// optimized checkers; shares only the value-comparison semantics.
NaiveVerdict naive_check(AxiomId axiom, const MeasureHandle &m, const Graph &g);

/// All-injections backtracking version of the dominating-matching test.
bool bruteforce_dominating_injection(const std::vector<Score> &a, const std::vector<Score> &b);

} // namespace centlab::testing
