#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "homdist/bits.hpp"
#include "homdist/homotopy.hpp"

namespace homdist {

// Exact minimum-cover machinery shared by the distance search (ideal
// lattice) and the simplicial search (facet-subset lattice).
//
// The lattice is explored top-down from `start`; children of a node are
// produced by the callback. A node whose predicate holds is a candidate
// cover set and is not descended further (the predicate is closed under
// the child relation, so only maximal candidates matter). The minimum
// cover of `universe` by candidates is then found by iterative deepening
// with a disjoint-elements lower bound; every cover size below the
// reported one has been exhaustively refuted.
//
// Budget-undecided nodes are treated as candidates for refutation
// purposes (sound: a superset of every true candidate is present) and
// excluded from the certificate search, so bounds stay valid either way.

struct CoverOutcome {
    Tri status = Tri::Budget;      // Yes: exact minimum found
    int min_cover_size = -1;       // exact on Yes; else best upper bound (-1: none)
    int refuted_below = 0;         // all covers of size <= this are impossible
    std::vector<Bits> cover;       // witness cover when found, canonical order
    std::vector<Bits> candidates;  // proven maximal cover sets
    std::uint64_t lattice_nodes = 0;
    bool descent_complete = true;
    bool predicate_budget_hit = false;
    bool cover_budget_hit = false;
};

using ChildrenFn = std::function<std::vector<Bits>(const Bits&)>;
using PredicateFn = std::function<Tri(const Bits&)>;

CoverOutcome minimum_cover(const Bits& universe, const Bits& start, const ChildrenFn& children,
                           const PredicateFn& predicate, std::uint64_t descent_budget,
                           std::uint64_t cover_budget, int threads = 1);

// exposed for tests
int disjoint_cover_lower_bound(const Bits& uncovered, const std::vector<Bits>& sets);

}  // namespace homdist
