#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homdist/homotopy.hpp"
#include "homdist/poset.hpp"

namespace homdist {

struct SearchBudgets {
    std::uint64_t ideals = 200'000;    // lattice nodes visited during the descent
    std::uint64_t bfs = 2'000'000;     // maps visited per homotopy-domain check
    std::uint64_t cover = 2'000'000;   // set-cover search nodes
};

struct DistanceOptions {
    bool use_cores = true;        // reduce the query through core equivalences
    bool want_certificate = true;
    int threads = 1;
};

// Witness for D <= n: n+1 ideals covering the domain, with fences joining
// all m restricted maps on each of them.
struct CoverCertificate {
    std::vector<Ideal> ideals;
    std::vector<std::vector<Fence>> fences;  // per ideal: fences maps[0]|U -> maps[k]|U
};

struct ExhaustionInfo {
    int refuted_covers_up_to = 0;  // every cover of at most this many ideals is refuted
    bool exhaustive = false;       // refutation ran over the complete candidate set
    std::uint64_t lattice_nodes = 0;
    std::size_t candidate_count = 0;
    std::optional<std::string> infinity_witness;  // element whose minimal open is no domain
};

struct DistanceValue {
    enum class Kind { Finite, Infinite, UnknownAtLeast };
    Kind kind = Kind::UnknownAtLeast;
    int value = 0;  // Finite: the exact distance; UnknownAtLeast: proven lower bound
    std::optional<CoverCertificate> certificate;
    ExhaustionInfo info;
    std::vector<std::string> budgets_hit;

    bool is_finite() const { return kind == Kind::Finite; }
};

// Exact homotopic distance D(f_1,...,f_m): the least n such that the common
// domain is covered by n+1 ideals on which all maps restrict to pairwise
// homotopic maps; Infinite when no such cover exists.
DistanceValue distance(const std::vector<OrderMap>& maps, const SearchBudgets& budgets = {},
                       const DistanceOptions& opts = {});

// cat(X) = D(id_X, const); requires X connected and nonempty.
DistanceValue cat(const PosetPtr& X, int basepoint, const SearchBudgets& budgets = {},
                  const DistanceOptions& opts = {});

// D of the two axis inclusions X -> X x X; equals cat(X) (cross-check route).
DistanceValue cat_via_inclusions(const PosetPtr& X, int basepoint, const SearchBudgets& budgets = {},
                                 const DistanceOptions& opts = {});

// least n with a cover by n+1 ideals whose cores are single points;
// not a homotopy invariant, so the query is never core-reduced
DistanceValue gcat(const PosetPtr& X, const SearchBudgets& budgets = {},
                   const DistanceOptions& opts = {});

// TC(X) = D(p1, p2) on X x X; TC_m via the m projections of the m-fold product.
DistanceValue tc(const PosetPtr& X, const SearchBudgets& budgets = {},
                 const DistanceOptions& opts = {});
DistanceValue tc_m(const PosetPtr& X, int m, const SearchBudgets& budgets = {},
                   const DistanceOptions& opts = {});

// Independent re-check of a certificate: cover property, ideal property,
// fence validity and endpoints. Never throws on malformed certificates;
// on failure `reason` (when given) receives a structured code.
bool verify_certificate(const std::vector<OrderMap>& maps, const CoverCertificate& cert,
                        int claimed_value, std::string* reason = nullptr);

}  // namespace homdist
