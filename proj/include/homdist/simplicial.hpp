#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homdist/complexes.hpp"
#include "homdist/homotopy.hpp"  // Tri

namespace homdist {

// simplicial map as a total vertex assignment; simplex images may collapse
class SimplicialMapData {
public:
    SimplicialMapData() = default;
    SimplicialMapData(ComplexPtr dom, ComplexPtr cod, std::vector<int> vertex_values);

    const ComplexPtr& dom() const { return dom_; }
    const ComplexPtr& cod() const { return cod_; }
    const std::vector<int>& values() const { return values_; }
    int operator()(int v) const { return values_[v]; }
    bool operator==(const SimplicialMapData& o) const;

private:
    ComplexPtr dom_, cod_;
    std::vector<int> values_;
};

SimplicialMapData identity_smap(const ComplexPtr& K);
SimplicialMapData constant_smap(const ComplexPtr& dom, const ComplexPtr& cod, int vertex);

// phi(sigma) ∪ psi(sigma) is a simplex of the codomain for every simplex
// (facets suffice; the condition is monotone under faces)
bool contiguous(const SimplicialMapData& phi, const SimplicialMapData& psi);

// chain of maps with consecutive entries contiguous
struct ContiguityFence {
    std::vector<SimplicialMapData> maps;
};
bool valid_contiguity_fence(const ContiguityFence& fence, const SimplicialMapData* from = nullptr,
                            const SimplicialMapData* to = nullptr);

struct ContiguityVerdict {
    Tri status = Tri::Budget;
    std::optional<ContiguityFence> fence;
    std::uint64_t explored = 0;
};

struct ContiguityOptions {
    std::uint64_t budget = 2'000'000;
    bool want_fence = true;
};

// Bidirectional BFS over one-vertex moves contiguous to the current map.
// One-vertex moves reach the whole contiguity class: mixtures of two
// contiguous maps are simplicial and pairwise contiguous, so every
// contiguity step splits into vertex steps.
ContiguityVerdict same_contiguity_class(const SimplicialMapData& phi, const SimplicialMapData& psi,
                                        const ContiguityOptions& opt = {});

// Witness for SD <= n: subcomplexes (facet subsets of the domain) covering
// every facet, with contiguity fences joining all maps on each.
struct SubcomplexCoverCertificate {
    std::vector<std::vector<int>> facet_sets;            // indices into dom facets
    std::vector<std::vector<ContiguityFence>> fences;    // per subcomplex: maps[0] -> maps[k]
};

struct SdValue {
    enum class Kind { Finite, Infinite, UnknownAtLeast };
    Kind kind = Kind::UnknownAtLeast;
    int value = 0;
    std::optional<SubcomplexCoverCertificate> certificate;
    std::vector<std::string> budgets_hit;
    int refuted_covers_up_to = 0;
    bool exhaustive = false;

    bool is_finite() const { return kind == Kind::Finite; }
};

struct SdBudgets {
    std::uint64_t subsets = 200'000;
    std::uint64_t bfs = 2'000'000;
    std::uint64_t cover = 2'000'000;
};

// Contiguity distance SD(phi_1,...,phi_m): least n with a cover of the
// domain by n+1 subcomplexes on which all maps lie in one contiguity
// class. Candidates are facet-generated subcomplexes, which suffices: the
// property passes to subcomplexes, and any qualifying cover member can be
// shrunk to the subcomplex generated by the domain facets it contains.
SdValue sd(const std::vector<SimplicialMapData>& maps, const SdBudgets& budgets = {},
           bool want_certificate = true, int threads = 1);

// simplicial LS-category: SD(id, constant at the canonical first vertex)
SdValue scat(const ComplexPtr& K, const SdBudgets& budgets = {}, bool want_certificate = true);
SdValue scat_at(const ComplexPtr& K, int vertex, const SdBudgets& budgets = {},
                bool want_certificate = true);

// discrete topological complexity: SD of the two projections K∏K -> K
SdValue dtc(const ComplexPtr& K, const SdBudgets& budgets = {}, bool want_certificate = true,
            int vertex_cap = 64);

}  // namespace homdist
