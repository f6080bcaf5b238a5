#pragma once

#include <map>
#include <optional>
#include <vector>

#include "homdist/complexes.hpp"
#include "homdist/gf2.hpp"
#include "homdist/poset.hpp"

namespace homdist {

// homogeneous cohomology class, coordinates in the chosen degree basis
struct ClassVector {
    int degree = 0;
    Bits coeffs;

    bool is_zero() const { return coeffs.none(); }
};

// GF(2) simplicial cohomology of a complex, with the cup product on
// ordered cochains (front face / back face in the canonical vertex order).
class CohomologyRingGF2 {
public:
    explicit CohomologyRingGF2(ComplexPtr K);

    const ComplexPtr& complex() const { return complex_; }
    int top_dim() const { return int(simplices_.size()) - 1; }
    int top_nonzero() const;  // highest degree with dim > 0

    int dim(int degree) const;
    std::vector<int> betti() const;

    ClassVector zero(int degree) const;
    ClassVector basis_element(int degree, int k) const;
    ClassVector add(const ClassVector& u, const ClassVector& v) const;
    ClassVector cup(const ClassVector& u, const ClassVector& v) const;

    Bits representative(const ClassVector& u) const;       // a cocycle
    ClassVector class_of(int degree, const Bits& cocycle) const;
    bool is_cocycle(int degree, const Bits& cochain) const;

    int simplex_count(int degree) const;
    const std::vector<std::vector<int>>& simplices(int degree) const;
    int simplex_index(int degree, const std::vector<int>& sorted_verts) const;  // -1 if absent
    Bits coboundary(int degree, const Bits& cochain) const;  // C^d -> C^{d+1}

private:
    ComplexPtr complex_;
    std::vector<std::vector<std::vector<int>>> simplices_;      // per degree, sorted
    std::vector<std::map<std::vector<int>, int>> index_;        // simplex -> position
    std::vector<std::vector<std::vector<int>>> faces_;          // per degree d>=1: face indices
    std::vector<std::vector<Bits>> h_reps_;                     // basis representative cocycles
    std::vector<Gf2Solver> solvers_;                            // [reps | coboundaries]
};

// Induced morphism on cohomology along a simplicial vertex map
// dom_complex -> cod_complex; degenerate simplex images contribute zero.
class CohomologyMap {
public:
    CohomologyMap(const CohomologyRingGF2& cod_ring, const CohomologyRingGF2& dom_ring,
                  const std::vector<int>& vertex_map);

    // H^d(cod) -> H^d(dom)
    ClassVector pull(const ClassVector& u) const;

private:
    const CohomologyRingGF2& cod_;
    const CohomologyRingGF2& dom_;
    std::vector<std::vector<ClassVector>> basis_images_;
};

// Cup-length lower bound: the greatest number of factors in a nonzero
// product of positive-degree classes drawn from J = image(f* + g*), a
// lower bound for the homotopic distance. Factor degrees are limited to
// degree_budget; when some J-degree exceeds dim_cap only basis elements
// are combined there and the (still valid) bound is flagged.
struct LcpResult {
    int value = 0;
    bool capped = false;
    std::vector<int> witness_degrees;
};

LcpResult lcp_J(const OrderMap& f, const OrderMap& g, int degree_budget = 32, int dim_cap = 12);

// same search over the whole reduced cohomology of X (classical cup length)
LcpResult lcp_space(const PosetPtr& X, int degree_budget = 32, int dim_cap = 12);

}  // namespace homdist
