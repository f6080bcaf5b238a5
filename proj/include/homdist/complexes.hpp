#pragma once

#include <memory>
#include <string>
#include <vector>

#include "homdist/poset.hpp"

namespace homdist {

// Abstract simplicial complex given by its inclusion-maximal faces.
// Vertex order is the canonical order used for ordered-cochain formulas.
struct SimplicialComplexData {
    std::vector<std::string> vertices;
    std::vector<std::vector<int>> facets;  // sorted vertex positions

    int vertex_count() const { return int(vertices.size()); }
    int vertex_index(const std::string& name) const;
    bool has_simplex(const std::vector<int>& sorted_verts) const;  // subset of some facet
};

using ComplexPtr = std::shared_ptr<const SimplicialComplexData>;

// Normalizes: sorts facet vertex lists, removes duplicates and non-maximal
// facets; every vertex must occur in some facet.
ComplexPtr make_complex(std::vector<std::string> vertices,
                        std::vector<std::vector<int>> facets);
ComplexPtr make_complex_named(std::vector<std::string> vertices,
                              const std::vector<std::vector<std::string>>& facets);

// Simplices = nonempty chains of X; realizes the weak homotopy type of X.
ComplexPtr order_complex(const FinitePoset& X);

// Vertex map on order complexes induced by an order map (equal to f on
// points; chains go to chains, collapses allowed).
std::vector<int> induced_chain_map(const OrderMap& f);

// Categorical product: a vertex set is a simplex iff both coordinate
// projections are simplices. Facets are products of facets, so the result
// is dense; a vertex cap guards the blow-up.
struct ProductComplex {
    ComplexPtr complex;
    std::vector<int> proj1, proj2;  // vertex maps onto the factors
};
ProductComplex categorical_product(const SimplicialComplexData& K, const SimplicialComplexData& L,
                                   int vertex_cap = 64);

bool same_complex(const SimplicialComplexData& a, const SimplicialComplexData& b);

}  // namespace homdist
