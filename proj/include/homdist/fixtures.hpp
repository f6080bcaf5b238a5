#pragma once

#include "homdist/complexes.hpp"
#include "homdist/poset.hpp"

namespace homdist {
namespace fixtures {

// the 4-point circle model: minimal points a, b under maximal points x1, x2
PosetPtr circle4();

// 16-point torus model: circle4 x circle4, with product structure
PosetPtr torus16();

// the three self-maps of the torus model whose pairwise distances violate
// the triangle inequality: f = id, g = id x const, h = const
OrderMap torus_f();
OrderMap torus_g();
OrderMap torus_h();

// boundary of the triangle: vertices 0,1,2 and the three edges
ComplexPtr triangle_boundary();

}  // namespace fixtures
}  // namespace homdist
