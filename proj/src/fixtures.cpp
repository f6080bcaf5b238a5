#include "homdist/fixtures.hpp"

namespace homdist {
namespace fixtures {

PosetPtr circle4() {
    return build_poset({"a", "b", "x1", "x2"},
                       {{"a", "x1"}, {"a", "x2"}, {"b", "x1"}, {"b", "x2"}});
}

PosetPtr torus16() {
    static PosetPtr cached = [] {
        PosetPtr s = circle4();
        return product({s, s});
    }();
    return cached;
}

OrderMap torus_f() { return identity_map(torus16()); }

OrderMap torus_g() {
    // id x const: (s, t) -> (s, a)
    PosetPtr T = torus16();
    const int n = 4;
    std::vector<std::uint16_t> v(T->size());
    for (int i = 0; i < T->size(); ++i) v[i] = std::uint16_t((i / n) * n);
    return OrderMap(T, T, std::move(v));
}

OrderMap torus_h() { return constant_map(torus16(), torus16(), 0); }

ComplexPtr triangle_boundary() {
    return make_complex({"0", "1", "2"}, {{0, 1}, {1, 2}, {0, 2}});
}

}  // namespace fixtures
}  // namespace homdist
