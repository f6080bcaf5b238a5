#include <doctest.h>

#include "homdist/cohomology.hpp"
#include "homdist/distance.hpp"
#include "homdist/fixtures.hpp"
#include "oracles.hpp"

using namespace homdist;

TEST_CASE("order_complex of small spaces") {
    auto chain = build_poset({"a", "b"}, {{"a", "b"}});
    auto K = order_complex(*chain);
    REQUIRE(K->facets.size() == 1);
    CHECK(K->facets[0] == std::vector<int>{0, 1});

    auto point = build_poset({"p"}, {});
    auto Kp = order_complex(*point);
    REQUIRE(Kp->facets.size() == 1);
    CHECK(Kp->facets[0] == std::vector<int>{0});

    auto S = fixtures::circle4();
    auto Ks = order_complex(*S);
    CHECK(Ks->vertex_count() == 4);
    CHECK(Ks->facets.size() == 4);  // the 4-gon
    for (const auto& f : Ks->facets) CHECK(f.size() == 2);
}

TEST_CASE("induced_chain_map") {
    auto S = fixtures::circle4();
    auto id_vm = induced_chain_map(identity_map(S));
    for (int i = 0; i < 4; ++i) CHECK(id_vm[i] == i);
    auto c_vm = induced_chain_map(constant_map(S, S, 2));
    for (int i = 0; i < 4; ++i) CHECK(c_vm[i] == 2);
    auto T = fixtures::torus16();
    auto p1_vm = induced_chain_map(projection(T, 0));
    CHECK(p1_vm[T->index_of("(b,x2)")] == S->index_of("b"));
}

TEST_CASE("betti numbers of the circle and torus models") {
    CohomologyRingGF2 ring_s(order_complex(*fixtures::circle4()));
    CHECK(ring_s.betti() == std::vector<int>{1, 1});

    CohomologyRingGF2 ring_t(order_complex(*fixtures::torus16()));
    CHECK(ring_t.betti() == std::vector<int>{1, 2, 1});
}

TEST_CASE("torus cup structure") {
    CohomologyRingGF2 ring(order_complex(*fixtures::torus16()));
    ClassVector u = ring.basis_element(1, 0);
    ClassVector v = ring.basis_element(1, 1);
    CHECK_FALSE(ring.cup(u, v).is_zero());
    // over GF(2) the square of each generator of the torus vanishes
    CHECK(ring.cup(u, ring.zero(1)).is_zero());
    CHECK(ring.cup(ring.zero(1), v).is_zero());
}

TEST_CASE("coboundary squares to zero") {
    std::mt19937 rng(31);
    for (int t = 0; t < 15; ++t) {
        PosetPtr X = oracles::random_poset(rng, 6, false);
        CohomologyRingGF2 ring(order_complex(*X));
        for (int d = 0; d + 2 <= ring.top_dim(); ++d) {
            for (int s = 0; s < ring.simplex_count(d); ++s) {
                Bits e(ring.simplex_count(d));
                e.set(s);
                CHECK(ring.coboundary(d + 1, ring.coboundary(d, e)).none());
            }
        }
    }
}

TEST_CASE("pullback functoriality") {
    std::mt19937 rng(37);
    for (int t = 0; t < 12; ++t) {
        PosetPtr X = oracles::random_poset(rng, 5, false);
        PosetPtr Y = oracles::random_poset(rng, 5, false);
        PosetPtr Z = oracles::random_poset(rng, 5, false);
        OrderMap f = oracles::random_order_map(rng, X, Y);
        OrderMap g = oracles::random_order_map(rng, Y, Z);
        OrderMap gf = compose(f, g);
        CohomologyRingGF2 rx(order_complex(*X)), ry(order_complex(*Y)), rz(order_complex(*Z));
        CohomologyMap pf(ry, rx, induced_chain_map(f));
        CohomologyMap pg(rz, ry, induced_chain_map(g));
        CohomologyMap pgf(rz, rx, induced_chain_map(gf));
        for (int d = 0; d <= rz.top_nonzero(); ++d)
            for (int k = 0; k < rz.dim(d); ++k) {
                ClassVector u = rz.basis_element(d, k);
                CHECK(pgf.pull(u).coeffs == pf.pull(pg.pull(u)).coeffs);
            }
    }
}

TEST_CASE("pullback is a ring morphism on cohomology") {
    std::mt19937 rng(41);
    for (int t = 0; t < 12; ++t) {
        PosetPtr X = oracles::random_poset(rng, 5, false);
        PosetPtr Y = oracles::random_poset(rng, 5, false);
        OrderMap f = oracles::random_order_map(rng, X, Y);
        CohomologyRingGF2 rx(order_complex(*X)), ry(order_complex(*Y));
        CohomologyMap pf(ry, rx, induced_chain_map(f));
        for (int p = 0; p <= ry.top_nonzero(); ++p)
            for (int q = p; q <= ry.top_nonzero(); ++q)
                for (int i = 0; i < ry.dim(p); ++i)
                    for (int j = 0; j < ry.dim(q); ++j) {
                        ClassVector u = ry.basis_element(p, i);
                        ClassVector v = ry.basis_element(q, j);
                        ClassVector lhs = pf.pull(ry.cup(u, v));
                        ClassVector rhs = rx.cup(pf.pull(u), pf.pull(v));
                        CHECK(lhs.coeffs == rhs.coeffs);
                    }
    }
}

TEST_CASE("homotopic maps induce equal pullbacks") {
    std::mt19937 rng(43);
    int done = 0;
    while (done < 10) {
        PosetPtr X = oracles::random_poset(rng, 5, false);
        PosetPtr Y = oracles::random_poset(rng, 4, false);
        OrderMap f = oracles::random_order_map(rng, X, Y);
        OrderMap g = oracles::random_order_map(rng, X, Y);
        if (homotopic(f, g).status != Tri::Yes) continue;
        ++done;
        CohomologyRingGF2 rx(order_complex(*X)), ry(order_complex(*Y));
        CohomologyMap pf(ry, rx, induced_chain_map(f));
        CohomologyMap pg(ry, rx, induced_chain_map(g));
        for (int d = 0; d <= ry.top_nonzero(); ++d)
            for (int k = 0; k < ry.dim(d); ++k) {
                ClassVector u = ry.basis_element(d, k);
                CHECK(pf.pull(u).coeffs == pg.pull(u).coeffs);
            }
    }
}

TEST_CASE("lcp_J of equal maps is zero") {
    auto S = fixtures::circle4();
    OrderMap id = identity_map(S);
    CHECK(lcp_J(id, id).value == 0);
}

TEST_CASE("lcp_J on the circle: identity vs constant") {
    auto S = fixtures::circle4();
    auto r = lcp_J(identity_map(S), constant_map(S, S, 0));
    CHECK(r.value == 1);
    CHECK_FALSE(r.capped);
    CHECK(r.value <= cat(S, 0).value);
}

TEST_CASE("lcp_J on the torus: identity vs constant") {
    auto T = fixtures::torus16();
    auto r = lcp_J(fixtures::torus_f(), fixtures::torus_h());
    CHECK(r.value == 2);
    CHECK(r.witness_degrees == std::vector<int>{1, 1});
}

TEST_CASE("lcp_J never exceeds the space cup length or the distance") {
    std::mt19937 rng(47);
    for (int t = 0; t < 10; ++t) {
        PosetPtr X = oracles::random_poset(rng, 5, true);
        PosetPtr Y = oracles::random_poset(rng, 4, true);
        OrderMap f = oracles::random_order_map(rng, X, Y);
        OrderMap g = oracles::random_order_map(rng, X, Y);
        auto bound = lcp_J(f, g);
        auto space_bound = lcp_space(X);
        CHECK(bound.value <= space_bound.value);
        auto d = distance({f, g});
        if (d.kind == DistanceValue::Kind::Finite) CHECK(bound.value <= d.value);
    }
}
