#include <doctest.h>

#include "homdist/fixtures.hpp"
#include "homdist/homotopy.hpp"
#include "oracles.hpp"

using namespace homdist;

namespace {
PosetPtr circle() { return fixtures::circle4(); }

PosetPtr minimal_open_space() {
    // U_{x1} of the circle as a space of its own
    return build_poset({"a", "b", "x1"}, {{"a", "x1"}, {"b", "x1"}});
}
}  // namespace

TEST_CASE("comparable") {
    auto U = minimal_open_space();
    OrderMap id = identity_map(U);
    OrderMap cx = constant_map(U, U, U->index_of("x1"));
    CHECK(comparable(id, cx));  // y <= x1 for every y

    auto S = circle();
    OrderMap ca = constant_map(S, S, S->index_of("a"));
    OrderMap cb = constant_map(S, S, S->index_of("b"));
    CHECK_FALSE(comparable(ca, cb));
    CHECK(comparable(ca, ca));

    CHECK_THROWS_AS(comparable(ca, id), Error);
}

TEST_CASE("one_point_neighbors") {
    auto S = circle();
    auto point = build_poset({"p"}, {});
    OrderMap to_point = constant_map(S, point, 0);
    CHECK(one_point_neighbors(to_point).empty());

    auto chain = build_poset({"a", "b"}, {{"a", "b"}});
    OrderMap id = identity_map(chain);
    auto nbs = one_point_neighbors(id);
    REQUIRE(nbs.size() == 2);
    CHECK(nbs[0] == constant_map(chain, chain, 1));  // a raised to b
    CHECK(nbs[1] == constant_map(chain, chain, 0));  // b lowered to a

    OrderMap ca = constant_map(S, S, S->index_of("a"));
    auto nbs2 = one_point_neighbors(ca);
    CHECK_FALSE(nbs2.empty());
    for (const auto& nb : nbs2) {
        int differs = 0;
        for (int i = 0; i < S->size(); ++i)
            if (nb(i) != ca(i)) ++differs;
        CHECK(differs == 1);
        CHECK(is_order_preserving(*S, *S, nb.values()));
    }
}

TEST_CASE("homotopic fast paths yield the stated fences") {
    auto S = circle();
    OrderMap id = identity_map(S);
    auto v = homotopic(id, id);
    CHECK(v.status == Tri::Yes);
    REQUIRE(v.fence.has_value());
    CHECK(v.fence->maps.size() == 1);

    auto U = minimal_open_space();
    OrderMap idU = identity_map(U);
    OrderMap cx = constant_map(U, U, U->index_of("x1"));
    auto v2 = homotopic(idU, cx);
    CHECK(v2.status == Tri::Yes);
    REQUIRE(v2.fence.has_value());
    CHECK(v2.fence->maps.size() == 2);
    CHECK(valid_fence(*v2.fence, &idU, &cx));
}

TEST_CASE("constants into the circle are homotopic through a fence") {
    auto S = circle();
    OrderMap ca = constant_map(S, S, S->index_of("a"));
    OrderMap cb = constant_map(S, S, S->index_of("b"));
    auto v = homotopic(ca, cb);
    CHECK(v.status == Tri::Yes);
    REQUIRE(v.fence.has_value());
    CHECK(valid_fence(*v.fence, &ca, &cb));
}

TEST_CASE("identity of the circle is not null-homotopic") {
    auto S = circle();
    auto v = homotopic(identity_map(S), constant_map(S, S, 0));
    CHECK(v.status == Tri::No);
}

TEST_CASE("budget exhaustion is a distinct outcome") {
    auto S = circle();
    OrderMap ca = constant_map(S, S, S->index_of("a"));
    OrderMap cb = constant_map(S, S, S->index_of("b"));
    HomotopyOptions opt;
    opt.budget = 2;  // only the endpoints fit
    opt.use_cores = false;
    auto v = homotopic(ca, cb, opt);
    CHECK(v.status == Tri::Budget);
}

TEST_CASE("one-point moves suffice along a linear extension, maximal first") {
    // for f <= g pointwise, raising values one point at a time from the top
    // of a linear extension stays order-preserving
    std::mt19937 rng(101);
    int cases = 0;
    while (cases < 40) {
        PosetPtr X = oracles::random_poset(rng, 5, false);
        PosetPtr Y = oracles::random_poset(rng, 4, false);
        OrderMap f = oracles::random_order_map(rng, X, Y);
        OrderMap g = oracles::random_order_map(rng, X, Y);
        bool le = true;
        for (int i = 0; i < X->size() && le; ++i) le = Y->leq(f(i), g(i));
        if (!le) continue;
        ++cases;
        // canonical order of generated posets is a linear extension; walk it
        // from the maximal end
        std::vector<std::uint16_t> cur = f.values();
        for (int i = X->size() - 1; i >= 0; --i) {
            cur[i] = g.values()[i];
            CHECK(is_order_preserving(*X, *Y, cur));
        }
        CHECK(homotopic(f, g).status == Tri::Yes);
    }
}

TEST_CASE("oracle equivalence on small random instances") {
    std::mt19937 rng(1234);
    for (int t = 0; t < 60; ++t) {
        PosetPtr X = oracles::random_poset(rng, 4, false);
        PosetPtr Y = oracles::random_poset(rng, 4, false);
        oracles::HomotopyOracle oracle(*X, *Y);
        if (oracle.maps.empty()) continue;
        OrderMap f = oracles::random_order_map(rng, X, Y);
        OrderMap g = oracles::random_order_map(rng, X, Y);
        bool expected = oracle.homotopic(f.values(), g.values());
        auto v = homotopic(f, g);
        REQUIRE(v.status != Tri::Budget);
        CHECK((v.status == Tri::Yes) == expected);
        if (v.status == Tri::Yes) CHECK(valid_fence(*v.fence, &f, &g));
    }
}

TEST_CASE("homotopic agrees with the oracle when the codomain is a product") {
    std::mt19937 rng(555);
    auto chain = build_poset({"u", "v"}, {{"u", "v"}});
    auto two = build_poset({"p", "q"}, {});
    PosetPtr Y = product({chain, two});
    for (int t = 0; t < 25; ++t) {
        PosetPtr X = oracles::random_poset(rng, 3, false);
        oracles::HomotopyOracle oracle(*X, *Y);
        OrderMap f = oracles::random_order_map(rng, X, Y);
        OrderMap g = oracles::random_order_map(rng, X, Y);
        bool expected = oracle.homotopic(f.values(), g.values());
        auto v = homotopic(f, g);
        REQUIRE(v.status != Tri::Budget);
        CHECK((v.status == Tri::Yes) == expected);
        if (v.status == Tri::Yes) CHECK(valid_fence(*v.fence, &f, &g));
    }
}

TEST_CASE("decision level equivalence relation") {
    std::mt19937 rng(77);
    for (int t = 0; t < 10; ++t) {
        PosetPtr X = oracles::random_poset(rng, 4, false);
        PosetPtr Y = oracles::random_poset(rng, 3, false);
        OrderMap f = oracles::random_order_map(rng, X, Y);
        OrderMap g = oracles::random_order_map(rng, X, Y);
        OrderMap h = oracles::random_order_map(rng, X, Y);
        CHECK(homotopic(f, f).status == Tri::Yes);
        CHECK(homotopic(f, g).status == homotopic(g, f).status);
        if (homotopic(f, g).status == Tri::Yes && homotopic(g, h).status == Tri::Yes)
            CHECK(homotopic(f, h).status == Tri::Yes);
    }
}

TEST_CASE("pointwise comparable maps are homotopic") {
    std::mt19937 rng(88);
    for (int t = 0; t < 30; ++t) {
        PosetPtr X = oracles::random_poset(rng, 5, false);
        PosetPtr Y = oracles::random_poset(rng, 4, false);
        OrderMap f = oracles::random_order_map(rng, X, Y);
        OrderMap g = oracles::random_order_map(rng, X, Y);
        if (!comparable(f, g)) continue;
        CHECK(homotopic(f, g).status == Tri::Yes);
    }
}

TEST_CASE("core reduction does not change verdicts") {
    std::mt19937 rng(99);
    for (int t = 0; t < 40; ++t) {
        PosetPtr X = oracles::random_poset(rng, 5, false);
        PosetPtr Y = oracles::random_poset(rng, 4, false);
        OrderMap f = oracles::random_order_map(rng, X, Y);
        OrderMap g = oracles::random_order_map(rng, X, Y);
        HomotopyOptions with, without;
        without.use_cores = false;
        auto a = homotopic(f, g, with);
        auto b = homotopic(f, g, without);
        REQUIRE(a.status != Tri::Budget);
        REQUIRE(b.status != Tri::Budget);
        CHECK(a.status == b.status);
        if (a.status == Tri::Yes) {
            CHECK(valid_fence(*a.fence, &f, &g));
            CHECK(valid_fence(*b.fence, &f, &g));
        }
    }
}

TEST_CASE("core reduction soundness against composed equivalences") {
    std::mt19937 rng(111);
    for (int t = 0; t < 20; ++t) {
        PosetPtr X = oracles::random_poset(rng, 5, false);
        PosetPtr Y = oracles::random_poset(rng, 4, false);
        OrderMap f = oracles::random_order_map(rng, X, Y);
        OrderMap g = oracles::random_order_map(rng, X, Y);
        CoreData cx = core(X);
        CoreData cy = core(Y);
        OrderMap fr = compose(compose(cx.inclusion, f), cy.retraction);
        OrderMap gr = compose(compose(cx.inclusion, g), cy.retraction);
        CHECK(homotopic(f, g).status == homotopic(fr, gr).status);
    }
}

TEST_CASE("is_homotopy_domain on minimal opens with connected codomain") {
    std::mt19937 rng(202);
    for (int t = 0; t < 20; ++t) {
        PosetPtr X = oracles::random_poset(rng, 5, false);
        PosetPtr Y = oracles::random_poset(rng, 4, true);
        OrderMap f = oracles::random_order_map(rng, X, Y);
        OrderMap g = oracles::random_order_map(rng, X, Y);
        for (int x = 0; x < X->size(); ++x) {
            auto v = is_homotopy_domain(minimal_open(X, x), {f, g});
            CHECK(v.status == Tri::Yes);
        }
    }
}

TEST_CASE("the strip over one half of the torus is a homotopy domain for id and id x const") {
    auto T = fixtures::torus16();
    OrderMap f = fixtures::torus_f();
    OrderMap g = fixtures::torus_g();
    // S x U_{x1}: second coordinate at most x1
    auto S = fixtures::circle4();
    Bits strip(T->size());
    for (int i = 0; i < T->size(); ++i)
        if (S->leq(i % 4, S->index_of("x1"))) strip.set(i);
    auto v = is_homotopy_domain(Ideal(T, strip), {f, g});
    REQUIRE(v.status == Tri::Yes);
    REQUIRE(v.fences.size() == 1);
    OrderMap rf = restrict_map(f, strip);
    OrderMap rg = restrict_map(g, strip);
    CHECK(valid_fence(v.fences[0], &rf, &rg));
}

TEST_CASE("the whole torus is not a homotopy domain for id and const") {
    auto T = fixtures::torus16();
    auto v = is_homotopy_domain(Ideal(T, Bits::full(T->size())),
                                {fixtures::torus_f(), fixtures::torus_h()});
    CHECK(v.status == Tri::No);
}

TEST_CASE("empty ideal is always a homotopy domain") {
    auto S = circle();
    auto v = is_homotopy_domain(Ideal(S, Bits(4)), {identity_map(S), constant_map(S, S, 0)});
    CHECK(v.status == Tri::Yes);
}
