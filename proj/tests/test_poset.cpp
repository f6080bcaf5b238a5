#include <doctest.h>

#include "homdist/fixtures.hpp"
#include "homdist/homotopy.hpp"
#include "homdist/poset.hpp"
#include "oracles.hpp"

using namespace homdist;

TEST_CASE("build_poset basics") {
    auto point = build_poset({"p"}, {});
    CHECK(point->size() == 1);
    CHECK(point->leq(0, 0));

    auto S = fixtures::circle4();
    CHECK(S->size() == 4);
    CHECK(S->leq(S->index_of("a"), S->index_of("x1")));
    CHECK(S->leq(S->index_of("b"), S->index_of("x2")));
    CHECK_FALSE(S->leq(S->index_of("a"), S->index_of("b")));
    CHECK_FALSE(S->leq(S->index_of("x1"), S->index_of("x2")));

    CHECK_THROWS_AS(build_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
    CHECK_THROWS_AS(build_poset({"a"}, {{"a", "zz"}}), Error);
    CHECK_THROWS_AS(build_poset({"a", "a"}, {}), Error);
}

TEST_CASE("build_poset takes the transitive closure") {
    auto chain = build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(chain->leq(0, 2));
    CHECK(chain->covers_up(0) == std::vector<int>{1});
}

TEST_CASE("minimal_open") {
    auto S = fixtures::circle4();
    Ideal u = minimal_open(S, std::string("x1"));
    CHECK(u.count() == 3);
    CHECK(u.members.test(S->index_of("a")));
    CHECK(u.members.test(S->index_of("b")));
    CHECK(u.members.test(S->index_of("x1")));
    CHECK_FALSE(u.members.test(S->index_of("x2")));

    auto point = build_poset({"p"}, {});
    CHECK(minimal_open(point, 0).count() == 1);

    auto chain = build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(minimal_open(chain, std::string("c")).count() == 3);

    CHECK_THROWS_AS(minimal_open(S, std::string("nope")), Error);
}

TEST_CASE("product of the circle with itself") {
    auto S = fixtures::circle4();
    auto T = product({S, S});
    CHECK(T->size() == 16);
    CHECK(T->is_product());

    // componentwise order
    int aa = T->index_of("(a,a)");
    int ax1 = T->index_of("(a,x1)");
    int x1x1 = T->index_of("(x1,x1)");
    CHECK(T->leq(aa, ax1));
    CHECK(T->leq(ax1, x1x1));
    CHECK_FALSE(T->leq(T->index_of("(a,x1)"), T->index_of("(a,x2)")));

    // minimal opens multiply
    auto S_ideals_x1 = minimal_open(S, std::string("x1"));
    Ideal prod_open = minimal_open(T, std::string("(x1,x1)"));
    CHECK(prod_open.count() == S_ideals_x1.count() * S_ideals_x1.count());
    for (int i = 0; i < S->size(); ++i)
        for (int j = 0; j < S->size(); ++j) {
            bool in_product = prod_open.members.test(i * 4 + j);
            bool expected = S_ideals_x1.members.test(i) && S_ideals_x1.members.test(j);
            CHECK(in_product == expected);
        }
}

TEST_CASE("product with a point is the other factor") {
    auto point = build_poset({"p"}, {});
    auto S = fixtures::circle4();
    auto P = product({point, S});
    REQUIRE(P->size() == S->size());
    CHECK(oracles::isomorphic(*P, *S));
}

TEST_CASE("minimal opens multiply on all pairs") {
    auto S = fixtures::circle4();
    auto chain = build_poset({"u", "v"}, {{"u", "v"}});
    auto P = product({S, chain});
    for (int i = 0; i < S->size(); ++i)
        for (int j = 0; j < chain->size(); ++j) {
            Bits expected(P->size());
            for (int i2 = 0; i2 < S->size(); ++i2)
                for (int j2 = 0; j2 < chain->size(); ++j2)
                    if (S->leq(i2, i) && chain->leq(j2, j)) expected.set(i2 * chain->size() + j2);
            CHECK(P->down_set(i * chain->size() + j) == expected);
        }
}

TEST_CASE("projections are order maps") {
    auto S = fixtures::circle4();
    auto T = product({S, S});
    OrderMap p1 = projection(T, 0);
    OrderMap p2 = projection(T, 1);
    CHECK(p1(T->index_of("(a,x2)")) == S->index_of("a"));
    CHECK(p2(T->index_of("(a,x2)")) == S->index_of("x2"));
}

TEST_CASE("induced_subposet") {
    auto S = fixtures::circle4();
    Bits u(4);
    u.set(S->index_of("a"));
    u.set(S->index_of("b"));
    u.set(S->index_of("x1"));
    auto [sub, incl] = induced_subposet(S, u);
    CHECK(sub->size() == 3);
    // x1 is the maximum of the subspace
    int x1 = sub->index_of("x1");
    for (int i = 0; i < 3; ++i) CHECK(sub->leq(i, x1));

    auto [all, incl_all] = induced_subposet(S, Bits::full(4));
    CHECK(all->same_structure(*S));

    auto [empty, incl_empty] = induced_subposet(S, Bits(4));
    CHECK(empty->size() == 0);
}

TEST_CASE("ideals_enumerate on the circle") {
    auto S = fixtures::circle4();
    auto stream = ideals_enumerate(S);
    CHECK_FALSE(stream.budget_exceeded);
    REQUIRE(stream.ideals.size() == 7);
    // oracle: filtered power set
    auto expected = oracles::all_down_sets(*S);
    CHECK(expected.size() == 7);
    std::vector<Bits> got;
    for (const auto& ideal : stream.ideals) got.push_back(ideal.members);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
}

TEST_CASE("ideals_enumerate counts: chains and antichains") {
    auto chain = build_poset({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    CHECK(ideals_enumerate(chain).ideals.size() == 5);
    auto anti = build_poset({"a", "b", "c", "d"}, {});
    CHECK(ideals_enumerate(anti).ideals.size() == 16);
}

TEST_CASE("ideals_enumerate budget is a soft stop") {
    auto anti = build_poset({"a", "b", "c", "d", "e"}, {});
    auto stream = ideals_enumerate(anti, 10);
    CHECK(stream.budget_exceeded);
    CHECK(stream.ideals.size() == 10);
}

TEST_CASE("ideals_enumerate equals the power-set filter on random posets") {
    std::mt19937 rng(7);
    for (int t = 0; t < 25; ++t) {
        PosetPtr X = oracles::random_poset(rng, 6, false);
        auto got_stream = ideals_enumerate(X);
        std::vector<Bits> got;
        for (const auto& ideal : got_stream.ideals) got.push_back(ideal.members);
        auto expected = oracles::all_down_sets(*X);
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        CHECK(got == expected);
    }
}

TEST_CASE("minimal open is the intersection of ideals containing the point") {
    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        PosetPtr X = oracles::random_poset(rng, 6, false);
        auto ideals = oracles::all_down_sets(*X);
        for (int x = 0; x < X->size(); ++x) {
            Bits inter = Bits::full(X->size());
            for (const auto& ideal : ideals)
                if (ideal.test(x)) inter &= ideal;
            CHECK(inter == X->down_set(x));
        }
    }
}

TEST_CASE("connected_components") {
    auto S = fixtures::circle4();
    CHECK(connected_components(*S).size() == 1);
    auto two = build_poset({"p", "q"}, {});
    CHECK(connected_components(*two).size() == 2);
    auto T = fixtures::torus16();
    CHECK(connected_components(*T).size() == 1);
}

TEST_CASE("is_order_preserving and map plumbing") {
    auto S = fixtures::circle4();
    OrderMap id = identity_map(S);
    CHECK(is_order_preserving(*S, *S, id.values()));

    // swapping a <-> x1 breaks monotonicity
    std::vector<std::uint16_t> swapped = id.values();
    std::swap(swapped[S->index_of("a")], swapped[S->index_of("x1")]);
    CHECK_FALSE(is_order_preserving(*S, *S, swapped));
    CHECK_THROWS_AS(OrderMap(S, S, swapped), Error);

    OrderMap c = constant_map(S, S, S->index_of("x1"));
    OrderMap cc = compose(id, c);
    CHECK(cc == c);

    auto T = fixtures::torus16();
    Ideal strip(T, T->down_closure([&] {
        Bits b(T->size());
        for (int i = 0; i < T->size(); ++i)
            if (minimal_open(T, std::string("(x1,x1)")).members.test(i)) b.set(i);
        return b;
    }()));
    OrderMap incl = restrict_map(identity_map(T), strip);
    CHECK(incl.dom()->size() == strip.count());
    for (int i = 0; i < incl.dom()->size(); ++i)
        CHECK(incl.dom()->name_of(i) == T->name_of(incl(i)));
}

TEST_CASE("compose rejects mismatched spaces") {
    auto S = fixtures::circle4();
    auto point = build_poset({"p"}, {});
    OrderMap to_point = constant_map(S, point, 0);
    CHECK_THROWS_AS(compose(to_point, identity_map(S)), Error);
}

TEST_CASE("core of a chain is a point") {
    auto chain = build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CoreData cd = core(chain);
    CHECK(cd.core->size() == 1);
    CHECK(cd.removal_log.size() == 2);
    // retraction ∘ inclusion = id on the core
    for (int i = 0; i < cd.core->size(); ++i) CHECK(cd.retraction(cd.inclusion(i)) == i);
}

TEST_CASE("the circle has no beat points") {
    auto S = fixtures::circle4();
    CoreData cd = core(S);
    CHECK(cd.core->size() == 4);
    CHECK(cd.removal_log.empty());
}

TEST_CASE("core of circle x minimal-open collapses to the circle") {
    auto S = fixtures::circle4();
    auto U = build_poset({"a", "b", "x1"}, {{"a", "x1"}, {"b", "x1"}});
    auto P = product({S, U});
    CoreData cd = core(P);
    REQUIRE(cd.core->size() == 4);
    CHECK(oracles::isomorphic(*cd.core, *S));
}

TEST_CASE("core is idempotent and the identity fence is valid") {
    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
        PosetPtr X = oracles::random_poset(rng, 7, false);
        CoreData cd = core(X);
        CoreData cd2 = core(cd.core);
        CHECK(cd2.removal_log.empty());
        CHECK(oracles::isomorphic(*cd.core, *cd2.core));
        for (int i = 0; i < cd.core->size(); ++i) CHECK(cd.retraction(cd.inclusion(i)) == i);

        auto fence_maps = core_identity_fence(X, cd);
        Fence fence{fence_maps};
        OrderMap expected_start = identity_map(X);
        OrderMap expected_end = compose(cd.retraction, cd.inclusion);
        CHECK(valid_fence(fence, &expected_start, &expected_end));
    }
}

TEST_CASE("inclusion after retraction is homotopic to the identity") {
    std::mt19937 rng(29);
    for (int t = 0; t < 10; ++t) {
        PosetPtr X = oracles::random_poset(rng, 6, false);
        CoreData cd = core(X);
        OrderMap ir = compose(cd.retraction, cd.inclusion);
        auto verdict = homotopic(ir, identity_map(X));
        CHECK(verdict.status == Tri::Yes);
    }
}

TEST_CASE("empty poset is allowed") {
    auto empty = build_poset({}, {});
    CHECK(empty->size() == 0);
    CHECK(ideals_enumerate(empty).ideals.size() == 1);
    CHECK(connected_components(*empty).empty());
    CHECK_THROWS_AS(constant_map(fixtures::circle4(), empty, 0), Error);
}
