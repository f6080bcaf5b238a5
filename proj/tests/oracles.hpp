#pragma once

// Brute-force oracles and random generators shared by the test suites.
// Everything here is independent of the search paths it checks: homotopy
// is decided by components of the full hom-poset comparability graph,
// ideals by filtering the power set, contiguity by transitive closure
// over all simplicial maps.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <doctest.h>

#include "homdist/complexes.hpp"
#include "homdist/poset.hpp"
#include "homdist/simplicial.hpp"

namespace oracles {

using namespace homdist;

// all order-preserving maps dom -> cod as value vectors, brute force
inline std::vector<std::vector<std::uint16_t>> all_order_maps(const FinitePoset& dom,
                                                              const FinitePoset& cod) {
    std::vector<std::vector<std::uint16_t>> out;
    const int n = dom.size();
    if (cod.size() == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    std::vector<std::uint16_t> vals(n, 0);
    while (true) {
        if (is_order_preserving(dom, cod, vals)) out.push_back(vals);
        int i = 0;
        while (i < n && vals[i] == cod.size() - 1) vals[i++] = 0;
        if (i == n) break;
        ++vals[i];
    }
    if (n == 0) out.push_back({});
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// homotopy oracle: components of the pointwise-comparability graph over
// ALL order maps dom -> cod
struct HomotopyOracle {
    std::vector<std::vector<std::uint16_t>> maps;
    UnionFind uf;

    HomotopyOracle(const FinitePoset& dom, const FinitePoset& cod)
        : maps(all_order_maps(dom, cod)), uf(int(maps.size())) {
        auto cmp = [&](const std::vector<std::uint16_t>& a, const std::vector<std::uint16_t>& b) {
            bool le = true, ge = true;
            for (std::size_t i = 0; i < a.size() && (le || ge); ++i) {
                le = le && cod.leq(a[i], b[i]);
                ge = ge && cod.leq(b[i], a[i]);
            }
            return le || ge;
        };
        for (std::size_t i = 0; i < maps.size(); ++i)
            for (std::size_t j = i + 1; j < maps.size(); ++j)
                if (cmp(maps[i], maps[j])) uf.unite(int(i), int(j));
    }
    int index_of(const std::vector<std::uint16_t>& v) const {
        auto it = std::find(maps.begin(), maps.end(), v);
        return it == maps.end() ? -1 : int(it - maps.begin());
    }
    bool homotopic(const std::vector<std::uint16_t>& f, const std::vector<std::uint16_t>& g) {
        int a = index_of(f), b = index_of(g);
        REQUIRE(a >= 0);
        REQUIRE(b >= 0);
        return uf.find(a) == uf.find(b);
    }
};

// every downward-closed subset by filtering the power set (|X| small)
inline std::vector<Bits> all_down_sets(const FinitePoset& X) {
    std::vector<Bits> out;
    const int n = X.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Bits b(n);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) b.set(i);
        if (X.is_down_closed(b)) out.push_back(b);
    }
    return out;
}

// brute-force poset isomorphism for tiny instances
inline bool isomorphic(const FinitePoset& A, const FinitePoset& B) {
    if (A.size() != B.size()) return false;
    const int n = A.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (A.leq(i, j) != B.leq(perm[i], perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---- random generators -------------------------------------------------

inline PosetPtr random_poset(std::mt19937& rng, int max_size, bool require_connected) {
    std::uniform_int_distribution<int> size_dist(1, max_size);
    std::uniform_real_distribution<double> p_dist(0.15, 0.6);
    for (int attempt = 0; attempt < 200; ++attempt) {
        const int n = size_dist(rng);
        const double p = p_dist(rng);
        std::vector<std::string> elems;
        for (int i = 0; i < n; ++i) elems.push_back("e" + std::to_string(i));
        std::vector<std::pair<std::string, std::string>> rels;
        std::bernoulli_distribution edge(p);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (edge(rng)) rels.emplace_back(elems[i], elems[j]);
        PosetPtr X = build_poset(elems, rels);
        if (!require_connected || is_connected(*X)) return X;
    }
    return build_poset({"e0"}, {});
}

// random order map built along the canonical order (a linear extension for
// generated posets); restarts when a partial assignment dead-ends
inline OrderMap random_order_map(std::mt19937& rng, const PosetPtr& dom, const PosetPtr& cod) {
    const int n = dom->size();
    for (int attempt = 0; attempt < 500; ++attempt) {
        std::vector<std::uint16_t> vals(n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            std::vector<int> options;
            for (int v = 0; v < cod->size(); ++v) {
                bool fits = true;
                for (int j = 0; j < i && fits; ++j) {
                    if (dom->leq(j, i) && !cod->leq(vals[j], v)) fits = false;
                    if (dom->leq(i, j) && !cod->leq(v, vals[j])) fits = false;
                }
                if (fits) options.push_back(v);
            }
            if (options.empty()) {
                ok = false;
                break;
            }
            vals[i] = std::uint16_t(options[std::uniform_int_distribution<int>(
                0, int(options.size()) - 1)(rng)]);
        }
        if (ok) return OrderMap(dom, cod, std::move(vals));
    }
    // fall back to a constant at a minimal... any element works only if cod
    // nonempty; the generators above only dead-end on adversarial orders
    return constant_map(dom, cod, 0);
}

// ---- simplicial oracles --------------------------------------------------

inline std::vector<std::vector<int>> all_simplicial_maps(const SimplicialComplexData& K,
                                                         const SimplicialComplexData& L) {
    std::vector<std::vector<int>> out;
    const int n = K.vertex_count();
    if (n == 0) return {{}};
    std::vector<int> vals(n, 0);
    auto simplicial = [&] {
        for (const auto& f : K.facets) {
            std::vector<int> img;
            for (int v : f) img.push_back(vals[v]);
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            if (!L.has_simplex(img)) return false;
        }
        return true;
    };
    while (true) {
        if (simplicial()) out.push_back(vals);
        int i = 0;
        while (i < n && vals[i] == L.vertex_count() - 1) vals[i++] = 0;
        if (i == n) break;
        ++vals[i];
    }
    return out;
}

// contiguity-class oracle: transitive closure of contiguity over all maps
struct ContiguityOracle {
    std::vector<std::vector<int>> maps;
    UnionFind uf;

    ContiguityOracle(const ComplexPtr& K, const ComplexPtr& L)
        : maps(all_simplicial_maps(*K, *L)), uf(int(maps.size())) {
        for (std::size_t i = 0; i < maps.size(); ++i)
            for (std::size_t j = i + 1; j < maps.size(); ++j) {
                SimplicialMapData a(K, L, maps[i]), b(K, L, maps[j]);
                if (contiguous(a, b)) uf.unite(int(i), int(j));
            }
    }
    bool same_class(const std::vector<int>& f, const std::vector<int>& g) {
        auto fi = std::find(maps.begin(), maps.end(), f);
        auto gi = std::find(maps.begin(), maps.end(), g);
        REQUIRE(fi != maps.end());
        REQUIRE(gi != maps.end());
        return uf.find(int(fi - maps.begin())) == uf.find(int(gi - maps.begin()));
    }
};

// random small complex: random facets over <= max_verts vertices
inline ComplexPtr random_complex(std::mt19937& rng, int max_verts) {
    std::uniform_int_distribution<int> nv_dist(1, max_verts);
    for (int attempt = 0; attempt < 100; ++attempt) {
        const int n = nv_dist(rng);
        std::vector<std::string> verts;
        for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
        std::uniform_int_distribution<int> nf_dist(1, 2 * n);
        std::uniform_int_distribution<int> fsz(1, std::min(3, n));
        std::vector<std::vector<int>> facets;
        const int nf = nf_dist(rng);
        std::vector<bool> used(n, false);
        for (int f = 0; f < nf; ++f) {
            int k = fsz(rng);
            std::vector<int> pool(n);
            std::iota(pool.begin(), pool.end(), 0);
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<int> facet(pool.begin(), pool.begin() + k);
            for (int v : facet) used[v] = true;
            facets.push_back(std::move(facet));
        }
        for (int v = 0; v < n; ++v)
            if (!used[v]) facets.push_back({v});
        return make_complex(std::move(verts), std::move(facets));
    }
    return make_complex({"v0"}, {{0}});
}

}  // namespace oracles
