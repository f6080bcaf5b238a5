#include "homdist/simplicial.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "homdist/cover_search.hpp"

namespace homdist {

namespace {

std::vector<int> image_set(const std::vector<int>& verts, const std::vector<int>& values) {
    std::vector<int> img;
    img.reserve(verts.size());
    for (int v : verts) img.push_back(values[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

}  // namespace

SimplicialMapData::SimplicialMapData(ComplexPtr dom, ComplexPtr cod, std::vector<int> vertex_values)
    : dom_(std::move(dom)), cod_(std::move(cod)), values_(std::move(vertex_values)) {
    if (int(values_.size()) != dom_->vertex_count())
        throw Error(Err::Mismatch, "vertex assignment size mismatch");
    for (int v : values_)
        if (v < 0 || v >= cod_->vertex_count())
            throw Error(Err::UnknownElement, "vertex value out of range");
    for (const auto& f : dom_->facets)
        if (!cod_->has_simplex(image_set(f, values_)))
            throw Error(Err::Mismatch, "assignment does not send simplices to simplices");
}

bool SimplicialMapData::operator==(const SimplicialMapData& o) const {
    if (values_ != o.values_) return false;
    if (dom_ == o.dom_ && cod_ == o.cod_) return true;
    return same_complex(*dom_, *o.dom_) && same_complex(*cod_, *o.cod_);
}

SimplicialMapData identity_smap(const ComplexPtr& K) {
    std::vector<int> v(K->vertex_count());
    for (int i = 0; i < K->vertex_count(); ++i) v[i] = i;
    return SimplicialMapData(K, K, std::move(v));
}

SimplicialMapData constant_smap(const ComplexPtr& dom, const ComplexPtr& cod, int vertex) {
    if (vertex < 0 || vertex >= cod->vertex_count())
        throw Error(Err::UnknownElement, "constant vertex out of range");
    return SimplicialMapData(dom, cod, std::vector<int>(dom->vertex_count(), vertex));
}

bool contiguous(const SimplicialMapData& phi, const SimplicialMapData& psi) {
    if (!same_complex(*phi.dom(), *psi.dom()) || !same_complex(*phi.cod(), *psi.cod()))
        throw Error(Err::Mismatch, "contiguous: maps have different complexes");
    for (const auto& f : phi.dom()->facets) {
        std::vector<int> un = image_set(f, phi.values());
        for (int v : f) un.push_back(psi(v));
        std::sort(un.begin(), un.end());
        un.erase(std::unique(un.begin(), un.end()), un.end());
        if (!phi.cod()->has_simplex(un)) return false;
    }
    return true;
}

bool valid_contiguity_fence(const ContiguityFence& fence, const SimplicialMapData* from,
                            const SimplicialMapData* to) {
    if (fence.maps.empty()) return false;
    for (std::size_t i = 0; i + 1 < fence.maps.size(); ++i)
        if (!contiguous(fence.maps[i], fence.maps[i + 1])) return false;
    if (from && !(fence.maps.front() == *from)) return false;
    if (to && !(fence.maps.back() == *to)) return false;
    return true;
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= std::size_t(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// facets containing each vertex, for the one-vertex move check
std::vector<std::vector<int>> facets_at_vertex(const SimplicialComplexData& K) {
    std::vector<std::vector<int>> out(K.vertex_count());
    for (int f = 0; f < int(K.facets.size()); ++f)
        for (int v : K.facets[f]) out[v].push_back(f);
    return out;
}

// moving vertex v of h to w is valid iff h(sigma) ∪ {w} is a simplex for
// every facet sigma containing v; the moved map is then simplicial and
// contiguous to h
template <typename Fn>
void for_each_cmove(const SimplicialComplexData& K, const SimplicialComplexData& L,
                    const std::vector<std::vector<int>>& at_vertex, const std::vector<int>& h,
                    Fn&& fn) {
    for (int v = 0; v < K.vertex_count(); ++v) {
        for (int w = 0; w < L.vertex_count(); ++w) {
            if (w == h[v]) continue;
            bool ok = true;
            for (int f : at_vertex[v]) {
                std::vector<int> un = image_set(K.facets[f], h);
                un.push_back(w);
                std::sort(un.begin(), un.end());
                un.erase(std::unique(un.begin(), un.end()), un.end());
                if (!L.has_simplex(un)) {
                    ok = false;
                    break;
                }
            }
            if (ok) fn(v, w);
        }
    }
}

}  // namespace

ContiguityVerdict same_contiguity_class(const SimplicialMapData& phi, const SimplicialMapData& psi,
                                        const ContiguityOptions& opt) {
    if (!same_complex(*phi.dom(), *psi.dom()) || !same_complex(*phi.cod(), *psi.cod()))
        throw Error(Err::Mismatch, "same_contiguity_class: maps have different complexes");
    ContiguityVerdict out;
    if (phi == psi) {
        out.status = Tri::Yes;
        out.explored = 1;
        if (opt.want_fence) out.fence = ContiguityFence{{phi}};
        return out;
    }
    const auto& K = *phi.dom();
    const auto& L = *phi.cod();
    const auto at_vertex = facets_at_vertex(K);

    using Key = std::vector<int>;
    std::unordered_map<Key, Key, VecHash> side[2];
    std::vector<Key> frontier[2];
    side[0].emplace(phi.values(), Key{});
    side[1].emplace(psi.values(), Key{});
    frontier[0] = {phi.values()};
    frontier[1] = {psi.values()};
    std::uint64_t budget_left = opt.budget;
    if (budget_left < 2) return out;
    budget_left -= 2;
    out.explored = 2;

    auto make_fence = [&](const Key& meetA, const Key& meetB) {
        std::vector<Key> path;
        for (Key cur = meetA; !cur.empty(); cur = side[0].at(cur)) path.push_back(cur);
        std::reverse(path.begin(), path.end());
        for (Key cur = meetB; !cur.empty(); cur = side[1].at(cur)) path.push_back(cur);
        ContiguityFence fence;
        for (auto& vals : path) fence.maps.emplace_back(phi.dom(), phi.cod(), vals);
        return fence;
    };

    while (true) {
        int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        if (frontier[s].empty()) {
            out.status = Tri::No;
            return out;
        }
        std::vector<Key> next;
        for (const Key& h : frontier[s]) {
            bool stop = false;
            for_each_cmove(K, L, at_vertex, h, [&](int v, int w) {
                if (stop) return;
                Key nb = h;
                nb[v] = w;
                if (side[1 - s].count(nb)) {
                    out.status = Tri::Yes;
                    if (opt.want_fence) out.fence = s == 0 ? make_fence(h, nb) : make_fence(nb, h);
                    stop = true;
                    return;
                }
                if (side[s].emplace(nb, h).second) {
                    if (budget_left == 0) {
                        out.status = Tri::Budget;
                        stop = true;
                        return;
                    }
                    --budget_left;
                    ++out.explored;
                    next.push_back(std::move(nb));
                }
            });
            if (stop) return out;
        }
        frontier[s] = std::move(next);
    }
}

// ---- contiguity distance ------------------------------------------------

namespace {

struct Restriction {
    ComplexPtr sub;
    std::vector<int> vertex_of;  // sub vertex -> dom vertex
    std::vector<SimplicialMapData> maps;
};

Restriction restrict_to_facets(const std::vector<SimplicialMapData>& maps, const Bits& facet_set) {
    const auto& K = *maps[0].dom();
    std::set<int> verts;
    std::vector<std::vector<int>> facets;
    facet_set.for_each_set([&](int f) {
        facets.push_back(K.facets[f]);
        for (int v : K.facets[f]) verts.insert(v);
    });
    Restriction out;
    out.vertex_of.assign(verts.begin(), verts.end());
    std::vector<int> pos(K.vertex_count(), -1);
    std::vector<std::string> names;
    for (int i = 0; i < int(out.vertex_of.size()); ++i) {
        pos[out.vertex_of[i]] = i;
        names.push_back(K.vertices[out.vertex_of[i]]);
    }
    for (auto& f : facets)
        for (int& v : f) v = pos[v];
    out.sub = make_complex(std::move(names), std::move(facets));
    for (const auto& m : maps) {
        std::vector<int> vals(out.vertex_of.size());
        for (int i = 0; i < int(out.vertex_of.size()); ++i) vals[i] = m(out.vertex_of[i]);
        out.maps.emplace_back(out.sub, m.cod(), std::move(vals));
    }
    return out;
}

Tri subcomplex_domain_status(const std::vector<SimplicialMapData>& maps, const Bits& facet_set,
                             std::uint64_t bfs_budget) {
    Restriction r = restrict_to_facets(maps, facet_set);
    ContiguityOptions copt;
    copt.budget = bfs_budget;
    copt.want_fence = false;
    Tri agg = Tri::Yes;
    for (std::size_t k = 1; k < r.maps.size(); ++k) {
        auto v = same_contiguity_class(r.maps[0], r.maps[k], copt);
        if (v.status == Tri::No) return Tri::No;
        if (v.status == Tri::Budget) agg = Tri::Budget;
    }
    return agg;
}

}  // namespace

SdValue sd(const std::vector<SimplicialMapData>& maps, const SdBudgets& budgets,
           bool want_certificate, int threads) {
    if (maps.size() < 2) throw Error(Err::Mismatch, "sd: need at least two maps");
    for (const auto& m : maps)
        if (!same_complex(*m.dom(), *maps[0].dom()) || !same_complex(*m.cod(), *maps[0].cod()))
            throw Error(Err::Mismatch, "sd: maps have different complexes");
    const auto& K = *maps[0].dom();
    const int F = int(K.facets.size());
    SdValue out;
    if (F == 0) {
        out.kind = SdValue::Kind::Finite;
        out.value = 0;
        out.exhaustive = true;
        if (want_certificate) out.certificate = SubcomplexCoverCertificate{};
        return out;
    }

    // SD = infinity iff some single-facet subcomplex already fails: any
    // cover member containing that facet restricts to it
    bool precheck_budget = false;
    for (int f = 0; f < F; ++f) {
        Tri v = subcomplex_domain_status(maps, Bits::single(F, f), budgets.bfs);
        if (v == Tri::No) {
            out.kind = SdValue::Kind::Infinite;
            out.exhaustive = true;
            return out;
        }
        if (v == Tri::Budget) precheck_budget = true;
    }

    auto children = [&](const Bits& facet_set) {
        std::vector<Bits> ch;
        facet_set.for_each_set([&](int f) {
            Bits c = facet_set;
            c.reset(f);
            ch.push_back(std::move(c));
        });
        return ch;
    };
    auto predicate = [&](const Bits& facet_set) {
        return subcomplex_domain_status(maps, facet_set, budgets.bfs);
    };
    CoverOutcome cov = minimum_cover(Bits::full(F), Bits::full(F), children, predicate,
                                     budgets.subsets, budgets.cover, threads);

    if (cov.predicate_budget_hit || precheck_budget) out.budgets_hit.push_back("bfs");
    if (!cov.descent_complete) out.budgets_hit.push_back("subsets");
    if (cov.cover_budget_hit) out.budgets_hit.push_back("cover");
    out.refuted_covers_up_to = cov.refuted_below;
    out.exhaustive = cov.descent_complete && !cov.predicate_budget_hit && !cov.cover_budget_hit;

    if (cov.status == Tri::Yes) {
        out.kind = SdValue::Kind::Finite;
        out.value = cov.min_cover_size - 1;
        if (want_certificate) {
            SubcomplexCoverCertificate cert;
            ContiguityOptions copt;
            copt.budget = budgets.bfs;
            copt.want_fence = true;
            for (const auto& facet_set : cov.cover) {
                Restriction r = restrict_to_facets(maps, facet_set);
                std::vector<ContiguityFence> fences;
                for (std::size_t k = 1; k < r.maps.size(); ++k) {
                    auto v = same_contiguity_class(r.maps[0], r.maps[k], copt);
                    if (v.status != Tri::Yes) return out;  // drop certificate, value stands
                    fences.push_back(std::move(*v.fence));
                }
                cert.facet_sets.push_back(facet_set.to_indices());
                cert.fences.push_back(std::move(fences));
            }
            out.certificate = std::move(cert);
        }
        return out;
    }
    if (cov.status == Tri::No) {
        out.kind = SdValue::Kind::Infinite;
        return out;
    }
    out.kind = SdValue::Kind::UnknownAtLeast;
    out.value = cov.refuted_below;
    return out;
}

SdValue scat(const ComplexPtr& K, const SdBudgets& budgets, bool want_certificate) {
    return scat_at(K, 0, budgets, want_certificate);
}

SdValue scat_at(const ComplexPtr& K, int vertex, const SdBudgets& budgets, bool want_certificate) {
    if (K->vertex_count() == 0) throw Error(Err::Mismatch, "scat of the empty complex");
    return sd({identity_smap(K), constant_smap(K, K, vertex)}, budgets, want_certificate);
}

SdValue dtc(const ComplexPtr& K, const SdBudgets& budgets, bool want_certificate, int vertex_cap) {
    if (K->vertex_count() == 0) throw Error(Err::Mismatch, "dtc of the empty complex");
    ProductComplex KK = categorical_product(*K, *K, vertex_cap);
    SimplicialMapData p1(KK.complex, K, KK.proj1);
    SimplicialMapData p2(KK.complex, K, KK.proj2);
    return sd({p1, p2}, budgets, want_certificate);
}

}  // namespace homdist
