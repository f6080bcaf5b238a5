#include "homdist/homotopy.hpp"

#include <algorithm>
#include <unordered_map>

namespace homdist {

bool comparable(const OrderMap& f, const OrderMap& g) {
    if (!f.dom()->same_structure(*g.dom()) || !f.cod()->same_structure(*g.cod()))
        throw Error(Err::Mismatch, "comparable: maps have different spaces");
    const auto& Y = *f.cod();
    bool le = true, ge = true;
    for (int i = 0; i < f.dom()->size() && (le || ge); ++i) {
        le = le && Y.leq(f(i), g(i));
        ge = ge && Y.leq(g(i), f(i));
    }
    return le || ge;
}

bool valid_fence(const Fence& fence, const OrderMap* from, const OrderMap* to) {
    if (fence.maps.empty()) return false;
    for (const auto& m : fence.maps) {
        if (!m.dom()->same_structure(*fence.maps[0].dom())) return false;
        if (!m.cod()->same_structure(*fence.maps[0].cod())) return false;
        if (!is_order_preserving(*m.dom(), *m.cod(), m.values())) return false;
    }
    for (std::size_t i = 0; i + 1 < fence.maps.size(); ++i)
        if (!comparable(fence.maps[i], fence.maps[i + 1])) return false;
    if (from && !(fence.maps.front() == *from)) return false;
    if (to && !(fence.maps.back() == *to)) return false;
    return true;
}

namespace {

using Vals = std::vector<std::uint16_t>;

struct ValsHash {
    std::size_t operator()(const Vals& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// candidate replacement values per codomain element: comparable, distinct
std::vector<std::vector<std::uint16_t>> comparable_table(const FinitePoset& Y) {
    std::vector<std::vector<std::uint16_t>> t(Y.size());
    for (int v = 0; v < Y.size(); ++v)
        for (int w = 0; w < Y.size(); ++w)
            if (w != v && (Y.leq(v, w) || Y.leq(w, v))) t[v].push_back(std::uint16_t(w));
    return t;
}

// one-point moves, relying on cover-preservation == order-preservation
template <typename Fn>
void for_each_neighbor(const FinitePoset& dom, const FinitePoset& cod,
                       const std::vector<std::vector<std::uint16_t>>& cand, const Vals& h, Fn&& fn) {
    for (int p = 0; p < dom.size(); ++p) {
        for (std::uint16_t v : cand[h[p]]) {
            bool ok = true;
            for (int q : dom.covers_down(p))
                if (!cod.leq(h[q], v)) {
                    ok = false;
                    break;
                }
            if (ok)
                for (int q : dom.covers_up(p))
                    if (!cod.leq(v, h[q])) {
                        ok = false;
                        break;
                    }
            if (ok) fn(p, v);
        }
    }
}

struct BfsOutcome {
    Tri status = Tri::Budget;
    std::vector<Vals> path;  // from f to g on Yes (when requested)
};

// Bidirectional BFS between f and g in the hom-poset of maps dom -> cod.
// One-point moves reach everything comparability reaches: for f <= g the
// values can be raised one point at a time along a linear extension taken
// from maximal to minimal, staying order-preserving throughout.
BfsOutcome bfs_fence(const FinitePoset& dom, const FinitePoset& cod, const Vals& f, const Vals& g,
                     std::uint64_t& budget_left, bool want_path, std::uint64_t& explored) {
    BfsOutcome out;
    if (f == g) {
        out.status = Tri::Yes;
        if (want_path) out.path = {f};
        return out;
    }
    const auto cand = comparable_table(cod);
    using Parents = std::unordered_map<Vals, Vals, ValsHash>;
    Parents side[2];
    std::vector<Vals> frontier[2];
    side[0].emplace(f, Vals{});
    side[1].emplace(g, Vals{});
    frontier[0] = {f};
    frontier[1] = {g};
    if (budget_left < 2) {
        out.status = Tri::Budget;
        return out;
    }
    budget_left -= 2;
    explored += 2;

    auto build_path = [&](const Vals& meetA, const Vals& meetB) {
        // meetA in side 0 chain, meetB = meetA's neighbor already in side 1
        std::vector<Vals> left;
        for (Vals cur = meetA; !cur.empty(); cur = side[0][cur]) left.push_back(cur);
        std::reverse(left.begin(), left.end());
        for (Vals cur = meetB; !cur.empty(); cur = side[1][cur]) left.push_back(cur);
        return left;
    };

    while (true) {
        int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        if (frontier[s].empty()) {
            // component of that endpoint exhausted without meeting
            out.status = Tri::No;
            return out;
        }
        std::vector<Vals> next;
        for (const Vals& h : frontier[s]) {
            bool stop = false;
            for_each_neighbor(dom, cod, cand, h, [&](int p, std::uint16_t v) {
                if (stop) return;
                Vals nb = h;
                nb[p] = v;
                if (side[1 - s].count(nb)) {
                    out.status = Tri::Yes;
                    if (want_path) {
                        out.path = s == 0 ? build_path(h, nb) : build_path(nb, h);
                        // ensure nb itself sits between h and its side-(1-s) chain
                        // build_path(meetA, meetB) already walks both chains; insert
                        // the crossing edge by construction below
                    }
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
                    ++explored;
                    next.push_back(std::move(nb));
                }
            });
            if (stop) {
                if (out.status == Tri::Yes && want_path && out.path.empty()) out.path = {f, g};
                return out;
            }
        }
        frontier[s] = std::move(next);
    }
}

// factor coordinate of a product-codomain value
inline int factor_coord(const FinitePoset& prod, int v, int k) {
    return (v / prod.strides()[k]) % prod.factors()[k]->size();
}

Fence fence_from_path(const PosetPtr& dom, const PosetPtr& cod, const std::vector<Vals>& path) {
    Fence fence;
    fence.maps.reserve(path.size());
    for (const auto& vals : path) fence.maps.emplace_back(dom, cod, vals);
    return fence;
}

void append_dedup(std::vector<OrderMap>& out, OrderMap m) {
    if (!out.empty() && out.back() == m) return;
    out.push_back(std::move(m));
}

// f ~ g on X -> Y from a core-level path, through the equivalences
// id_Y ~ iY∘rY and id_X ~ iX∘rX.
Fence transport_fence(const OrderMap& f, const OrderMap& g, const CoreData& cdX, const CoreData& cdY,
                      const std::vector<Vals>& core_path) {
    const PosetPtr& X = f.dom();
    const PosetPtr& Y = f.cod();
    const auto G = core_identity_fence(Y, cdY);  // id_Y .. iY∘rY
    const auto H = core_identity_fence(X, cdX);  // id_X .. iX∘rX
    const int n = X->size();

    auto compose_left = [&](const OrderMap& yy, const OrderMap& m) {  // yy∘m, yy: Y->Y
        Vals v(n);
        for (int i = 0; i < n; ++i) v[i] = std::uint16_t(yy(m(i)));
        return OrderMap(X, Y, std::move(v));
    };
    auto compose_right = [&](const OrderMap& m, const OrderMap& xx) {  // m∘xx, xx: X->X
        Vals v(n);
        for (int i = 0; i < n; ++i) v[i] = std::uint16_t(m(xx(i)));
        return OrderMap(X, Y, std::move(v));
    };

    std::vector<OrderMap> maps;
    for (const auto& Gt : G) append_dedup(maps, compose_left(Gt, f));
    const OrderMap irf = maps.back();  // iY∘rY∘f
    for (const auto& Ht : H) append_dedup(maps, compose_right(irf, Ht));
    for (const auto& vals : core_path) {
        Vals v(n);
        for (int i = 0; i < n; ++i) v[i] = std::uint16_t(cdY.inclusion(vals[cdX.retraction(i)]));
        append_dedup(maps, OrderMap(X, Y, std::move(v)));
    }
    const OrderMap irg = [&] {
        Vals v(n);
        for (int i = 0; i < n; ++i) v[i] = std::uint16_t(cdY.inclusion(cdY.retraction(g(i))));
        return OrderMap(X, Y, std::move(v));
    }();
    for (auto it = H.rbegin(); it != H.rend(); ++it) append_dedup(maps, compose_right(irg, *it));
    for (auto it = G.rbegin(); it != G.rend(); ++it) append_dedup(maps, compose_left(*it, g));
    return Fence{std::move(maps)};
}

HomotopyVerdict homotopic_impl(const OrderMap& f, const OrderMap& g, const HomotopyOptions& opt,
                               std::uint64_t& budget_left, std::uint64_t& explored) {
    HomotopyVerdict out;
    if (f == g) {
        out.status = Tri::Yes;
        if (opt.want_fence) out.fence = Fence{{f}};
        return out;
    }
    if (comparable(f, g)) {
        out.status = Tri::Yes;
        if (opt.want_fence) out.fence = Fence{{f, g}};
        return out;
    }

    // maps into a product are homotopic iff they are factorwise homotopic;
    // the factor fences combine one coordinate at a time
    const PosetPtr& cod = f.cod();
    if (cod->is_product()) {
        const int m = int(cod->factors().size());
        std::vector<Fence> parts(m);
        for (int k = 0; k < m; ++k) {
            const auto& Fk = cod->factors()[k];
            Vals fv(f.dom()->size()), gv(f.dom()->size());
            for (int i = 0; i < f.dom()->size(); ++i) {
                fv[i] = std::uint16_t(factor_coord(*cod, f(i), k));
                gv[i] = std::uint16_t(factor_coord(*cod, g(i), k));
            }
            auto sub = homotopic_impl(OrderMap(f.dom(), Fk, std::move(fv)),
                                      OrderMap(f.dom(), Fk, std::move(gv)), opt, budget_left, explored);
            if (sub.status != Tri::Yes) {
                out.status = sub.status;
                return out;
            }
            if (opt.want_fence) parts[k] = std::move(*sub.fence);
        }
        out.status = Tri::Yes;
        if (opt.want_fence) {
            Fence fence;
            Vals cur = f.values();
            fence.maps.push_back(f);
            for (int k = 0; k < m; ++k) {
                const int stride = cod->strides()[k];
                const int sz = int(cod->factors()[k]->size());
                for (std::size_t s = 1; s < parts[k].maps.size(); ++s) {
                    const auto& step = parts[k].maps[s].values();
                    for (int i = 0; i < f.dom()->size(); ++i) {
                        int old = (cur[i] / stride) % sz;
                        cur[i] = std::uint16_t(cur[i] + (int(step[i]) - old) * stride);
                    }
                    if (!(fence.maps.back().values() == cur))
                        fence.maps.emplace_back(f.dom(), cod, cur);
                }
            }
            out.fence = std::move(fence);
        }
        return out;
    }

    if (opt.use_cores) {
        CoreData cdX = core(f.dom());
        CoreData cdY = core(cod);
        if (!cdX.removal_log.empty() || !cdY.removal_log.empty()) {
            const int nc = cdX.core->size();
            Vals fv(nc), gv(nc);
            for (int i = 0; i < nc; ++i) {
                fv[i] = std::uint16_t(cdY.retraction(f(cdX.inclusion(i))));
                gv[i] = std::uint16_t(cdY.retraction(g(cdX.inclusion(i))));
            }
            auto bfs = bfs_fence(*cdX.core, *cdY.core, fv, gv, budget_left, opt.want_fence, explored);
            out.status = bfs.status;
            if (bfs.status == Tri::Yes && opt.want_fence)
                out.fence = transport_fence(f, g, cdX, cdY, bfs.path);
            return out;
        }
    }

    auto bfs = bfs_fence(*f.dom(), *cod, f.values(), g.values(), budget_left, opt.want_fence, explored);
    out.status = bfs.status;
    if (bfs.status == Tri::Yes && opt.want_fence)
        out.fence = fence_from_path(f.dom(), cod, bfs.path);
    return out;
}

}  // namespace

std::vector<OrderMap> one_point_neighbors(const OrderMap& h) {
    const auto cand = comparable_table(*h.cod());
    std::vector<OrderMap> out;
    for_each_neighbor(*h.dom(), *h.cod(), cand, h.values(), [&](int p, std::uint16_t v) {
        Vals nb = h.values();
        nb[p] = v;
        out.emplace_back(h.dom(), h.cod(), std::move(nb));
    });
    return out;
}

HomotopyVerdict homotopic(const OrderMap& f, const OrderMap& g, const HomotopyOptions& opt) {
    if (!f.dom()->same_structure(*g.dom()) || !f.cod()->same_structure(*g.cod()))
        throw Error(Err::Mismatch, "homotopic: maps have different spaces");
    if (opt.budget < 1) throw Error(Err::Mismatch, "budget must be at least 1");
    std::uint64_t budget_left = opt.budget;
    std::uint64_t explored = 0;
    auto out = homotopic_impl(f, g, opt, budget_left, explored);
    out.explored = explored;
    return out;
}

namespace detail {
HomotopyVerdict homotopic_budgeted(const OrderMap& f, const OrderMap& g, const HomotopyOptions& opt,
                                   std::uint64_t& budget_left, std::uint64_t& explored) {
    return homotopic_impl(f, g, opt, budget_left, explored);
}
}  // namespace detail

DomainVerdict is_homotopy_domain(const Ideal& U, const std::vector<OrderMap>& maps,
                                 const HomotopyOptions& opt) {
    if (maps.size() < 2) throw Error(Err::Mismatch, "is_homotopy_domain: need at least two maps");
    for (const auto& m : maps) {
        if (!m.dom()->same_structure(*maps[0].dom()) || !m.cod()->same_structure(*maps[0].cod()))
            throw Error(Err::Mismatch, "is_homotopy_domain: maps have different spaces");
    }
    if (!U.space->same_structure(*maps[0].dom()))
        throw Error(Err::Mismatch, "is_homotopy_domain: ideal lives in a different space");

    auto [sub, incl] = induced_subposet(maps[0].dom(), U.members);
    std::vector<OrderMap> restricted;
    restricted.reserve(maps.size());
    for (const auto& m : maps) {
        Vals v(sub->size());
        for (int i = 0; i < sub->size(); ++i) v[i] = std::uint16_t(m(incl(i)));
        restricted.emplace_back(sub, m.cod(), std::move(v));
    }

    DomainVerdict out;
    out.status = Tri::Yes;
    std::uint64_t budget_left = opt.budget;
    for (std::size_t k = 1; k < maps.size(); ++k) {
        auto v = homotopic_impl(restricted[0], restricted[k], opt, budget_left, out.explored);
        if (v.status == Tri::No) {
            out.status = Tri::No;
            out.fences.clear();
            return out;
        }
        if (v.status == Tri::Budget) out.status = Tri::Budget;
        if (v.status == Tri::Yes && opt.want_fence && out.status == Tri::Yes)
            out.fences.push_back(std::move(*v.fence));
    }
    if (out.status != Tri::Yes) out.fences.clear();
    return out;
}

}  // namespace homdist
