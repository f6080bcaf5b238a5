#include "homdist/distance.hpp"

#include <algorithm>

#include "homdist/cover_search.hpp"

namespace homdist {

namespace {

void validate_maps(const std::vector<OrderMap>& maps) {
    if (maps.size() < 2) throw Error(Err::Mismatch, "distance: need at least two maps");
    for (const auto& m : maps)
        if (!m.dom()->same_structure(*maps[0].dom()) || !m.cod()->same_structure(*maps[0].cod()))
            throw Error(Err::Mismatch, "distance: maps have different spaces");
}

DistanceValue trivial_empty_domain(const std::vector<OrderMap>& maps, bool want_certificate) {
    DistanceValue out;
    out.kind = DistanceValue::Kind::Finite;
    out.value = 0;
    out.info.exhaustive = true;
    if (want_certificate) {
        CoverCertificate cert;
        const PosetPtr& X = maps[0].dom();
        cert.ideals.emplace_back(X, Bits(X->size()));
        std::vector<Fence> fences;
        OrderMap empty_restriction = restrict_map(maps[0], Bits(X->size()));
        for (std::size_t k = 1; k < maps.size(); ++k) fences.push_back(Fence{{empty_restriction}});
        cert.fences.push_back(std::move(fences));
        out.certificate = std::move(cert);
    }
    return out;
}

DistanceValue distance_direct(const std::vector<OrderMap>& maps, const SearchBudgets& budgets,
                              const DistanceOptions& opts) {
    const PosetPtr& X = maps[0].dom();
    const int n = X->size();
    DistanceValue out;
    if (n == 0) return trivial_empty_domain(maps, opts.want_certificate);

    HomotopyOptions hopt;
    hopt.budget = budgets.bfs;
    hopt.use_cores = opts.use_cores;
    hopt.want_fence = false;

    // D = infinity iff some minimal open is not a homotopy domain: every
    // ideal containing x contains U_x, and domains are closed under open
    // subsets, so a failing U_x blocks every cover of x.
    bool precheck_budget = false;
    for (int x = 0; x < n; ++x) {
        auto v = is_homotopy_domain(Ideal(X, X->down_set(x)), maps, hopt);
        if (v.status == Tri::No) {
            out.kind = DistanceValue::Kind::Infinite;
            out.info.infinity_witness = X->name_of(x);
            out.info.exhaustive = true;
            return out;
        }
        if (v.status == Tri::Budget) precheck_budget = true;
    }

    auto children = [&](const Bits& ideal) {
        std::vector<Bits> out_children;
        for (int m : X->maximal_of(ideal)) {
            Bits c = ideal;
            c.reset(m);
            out_children.push_back(std::move(c));
        }
        return out_children;
    };
    auto predicate = [&](const Bits& ideal) {
        return is_homotopy_domain(Ideal(X, ideal), maps, hopt).status;
    };

    CoverOutcome cov = minimum_cover(Bits::full(n), Bits::full(n), children, predicate,
                                     budgets.ideals, budgets.cover, opts.threads);

    if (cov.predicate_budget_hit || precheck_budget) out.budgets_hit.push_back("bfs");
    if (!cov.descent_complete) out.budgets_hit.push_back("ideals");
    if (cov.cover_budget_hit) out.budgets_hit.push_back("cover");
    out.info.lattice_nodes = cov.lattice_nodes;
    out.info.candidate_count = cov.candidates.size();
    out.info.refuted_covers_up_to = cov.refuted_below;
    out.info.exhaustive = cov.descent_complete && !cov.predicate_budget_hit && !cov.cover_budget_hit;

    if (cov.status == Tri::Yes) {
        out.kind = DistanceValue::Kind::Finite;
        out.value = cov.min_cover_size - 1;
        if (opts.want_certificate) {
            CoverCertificate cert;
            HomotopyOptions fopt = hopt;
            fopt.want_fence = true;
            for (const auto& bits : cov.cover) {
                auto v = is_homotopy_domain(Ideal(X, bits), maps, fopt);
                if (v.status != Tri::Yes) return out;  // certificate dropped, value stands
                cert.ideals.emplace_back(X, bits);
                cert.fences.push_back(std::move(v.fences));
            }
            out.certificate = std::move(cert);
        }
        return out;
    }
    if (cov.status == Tri::No) {
        // no cover exists at all; only possible when some minimal open is
        // not a domain, so this mirrors the pre-check (kept for safety)
        out.kind = DistanceValue::Kind::Infinite;
        return out;
    }
    out.kind = DistanceValue::Kind::UnknownAtLeast;
    out.value = cov.refuted_below;
    return out;
}

// fences for f ~ g on U transported from a core-level fence; all built maps
// have domain subU and codomain Y
std::vector<OrderMap> transport_restricted_fence(const OrderMap& m0, const OrderMap& mk,
                                                 const CoreData& cdX, const CoreData& cdY,
                                                 const std::vector<OrderMap>& G,
                                                 const std::vector<OrderMap>& H, const PosetPtr& subU,
                                                 const OrderMap& inclU, const Fence& core_fence,
                                                 const std::vector<int>& core_pos_in_V) {
    const PosetPtr& Y = m0.cod();
    const int nu = subU->size();
    std::vector<OrderMap> fence;
    auto push = [&](std::vector<std::uint16_t> vals) {
        OrderMap m(subU, Y, std::move(vals));
        if (fence.empty() || !(fence.back() == m)) fence.push_back(std::move(m));
    };
    auto lift = [&](const OrderMap& yy, const OrderMap& base) {  // yy∘base∘inclU
        std::vector<std::uint16_t> v(nu);
        for (int i = 0; i < nu; ++i) v[i] = std::uint16_t(yy(base(inclU(i))));
        return v;
    };
    for (const auto& Gt : G) push(lift(Gt, m0));
    auto iyry = [&](const OrderMap& base, const OrderMap& Ht) {  // iY∘rY∘base∘Ht∘inclU
        std::vector<std::uint16_t> v(nu);
        for (int i = 0; i < nu; ++i)
            v[i] = std::uint16_t(cdY.inclusion(cdY.retraction(base(Ht(inclU(i))))));
        return v;
    };
    for (const auto& Ht : H) push(iyry(m0, Ht));
    for (const auto& Fs : core_fence.maps) {
        std::vector<std::uint16_t> v(nu);
        for (int i = 0; i < nu; ++i) {
            int c = cdX.retraction(inclU(i));  // core position
            v[i] = std::uint16_t(cdY.inclusion(Fs(core_pos_in_V[c])));
        }
        push(std::move(v));
    }
    for (auto it = H.rbegin(); it != H.rend(); ++it) push(iyry(mk, *it));
    for (auto it = G.rbegin(); it != G.rend(); ++it) push(lift(*it, mk));
    return fence;
}

CoverCertificate transport_certificate(const std::vector<OrderMap>& maps, const CoreData& cdX,
                                       const CoreData& cdY, const CoverCertificate& core_cert) {
    const PosetPtr& X = maps[0].dom();
    const PosetPtr& Y = maps[0].cod();
    const auto G = core_identity_fence(Y, cdY);
    const auto H = core_identity_fence(X, cdX);
    const int n = X->size();

    struct Entry {
        Bits bits;
        std::vector<std::vector<Fence>> fences_slot;
    };
    CoverCertificate cert;
    std::vector<std::pair<Bits, std::vector<Fence>>> entries;
    for (std::size_t j = 0; j < core_cert.ideals.size(); ++j) {
        const Bits& V = core_cert.ideals[j].members;
        Bits U(n);
        for (int x = 0; x < n; ++x)
            if (V.test(cdX.retraction(x))) U.set(x);
        auto [subU, inclU] = induced_subposet(X, U);
        std::vector<int> pos_in_V(cdX.core->size(), -1);
        {
            int p = 0;
            V.for_each_set([&](int c) { pos_in_V[c] = p++; });
        }
        std::vector<Fence> fences;
        for (std::size_t k = 1; k < maps.size(); ++k) {
            Fence f;
            f.maps = transport_restricted_fence(maps[0], maps[k], cdX, cdY, G, H, subU, inclU,
                                                core_cert.fences[j][k - 1], pos_in_V);
            fences.push_back(std::move(f));
        }
        entries.emplace_back(U, std::move(fences));
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [bits, fences] : entries) {
        cert.ideals.emplace_back(X, bits);
        cert.fences.push_back(std::move(fences));
    }
    return cert;
}

}  // namespace

DistanceValue distance(const std::vector<OrderMap>& maps, const SearchBudgets& budgets,
                       const DistanceOptions& opts) {
    validate_maps(maps);
    const PosetPtr& X = maps[0].dom();
    const PosetPtr& Y = maps[0].cod();
    if (opts.use_cores && X->size() > 0) {
        CoreData cdX = core(X);
        CoreData cdY = core(Y);
        if (!cdX.removal_log.empty() || !cdY.removal_log.empty()) {
            // D is invariant under the core equivalences: precompose with the
            // inclusion of core(X), postcompose with the retraction of Y
            std::vector<OrderMap> reduced;
            reduced.reserve(maps.size());
            const int nc = cdX.core->size();
            for (const auto& m : maps) {
                std::vector<std::uint16_t> v(nc);
                for (int i = 0; i < nc; ++i)
                    v[i] = std::uint16_t(cdY.retraction(m(cdX.inclusion(i))));
                reduced.emplace_back(cdX.core, cdY.core, std::move(v));
            }
            DistanceValue res = distance_direct(reduced, budgets, opts);
            if (res.certificate) {
                if (res.kind == DistanceValue::Kind::Finite)
                    res.certificate = transport_certificate(maps, cdX, cdY, *res.certificate);
                else
                    res.certificate.reset();
            }
            return res;
        }
    }
    return distance_direct(maps, budgets, opts);
}

DistanceValue cat(const PosetPtr& X, int basepoint, const SearchBudgets& budgets,
                  const DistanceOptions& opts) {
    if (X->size() == 0) throw Error(Err::NotConnected, "cat of the empty space");
    if (!is_connected(*X)) throw Error(Err::NotConnected, "cat requires a connected space");
    if (basepoint < 0 || basepoint >= X->size())
        throw Error(Err::UnknownElement, "basepoint out of range");
    return distance({identity_map(X), constant_map(X, X, basepoint)}, budgets, opts);
}

DistanceValue cat_via_inclusions(const PosetPtr& X, int basepoint, const SearchBudgets& budgets,
                                 const DistanceOptions& opts) {
    if (X->size() == 0) throw Error(Err::NotConnected, "cat of the empty space");
    if (!is_connected(*X)) throw Error(Err::NotConnected, "cat requires a connected space");
    if (basepoint < 0 || basepoint >= X->size())
        throw Error(Err::UnknownElement, "basepoint out of range");
    PosetPtr XX = product({X, X});
    const int n = X->size();
    std::vector<std::uint16_t> v1(n), v2(n);
    for (int i = 0; i < n; ++i) {
        v1[i] = std::uint16_t(i * n + basepoint);
        v2[i] = std::uint16_t(basepoint * n + i);
    }
    return distance({OrderMap(X, XX, std::move(v1)), OrderMap(X, XX, std::move(v2))}, budgets, opts);
}

DistanceValue gcat(const PosetPtr& X, const SearchBudgets& budgets, const DistanceOptions& opts) {
    const int n = X->size();
    DistanceValue out;
    if (n == 0) {
        out.kind = DistanceValue::Kind::Finite;
        out.value = 0;
        out.info.exhaustive = true;
        return out;
    }
    // gcat is not a homotopy invariant: the space itself is never reduced,
    // only the contractibility test of each candidate ideal uses cores
    auto children = [&](const Bits& ideal) {
        std::vector<Bits> ch;
        for (int m : X->maximal_of(ideal)) {
            Bits c = ideal;
            c.reset(m);
            ch.push_back(std::move(c));
        }
        return ch;
    };
    auto predicate = [&](const Bits& ideal) {
        auto [sub, incl] = induced_subposet(X, ideal);
        return core(sub).core->size() == 1 ? Tri::Yes : Tri::No;
    };
    CoverOutcome cov = minimum_cover(Bits::full(n), Bits::full(n), children, predicate,
                                     budgets.ideals, budgets.cover, opts.threads);
    if (!cov.descent_complete) out.budgets_hit.push_back("ideals");
    if (cov.cover_budget_hit) out.budgets_hit.push_back("cover");
    out.info.lattice_nodes = cov.lattice_nodes;
    out.info.candidate_count = cov.candidates.size();
    out.info.refuted_covers_up_to = cov.refuted_below;
    out.info.exhaustive = cov.descent_complete && !cov.cover_budget_hit;
    if (cov.status == Tri::Yes) {
        out.kind = DistanceValue::Kind::Finite;
        out.value = cov.min_cover_size - 1;
        if (opts.want_certificate) {
            CoverCertificate cert;
            for (const auto& bits : cov.cover) {
                cert.ideals.emplace_back(X, bits);
                cert.fences.emplace_back();  // contractibility witnesses carry no fences
            }
            out.certificate = std::move(cert);
        }
    } else {
        out.kind = DistanceValue::Kind::UnknownAtLeast;
        out.value = cov.refuted_below;
    }
    return out;
}

DistanceValue tc(const PosetPtr& X, const SearchBudgets& budgets, const DistanceOptions& opts) {
    return tc_m(X, 2, budgets, opts);
}

DistanceValue tc_m(const PosetPtr& X, int m, const SearchBudgets& budgets,
                   const DistanceOptions& opts) {
    if (m < 2) throw Error(Err::Mismatch, "tc_m requires m >= 2");
    if (X->size() == 0) throw Error(Err::NotConnected, "tc of the empty space");
    if (!is_connected(*X)) throw Error(Err::NotConnected, "tc requires a connected space");
    PosetPtr P = product(std::vector<PosetPtr>(std::size_t(m), X));
    std::vector<OrderMap> projections;
    projections.reserve(m);
    for (int k = 0; k < m; ++k) projections.push_back(projection(P, k));
    return distance(projections, budgets, opts);
}

// ---- certificate verification -----------------------------------------

namespace {
bool fail(std::string* reason, const std::string& code) {
    if (reason) *reason = code;
    return false;
}
}  // namespace

bool verify_certificate(const std::vector<OrderMap>& maps, const CoverCertificate& cert,
                        int claimed_value, std::string* reason) {
    try {
        if (maps.size() < 2) return fail(reason, "NeedTwoMaps");
        const PosetPtr& X = maps[0].dom();
        const PosetPtr& Y = maps[0].cod();
        for (const auto& m : maps)
            if (!m.dom()->same_structure(*X) || !m.cod()->same_structure(*Y))
                return fail(reason, "MapSpacesMismatch");
        if (claimed_value < 0 || int(cert.ideals.size()) != claimed_value + 1)
            return fail(reason, "IdealCountMismatch");
        if (cert.fences.size() != cert.ideals.size()) return fail(reason, "FenceCountMismatch");

        Bits covered(X->size());
        for (const auto& U : cert.ideals) {
            if (!U.space || !U.space->same_structure(*X)) return fail(reason, "IdealSpaceMismatch");
            if (!X->is_down_closed(U.members)) return fail(reason, "NotDownwardClosed");
            covered |= U.members;
        }
        if (!(covered == Bits::full(X->size()))) return fail(reason, "NotCovering");

        for (std::size_t j = 0; j < cert.ideals.size(); ++j) {
            if (cert.fences[j].size() != maps.size() - 1) return fail(reason, "FenceCountMismatch");
            std::vector<OrderMap> restricted;
            for (const auto& m : maps) restricted.push_back(restrict_map(m, cert.ideals[j].members));
            for (std::size_t k = 1; k < maps.size(); ++k) {
                const Fence& f = cert.fences[j][k - 1];
                if (f.maps.empty()) return fail(reason, "EmptyFence");
                for (const auto& fm : f.maps) {
                    if (!fm.dom()->same_structure(*restricted[0].dom()) ||
                        !fm.cod()->same_structure(*Y))
                        return fail(reason, "FenceMapSpaceMismatch");
                    if (!is_order_preserving(*fm.dom(), *fm.cod(), fm.values()))
                        return fail(reason, "FenceMapNotOrderPreserving");
                }
                for (std::size_t s = 0; s + 1 < f.maps.size(); ++s)
                    if (!comparable(f.maps[s], f.maps[s + 1])) return fail(reason, "FenceBroken");
                if (!(f.maps.front() == restricted[0]) || !(f.maps.back() == restricted[k]))
                    return fail(reason, "FenceEndpointMismatch");
            }
        }
        return true;
    } catch (const std::exception& e) {
        return fail(reason, std::string("MalformedCertificate: ") + e.what());
    }
}

}  // namespace homdist
