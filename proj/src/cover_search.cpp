#include "homdist/cover_search.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace homdist {

namespace {

std::vector<Bits> maximal_sets(std::vector<Bits> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Bits> out;
    for (const auto& s : sets) {
        bool dominated = false;
        for (const auto& t : sets)
            if (s != t && s.subset_of(t)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(s);
    }
    return out;
}

struct CoverDfs {
    const std::vector<Bits>& sets;
    std::uint64_t& nodes_left;
    bool budget_hit = false;

    // picks the uncovered element covered by the fewest sets
    int pick_element(const Bits& uncov) const {
        int best = -1, best_n = std::numeric_limits<int>::max();
        uncov.for_each_set([&](int e) {
            int n = 0;
            for (const auto& s : sets)
                if (s.test(e)) ++n;
            if (n < best_n) {
                best_n = n;
                best = e;
            }
        });
        return best;
    }

    bool run(const Bits& uncov, int k, std::vector<Bits>& chosen) {
        if (uncov.none()) return true;
        if (nodes_left == 0) {
            budget_hit = true;
            return false;
        }
        --nodes_left;
        if (k == 0) return false;
        int lb = disjoint_cover_lower_bound(uncov, sets);
        if (lb > k) return false;
        int e = pick_element(uncov);
        for (const auto& s : sets) {
            if (!s.test(e)) continue;
            chosen.push_back(s);
            if (run(uncov.minus(s), k - 1, chosen)) return true;
            if (budget_hit) {
                chosen.pop_back();
                return false;
            }
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

int disjoint_cover_lower_bound(const Bits& uncovered, const std::vector<Bits>& sets) {
    Bits rem = uncovered;
    int bound = 0;
    while (rem.any()) {
        int e = -1;
        rem.for_each_set([&](int i) {
            if (e < 0) e = i;
        });
        ++bound;
        Bits kill(rem.size());
        bool coverable = false;
        for (const auto& s : sets)
            if (s.test(e)) {
                kill |= s;
                coverable = true;
            }
        if (!coverable) return std::numeric_limits<int>::max() / 2;  // e cannot be covered
        kill.set(e);
        rem = rem.minus(kill);
    }
    return bound;
}

CoverOutcome minimum_cover(const Bits& universe, const Bits& start, const ChildrenFn& children,
                           const PredicateFn& predicate, std::uint64_t descent_budget,
                           std::uint64_t cover_budget, int threads) {
    CoverOutcome out;

    // ---- descent: level-synchronous, deterministic regardless of threads
    std::unordered_map<Bits, Tri, BitsHash> memo;
    std::vector<Bits> yes_list, no_list, budget_list;

    auto shortcut = [&](const Bits& node) -> std::optional<Tri> {
        auto it = memo.find(node);
        if (it != memo.end()) return it->second;
        // candidates are closed under the child relation, so a subset of a
        // candidate is one and a superset of a refuted node is refuted
        for (const auto& d : yes_list)
            if (node.subset_of(d)) return Tri::Yes;
        for (const auto& n : no_list)
            if (n.subset_of(node)) return Tri::No;
        return std::nullopt;
    };
    auto record = [&](const Bits& node, Tri v, bool from_predicate) {
        memo[node] = v;
        if (!from_predicate) return;
        if (v == Tri::Yes)
            yes_list.push_back(node);
        else if (v == Tri::No)
            no_list.push_back(node);
        else {
            budget_list.push_back(node);
            out.predicate_budget_hit = true;
        }
    };
    auto resolve = [&](const Bits& node) -> Tri {
        if (auto v = shortcut(node)) {
            record(node, *v, false);
            return *v;
        }
        Tri v = predicate(node);
        record(node, v, true);
        return v;
    };
    // threads > 1: evaluate undecided nodes of a level concurrently; the
    // verdicts are pure functions of the node, so the merged state is the
    // same as the sequential one up to shortcut savings
    auto resolve_level = [&](const std::vector<Bits>& level) {
        if (threads <= 1 || level.size() < 2) {
            for (const auto& node : level) resolve(node);
            return;
        }
        std::vector<const Bits*> pending;
        for (const auto& node : level) {
            if (!shortcut(node)) pending.push_back(&node);
        }
        std::vector<std::future<std::pair<const Bits*, Tri>>> futs;
        std::size_t at = 0;
        while (at < pending.size()) {
            futs.clear();
            for (int t = 0; t < threads && at < pending.size(); ++t, ++at) {
                const Bits* node = pending[at];
                futs.push_back(std::async(std::launch::async,
                                          [&, node] { return std::make_pair(node, predicate(*node)); }));
            }
            for (auto& fu : futs) {
                auto [node, v] = fu.get();
                if (!memo.count(*node)) record(*node, v, true);
            }
        }
        for (const auto& node : level) resolve(node);
    };

    std::unordered_set<Bits, BitsHash> seen;
    std::vector<Bits> level{start};
    seen.insert(start);
    while (!level.empty()) {
        if (out.lattice_nodes + level.size() > descent_budget) {
            out.descent_complete = false;
            break;
        }
        out.lattice_nodes += level.size();
        resolve_level(level);
        std::vector<Bits> next;
        for (const auto& node : level) {
            Tri v = resolve(node);
            if (v == Tri::Yes) continue;  // candidates are not descended
            for (const auto& c : children(node)) {
                if (c.none()) continue;
                if (seen.insert(c).second) next.push_back(c);
            }
        }
        level = std::move(next);
    }

    out.candidates = maximal_sets(yes_list);

    // ---- exact minimum cover over proven candidates
    std::uint64_t nodes_left = cover_budget;
    auto min_cover = [&](const std::vector<Bits>& cands, int max_k, std::vector<Bits>* witness,
                         int* refuted) -> int {
        *refuted = 0;
        if (universe.none()) return 0;
        int lb = disjoint_cover_lower_bound(universe, cands);
        if (lb > max_k) {
            // record what plain refutation gives us
            *refuted = max_k;
            return -1;
        }
        for (int k = std::max(1, lb); k <= max_k; ++k) {
            CoverDfs dfs{cands, nodes_left};
            std::vector<Bits> chosen;
            if (dfs.run(universe, k, chosen)) {
                if (witness) *witness = chosen;
                *refuted = std::max(*refuted, lb - 1);
                return k;
            }
            if (dfs.budget_hit) {
                out.cover_budget_hit = true;
                *refuted = std::max(*refuted, k - 1);
                return -1;
            }
            *refuted = k;  // all covers of size k exhaustively refuted
        }
        return -1;
    };

    const int max_k = int(out.candidates.size());
    int refuted_pess = 0;
    std::vector<Bits> witness;
    int best = min_cover(out.candidates, max_k, &witness, &refuted_pess);
    if (best >= 0) {
        std::sort(witness.begin(), witness.end());
        out.cover = std::move(witness);
        out.min_cover_size = best;
    }

    const bool search_exact = out.descent_complete && budget_list.empty() && !out.cover_budget_hit;
    if (search_exact) {
        out.status = best >= 0 ? Tri::Yes : Tri::No;  // No: no cover exists at all
        out.refuted_below = best >= 0 ? best - 1 : max_k;
        if (best < 0) out.refuted_below = std::numeric_limits<int>::max() / 2;
        return out;
    }

    // budget somewhere: compute a sound lower bound from the optimistic
    // candidate set (proven + undecided)
    out.status = Tri::Budget;
    if (!out.descent_complete) {
        // enumeration incomplete: only the start node's verdict is usable
        out.refuted_below = (memo.count(start) && memo[start] == Tri::No) ? 1 : 0;
        return out;
    }
    std::vector<Bits> optimistic = yes_list;
    optimistic.insert(optimistic.end(), budget_list.begin(), budget_list.end());
    optimistic = maximal_sets(optimistic);
    int refuted_opt = 0;
    int best_opt = min_cover(optimistic, int(optimistic.size()), nullptr, &refuted_opt);
    out.refuted_below = best_opt >= 0 ? best_opt - 1 : refuted_opt;
    if (best_opt >= 0 && best >= 0 && best_opt == best) out.status = Tri::Yes;  // bounds met
    return out;
}

}  // namespace homdist
