#include "homdist/poset.hpp"

#include <algorithm>

namespace homdist {

FinitePoset::FinitePoset(std::vector<std::string> elements, std::vector<Bits> up_sets)
    : elements_(std::move(elements)), up_(std::move(up_sets)) {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = index_.emplace(elements_[i], i);
        if (!fresh) throw Error(Err::Mismatch, "duplicate element identifier: " + elements_[i]);
    }
    dn_.assign(n, Bits(n));
    for (int i = 0; i < n; ++i)
        up_[i].for_each_set([&](int j) { dn_[j].set(i); });

    covers_up_.assign(n, {});
    covers_dn_.assign(n, {});
    for (int i = 0; i < n; ++i) {
        const std::vector<int> above = up_[i].to_indices();
        for (int j : above) {
            if (j == i) continue;
            // j covers i iff nothing lies strictly between
            bool cover = true;
            for (int k : above)
                if (k != i && k != j && leq(k, j)) {
                    cover = false;
                    break;
                }
            if (cover) {
                covers_up_[i].push_back(j);
                covers_dn_[j].push_back(i);
            }
        }
    }
}

int FinitePoset::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(Err::UnknownElement, "unknown element: " + name);
    return it->second;
}

std::optional<int> FinitePoset::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool FinitePoset::same_structure(const FinitePoset& o) const {
    return this == &o || (elements_ == o.elements_ && up_ == o.up_);
}

std::vector<int> FinitePoset::maximal_of(const Bits& subset) const {
    std::vector<int> out;
    subset.for_each_set([&](int i) {
        Bits above = up_[i] & subset;
        above.reset(i);
        if (above.none()) out.push_back(i);
    });
    return out;
}

Bits FinitePoset::down_closure(const Bits& subset) const {
    Bits out(size());
    subset.for_each_set([&](int i) { out |= dn_[i]; });
    return out;
}

bool FinitePoset::is_down_closed(const Bits& subset) const {
    bool ok = true;
    subset.for_each_set([&](int i) {
        if (!dn_[i].subset_of(subset)) ok = false;
    });
    return ok;
}

Ideal::Ideal(PosetPtr s, Bits m) : space(std::move(s)), members(std::move(m)) {
    if (!space->is_down_closed(members))
        throw Error(Err::Mismatch, "subset is not downward closed");
}

// ---- construction ----------------------------------------------------

PosetPtr build_poset(const std::vector<std::string>& elements,
                     const std::vector<std::pair<std::string, std::string>>& relations) {
    const int n = int(elements.size());
    std::unordered_map<std::string, int> idx;
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = idx.emplace(elements[i], i);
        if (!fresh) throw Error(Err::Mismatch, "duplicate element identifier: " + elements[i]);
    }
    std::vector<Bits> up(n, Bits(n));
    for (int i = 0; i < n; ++i) up[i].set(i);
    for (const auto& [a, b] : relations) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end()) throw Error(Err::UnknownElement, "unknown element: " + a);
        if (ib == idx.end()) throw Error(Err::UnknownElement, "unknown element: " + b);
        up[ia->second].set(ib->second);
    }
    // transitive closure over bit rows
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (up[i].test(k)) up[i] |= up[k];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (up[i].test(j) && up[j].test(i))
                throw Error(Err::Cycle, "relations force " + elements[i] + " = " + elements[j]);
    return std::make_shared<FinitePoset>(elements, std::move(up));
}

Ideal minimal_open(const PosetPtr& X, int x) {
    if (x < 0 || x >= X->size()) throw Error(Err::UnknownElement, "element index out of range");
    return Ideal(X, X->down_set(x));
}

Ideal minimal_open(const PosetPtr& X, const std::string& x) {
    return minimal_open(X, X->index_of(x));
}

PosetPtr product(const std::vector<PosetPtr>& factors) {
    if (factors.empty()) throw Error(Err::Mismatch, "product needs at least one factor");
    if (factors.size() == 1) return factors[0];
    const int m = int(factors.size());
    long long total = 1;
    for (const auto& f : factors) {
        total *= f->size();
        if (total > 60000) throw Error(Err::SizeCap, "product exceeds 60000 elements");
    }
    const int n = int(total);
    std::vector<int> strides(m);
    int s = 1;
    for (int k = m - 1; k >= 0; --k) {
        strides[k] = s;
        s *= factors[k]->size();
    }
    auto split = [&](int v, int k) { return (v / strides[k]) % factors[k]->size(); };

    std::vector<std::string> elems(n);
    for (int v = 0; v < n; ++v) {
        std::string name = "(";
        for (int k = 0; k < m; ++k) {
            if (k) name += ",";
            name += factors[k]->name_of(split(v, k));
        }
        name += ")";
        elems[v] = std::move(name);
    }
    std::vector<Bits> up(n, Bits(n));
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
            bool le = true;
            for (int k = 0; k < m && le; ++k)
                le = factors[k]->leq(split(v, k), split(w, k));
            if (le) up[v].set(w);
        }
    auto P = std::make_shared<FinitePoset>(std::move(elems), std::move(up));
    const_cast<FinitePoset&>(*P).factors_ = factors;
    const_cast<FinitePoset&>(*P).strides_ = strides;
    return P;
}

OrderMap projection(const PosetPtr& prod, int k) {
    if (!prod->is_product() || k < 0 || k >= int(prod->factors().size()))
        throw Error(Err::Mismatch, "projection requires a product space and a valid factor index");
    const auto& F = prod->factors()[k];
    std::vector<std::uint16_t> vals(prod->size());
    for (int v = 0; v < prod->size(); ++v)
        vals[v] = std::uint16_t((v / prod->strides()[k]) % F->size());
    return OrderMap(prod, F, std::move(vals));
}

std::pair<PosetPtr, OrderMap> induced_subposet(const PosetPtr& X, const Bits& members) {
    std::vector<int> keep = members.to_indices();
    const int n = int(keep.size());
    std::vector<std::string> elems(n);
    std::vector<Bits> up(n, Bits(n));
    for (int i = 0; i < n; ++i) {
        elems[i] = X->name_of(keep[i]);
        for (int j = 0; j < n; ++j)
            if (X->leq(keep[i], keep[j])) up[i].set(j);
    }
    auto sub = std::make_shared<FinitePoset>(std::move(elems), std::move(up));
    std::vector<std::uint16_t> incl(n);
    for (int i = 0; i < n; ++i) incl[i] = std::uint16_t(keep[i]);
    return {sub, OrderMap(sub, X, std::move(incl))};
}

IdealStream ideals_enumerate(const PosetPtr& X, std::uint64_t budget) {
    if (budget < 1) throw Error(Err::Mismatch, "budget must be at least 1");
    IdealStream out;
    const int n = X->size();
    // recursion over the canonical order reversed: at step k decide the fate
    // of the maximal remaining element, include (with its down-set) or exclude
    // (with its up-set). A fixed linear extension keeps the order stable.
    std::vector<int> linext(n);
    {
        std::vector<bool> placed(n, false);
        for (int pos = 0; pos < n; ++pos)
            for (int i = 0; i < n; ++i) {
                if (placed[i]) continue;
                bool minimal = true;
                X->down_set(i).for_each_set([&](int j) {
                    if (j != i && !placed[j]) minimal = false;
                });
                if (minimal) {
                    linext[pos] = i;
                    placed[i] = true;
                    break;
                }
            }
    }
    struct Rec {
        const FinitePoset& P;
        const std::vector<int>& ext;
        IdealStream& out;
        std::uint64_t budget;
        PosetPtr space;
        bool emit(Bits cur, int k) {  // elements ext[k..] undecided, cur decided part
            if (k < 0) {
                if (std::uint64_t(out.ideals.size()) >= budget) {
                    out.budget_exceeded = true;
                    return false;
                }
                out.ideals.push_back(Ideal(space, cur));
                return true;
            }
            int x = ext[k];
            if (cur.test(x)) return emit(cur, k - 1);  // already forced in
            // exclude x (forces nothing; x's up-set already excluded since we
            // walk top-down), then include x with its down-set
            if (!emit(cur, k - 1)) return false;
            Bits with = cur | P.down_set(x);
            return emit(with, k - 1);
        }
    };
    Rec rec{*X, linext, out, budget, X};
    rec.emit(Bits(n), n - 1);
    return out;
}

std::vector<std::vector<int>> connected_components(const FinitePoset& X) {
    const int n = X.size();
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int i = 0; i < n; ++i) {
        if (comp[i] != -1) continue;
        std::vector<int> stack{i};
        comp[i] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            auto visit = [&](int j) {
                if (comp[j] == -1) {
                    comp[j] = c;
                    stack.push_back(j);
                }
            };
            X.up_set(v).for_each_set(visit);
            X.down_set(v).for_each_set(visit);
        }
        ++c;
    }
    std::vector<std::vector<int>> out(c);
    for (int i = 0; i < n; ++i) out[comp[i]].push_back(i);
    return out;
}

bool is_connected(const FinitePoset& X) { return connected_components(X).size() <= 1; }

// ---- maps ------------------------------------------------------------

bool is_order_preserving(const FinitePoset& dom, const FinitePoset& cod,
                         const std::vector<std::uint16_t>& values) {
    if (int(values.size()) != dom.size()) return false;
    for (auto v : values)
        if (v >= cod.size()) return false;
    for (int i = 0; i < dom.size(); ++i)
        for (int j : dom.covers_up(i))
            if (!cod.leq(values[i], values[j])) return false;
    return true;
}

OrderMap::OrderMap(PosetPtr dom, PosetPtr cod, std::vector<std::uint16_t> values)
    : dom_(std::move(dom)), cod_(std::move(cod)), values_(std::move(values)) {
    if (cod_->size() == 0 && dom_->size() > 0)
        throw Error(Err::Mismatch, "map into the empty space from a nonempty one");
    if (!is_order_preserving(*dom_, *cod_, values_))
        throw Error(Err::Mismatch, "assignment is not order-preserving");
}

bool OrderMap::operator==(const OrderMap& o) const {
    if (values_ != o.values_) return false;
    if (dom_ == o.dom_ && cod_ == o.cod_) return true;
    return dom_->same_structure(*o.dom_) && cod_->same_structure(*o.cod_);
}

OrderMap identity_map(const PosetPtr& X) {
    std::vector<std::uint16_t> v(X->size());
    for (int i = 0; i < X->size(); ++i) v[i] = std::uint16_t(i);
    return OrderMap(X, X, std::move(v));
}

OrderMap constant_map(const PosetPtr& dom, const PosetPtr& cod, int value) {
    if (value < 0 || value >= cod->size())
        throw Error(Err::UnknownElement, "constant value out of range");
    return OrderMap(dom, cod, std::vector<std::uint16_t>(dom->size(), std::uint16_t(value)));
}

OrderMap compose(const OrderMap& f, const OrderMap& g) {
    if (!f.cod()->same_structure(*g.dom()))
        throw Error(Err::Mismatch, "compose: cod(f) != dom(g)");
    std::vector<std::uint16_t> v(f.dom()->size());
    for (int i = 0; i < f.dom()->size(); ++i) v[i] = std::uint16_t(g(f(i)));
    return OrderMap(f.dom(), g.cod(), std::move(v));
}

OrderMap restrict_map(const OrderMap& f, const Bits& members) {
    if (members.size() != f.dom()->size())
        throw Error(Err::Mismatch, "restrict: subset size mismatch");
    if (!f.dom()->is_down_closed(members))
        throw Error(Err::Mismatch, "restrict: subset is not an ideal of the domain");
    auto [sub, incl] = induced_subposet(f.dom(), members);
    std::vector<std::uint16_t> v(sub->size());
    for (int i = 0; i < sub->size(); ++i) v[i] = std::uint16_t(f(incl(i)));
    return OrderMap(sub, f.cod(), std::move(v));
}

OrderMap restrict_map(const OrderMap& f, const Ideal& U) {
    if (!U.space->same_structure(*f.dom()))
        throw Error(Err::Mismatch, "restrict: ideal lives in a different space");
    return restrict_map(f, U.members);
}

// ---- Stong core ------------------------------------------------------

namespace {

// first beat point of the subspace `alive` in canonical order, with witness
std::optional<CoreData::Removal> find_beat_point(const FinitePoset& X, const Bits& alive) {
    std::optional<CoreData::Removal> found;
    alive.for_each_set([&](int i) {
        if (found) return;
        Bits dn = X.down_set(i) & alive;
        dn.reset(i);
        // down-beat: strict down-set has a maximum
        std::optional<int> w;
        dn.for_each_set([&](int j) {
            if (w) return;
            if (dn.subset_of(X.down_set(j))) w = j;
        });
        if (w) {
            found = CoreData::Removal{i, false, *w};
            return;
        }
        Bits up = X.up_set(i) & alive;
        up.reset(i);
        up.for_each_set([&](int j) {
            if (w) return;
            if (up.subset_of(X.up_set(j))) w = j;
        });
        if (w) found = CoreData::Removal{i, true, *w};
    });
    return found;
}

}  // namespace

CoreData core(const PosetPtr& X) {
    const int n = X->size();
    Bits alive = Bits::full(n);
    std::vector<int> retr(n);
    for (int i = 0; i < n; ++i) retr[i] = i;
    std::vector<CoreData::Removal> log;
    while (auto beat = find_beat_point(*X, alive)) {
        alive.reset(beat->element);
        for (int i = 0; i < n; ++i)
            if (retr[i] == beat->element) retr[i] = beat->witness;
        log.push_back(*beat);
    }
    auto [sub, incl] = induced_subposet(X, alive);
    std::vector<int> pos(n, -1);
    for (int i = 0; i < sub->size(); ++i) pos[incl(i)] = i;
    std::vector<std::uint16_t> rv(n);
    for (int i = 0; i < n; ++i) rv[i] = std::uint16_t(pos[retr[i]]);
    return CoreData{sub, incl, OrderMap(X, sub, std::move(rv)), std::move(log)};
}

std::vector<OrderMap> core_identity_fence(const PosetPtr& X, const CoreData& cd) {
    std::vector<OrderMap> fence;
    fence.push_back(identity_map(X));
    std::vector<std::uint16_t> cur = fence.back().values();
    for (const auto& rem : cd.removal_log) {
        for (auto& v : cur)
            if (v == rem.element) v = std::uint16_t(rem.witness);
        fence.emplace_back(X, X, cur);
    }
    return fence;
}

}  // namespace homdist
