#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "homdist/bits.hpp"
#include "homdist/errors.hpp"

namespace homdist {

class FinitePoset;
using PosetPtr = std::shared_ptr<const FinitePoset>;

// A finite T0 space given by its partial order. The open sets are exactly
// the down-sets, and U_x = {y : y <= x} is the minimal open set of x.
// The element list fixes the canonical order used by every deterministic
// iteration in the engine. Immutable after construction.
class FinitePoset {
public:
    FinitePoset(std::vector<std::string> elements, std::vector<Bits> up_sets);

    int size() const { return int(elements_.size()); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& name_of(int i) const { return elements_[i]; }

    // i <= j in the order
    bool leq(int i, int j) const { return up_[i].test(j); }
    const Bits& up_set(int i) const { return up_[i]; }    // { j : i <= j }
    const Bits& down_set(int i) const { return dn_[i]; }  // { j : j <= i }
    const std::vector<int>& covers_up(int i) const { return covers_up_[i]; }
    const std::vector<int>& covers_down(int i) const { return covers_dn_[i]; }

    int index_of(const std::string& name) const;                    // throws UnknownElement
    std::optional<int> find(const std::string& name) const;

    bool same_structure(const FinitePoset& o) const;                // elements and order equal

    // elements of `subset` that are maximal within it
    std::vector<int> maximal_of(const Bits& subset) const;
    Bits down_closure(const Bits& subset) const;
    bool is_down_closed(const Bits& subset) const;

    // Product structure, set only by product(): factor list plus mixed-radix
    // strides into the element index (last factor varies fastest).
    const std::vector<PosetPtr>& factors() const { return factors_; }
    const std::vector<int>& strides() const { return strides_; }
    bool is_product() const { return factors_.size() >= 2; }

private:
    friend PosetPtr product(const std::vector<PosetPtr>&);

    std::vector<std::string> elements_;
    std::vector<Bits> up_, dn_;
    std::vector<std::vector<int>> covers_up_, covers_dn_;
    std::unordered_map<std::string, int> index_;
    std::vector<PosetPtr> factors_;
    std::vector<int> strides_;
};

// An open set: a downward-closed subset of a space.
struct Ideal {
    PosetPtr space;
    Bits members;

    Ideal() = default;
    Ideal(PosetPtr s, Bits m);  // validates downward closure
    int count() const { return members.count(); }
};

// A continuous map between finite T0 spaces = an order-preserving
// assignment, stored as codomain positions indexed by domain position.
class OrderMap {
public:
    OrderMap() = default;
    OrderMap(PosetPtr dom, PosetPtr cod, std::vector<std::uint16_t> values);

    const PosetPtr& dom() const { return dom_; }
    const PosetPtr& cod() const { return cod_; }
    const std::vector<std::uint16_t>& values() const { return values_; }
    int operator()(int i) const { return values_[i]; }

    bool operator==(const OrderMap& o) const;  // structural

private:
    PosetPtr dom_, cod_;
    std::vector<std::uint16_t> values_;
};

// ---- construction ----------------------------------------------------

// Reflexive-transitive closure of the given relations; canonical element
// order = input order. Throws CycleError/UnknownElement.
PosetPtr build_poset(const std::vector<std::string>& elements,
                     const std::vector<std::pair<std::string, std::string>>& relations);

Ideal minimal_open(const PosetPtr& X, int x);
Ideal minimal_open(const PosetPtr& X, const std::string& x);

// Componentwise order on tuples, elements in lexicographic tuple order.
PosetPtr product(const std::vector<PosetPtr>& factors);
OrderMap projection(const PosetPtr& prod, int k);

// Restriction of the order; canonical order inherited. Returns the
// subspace together with its inclusion into X.
std::pair<PosetPtr, OrderMap> induced_subposet(const PosetPtr& X, const Bits& members);

struct IdealStream {
    std::vector<Ideal> ideals;
    bool budget_exceeded = false;
};
// All down-sets in a deterministic order; soft-stops after `budget` items.
IdealStream ideals_enumerate(const PosetPtr& X, std::uint64_t budget = 1u << 20);

// Components of the undirected comparability graph (= path components).
std::vector<std::vector<int>> connected_components(const FinitePoset& X);
bool is_connected(const FinitePoset& X);

// ---- maps ------------------------------------------------------------

bool is_order_preserving(const FinitePoset& dom, const FinitePoset& cod,
                         const std::vector<std::uint16_t>& values);

OrderMap identity_map(const PosetPtr& X);
OrderMap constant_map(const PosetPtr& dom, const PosetPtr& cod, int value);

// compose(f, g) = g after f; requires cod(f) = dom(g)
OrderMap compose(const OrderMap& f, const OrderMap& g);
// restriction to an ideal of dom(f); the restricted domain is the induced subposet
OrderMap restrict_map(const OrderMap& f, const Ideal& U);
OrderMap restrict_map(const OrderMap& f, const Bits& members);

// ---- Stong core ------------------------------------------------------

// Beat-point reduction. `retraction ∘ inclusion = id` on the core and
// `inclusion ∘ retraction` is homotopic to the identity; the removal log
// records the deterministic reduction order.
struct CoreData {
    PosetPtr core;
    OrderMap inclusion;   // core -> X
    OrderMap retraction;  // X -> core
    struct Removal {
        int element;   // position in X
        bool up_beat;  // false: down-beat
        int witness;   // comparable replacement, position in X
    };
    std::vector<Removal> removal_log;
};

CoreData core(const PosetPtr& X);

// The fence id_X ~ inclusion∘retraction induced by the removal order:
// consecutive entries are pointwise comparable self-maps of X.
std::vector<OrderMap> core_identity_fence(const PosetPtr& X, const CoreData& cd);

}  // namespace homdist
