#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homdist/poset.hpp"

namespace homdist {

// Certificate of a homotopy between order maps: a chain of maps in which
// consecutive entries are pointwise comparable. Two maps of finite spaces
// are homotopic exactly when such a chain joins them (they lie in the same
// component of the hom-poset under the pointwise order).
struct Fence {
    std::vector<OrderMap> maps;
};

// checks the fence invariant and, if given, the endpoints
bool valid_fence(const Fence& fence, const OrderMap* from = nullptr, const OrderMap* to = nullptr);

enum class Tri { Yes, No, Budget };

struct HomotopyVerdict {
    Tri status = Tri::Budget;
    std::optional<Fence> fence;  // present on Yes when a fence was requested
    std::uint64_t explored = 0;  // maps visited by the search
};

struct HomotopyOptions {
    std::uint64_t budget = 2'000'000;  // visited maps across the whole query
    bool use_cores = true;             // reduce both spaces to their cores first
    bool want_fence = true;
};

// true iff f <= g pointwise or g <= f pointwise (one fence step)
bool comparable(const OrderMap& f, const OrderMap& g);

// all order-preserving maps differing from h at exactly one point, the new
// value comparable to the old one; deterministic order
std::vector<OrderMap> one_point_neighbors(const OrderMap& h);

// Decides f ~ g by bidirectional BFS over one-point moves, after reducing
// domain and codomain to their cores; fences are transported back through
// the core equivalences. Maps into a product are decided factorwise.
HomotopyVerdict homotopic(const OrderMap& f, const OrderMap& g, const HomotopyOptions& opt = {});

struct DomainVerdict {
    Tri status = Tri::Budget;
    // fences from maps[0]|U to each maps[k]|U, k = 1..m-1 (on Yes)
    std::vector<Fence> fences;
    std::uint64_t explored = 0;
};

// Is U an ideal on which all restrictions are pairwise homotopic?
DomainVerdict is_homotopy_domain(const Ideal& U, const std::vector<OrderMap>& maps,
                                 const HomotopyOptions& opt = {});

namespace detail {
// shared-budget variant used by the search layers
HomotopyVerdict homotopic_budgeted(const OrderMap& f, const OrderMap& g, const HomotopyOptions& opt,
                                   std::uint64_t& budget_left, std::uint64_t& explored);
}

}  // namespace homdist
