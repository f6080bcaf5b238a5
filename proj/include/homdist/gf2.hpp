#pragma once

#include <optional>
#include <vector>

#include "homdist/bits.hpp"

namespace homdist {

// Row echelon over GF(2), rows kept with distinct pivot columns.
class Gf2Echelon {
public:
    explicit Gf2Echelon(int width) : width_(width) {}

    // residue of v modulo the current row space
    Bits reduce(Bits v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (v.test(pivots_[r])) v ^= rows_[r];
        return v;
    }
    // inserts v if independent; returns true when the rank grew
    bool insert(const Bits& v) {
        Bits r = reduce(v);
        if (r.none()) return false;
        rows_.push_back(r);
        pivots_.push_back(lowest_bit(r));
        return true;
    }
    int rank() const { return int(rows_.size()); }
    int width() const { return width_; }
    bool contains(const Bits& v) const { return reduce(v).none(); }

    static int lowest_bit(const Bits& b) {
        int out = -1;
        b.for_each_set([&](int i) {
            if (out < 0) out = i;
        });
        return out;
    }

private:
    int width_;
    std::vector<Bits> rows_;
    std::vector<int> pivots_;
};

// Echelon that tracks combinations of the inserted generators, so vectors
// in the span can be expressed over them.
class Gf2Solver {
public:
    Gf2Solver(int width, int max_generators) : width_(width), max_gens_(max_generators) {}

    void add_generator(const Bits& g) {
        Bits row = g;
        Bits combo(max_gens_);
        combo.set(gen_count_++);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (row.test(pivots_[r])) {
                row ^= rows_[r];
                combo ^= combos_[r];
            }
        if (row.none()) return;  // dependent generator
        pivots_.push_back(Gf2Echelon::lowest_bit(row));
        rows_.push_back(std::move(row));
        combos_.push_back(std::move(combo));
    }

    // a combination of generators equal to v, if v lies in the span
    std::optional<Bits> solve(const Bits& v) const {
        Bits row = v;
        Bits combo(max_gens_);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (row.test(pivots_[r])) {
                row ^= rows_[r];
                combo ^= combos_[r];
            }
        if (!row.none()) return std::nullopt;
        return combo;
    }

private:
    int width_;
    int max_gens_ = 0;
    int gen_count_ = 0;
    std::vector<Bits> rows_, combos_;
    std::vector<int> pivots_;
};

// kernel basis of the linear map whose equations are `rows` over `ncols` unknowns
std::vector<Bits> gf2_kernel(const std::vector<Bits>& rows, int ncols);

}  // namespace homdist
