#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "f3/bitvec.hpp"

namespace f3 {

// Row-major GF(2) matrix built on BitVec rows.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    BitVec& row(size_t i) { return rows_[i]; }
    const BitVec& row(size_t i) const { return rows_[i]; }
    bool get(size_t i, size_t j) const { return rows_[i].get(j); }
    void set(size_t i, size_t j, bool v) { rows_[i].set(j, v); }
    void add_row(const BitVec& v) { rows_.push_back(v); }

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<size_t> rref() {
      std::vector<size_t> pivots;
      size_t r = 0;
      for (size_t c = 0; c < cols_ && r < rows_.size(); c++) {
        size_t sel = r;
        while (sel < rows_.size() && !rows_[sel].get(c)) sel++;
        if (sel == rows_.size()) continue;
        std::swap(rows_[r], rows_[sel]);
        for (size_t i = 0; i < rows_.size(); i++)
          if (i != r && rows_[i].get(c)) rows_[i] ^= rows_[r];
        pivots.push_back(c);
        r++;
      }
      return pivots;
    }

    // Basis of { v : M v = 0 }.
    std::vector<BitVec> nullspace() const {
      BitMatrix m = *this;
      std::vector<size_t> pivots = m.rref();
      std::vector<bool> is_pivot(cols_, false);
      for (size_t c : pivots) is_pivot[c] = true;
      std::vector<BitVec> basis;
      for (size_t c = 0; c < cols_; c++) {
        if (is_pivot[c]) continue;
        BitVec v(cols_);
        v.set(c, 1);
        for (size_t i = 0; i < pivots.size(); i++)
          if (m.rows_[i].get(c)) v.set(pivots[i], 1);
        basis.push_back(v);
      }
      return basis;
    }

    // One solution of M v = b, if any.
    std::optional<BitVec> solve(const BitVec& b) const {
      BitMatrix m(rows(), cols_ + 1);
      for (size_t i = 0; i < rows(); i++) {
        m.rows_[i] = BitVec(cols_ + 1);
        for (size_t w = 0; w < rows_[i].words(); w++) m.rows_[i].word(w) = rows_[i].word(w);
        // words may share the boundary column; set the augmented bit explicitly
        m.rows_[i].set(cols_, b.get(i));
      }
      std::vector<size_t> pivots = m.rref();
      BitVec v(cols_);
      for (size_t i = 0; i < pivots.size(); i++) {
        if (pivots[i] == cols_) return std::nullopt;  // inconsistent
        if (m.rows_[i].get(cols_)) v.set(pivots[i], 1);
      }
      return v;
    }

    size_t rank() const {
      BitMatrix m = *this;
      return m.rref().size();
    }

  private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

}  // namespace f3
