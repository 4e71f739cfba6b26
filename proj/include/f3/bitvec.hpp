#pragma once

#include <cstdint>
#include <cassert>
#include <vector>

namespace f3 {

// Dense GF(2) vector packed into 64-bit words.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    size_t words() const { return w_.size(); }
    uint64_t word(size_t i) const { return w_[i]; }
    uint64_t& word(size_t i) { return w_[i]; }

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
      uint64_t m = uint64_t(1) << (i & 63);
      if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void operator^=(const BitVec& o) {
      assert(n_ == o.n_);
      for (size_t i = 0; i < w_.size(); i++) w_[i] ^= o.w_[i];
    }

    // parity of <this, o> over GF(2)
    bool dot(const BitVec& o) const {
      assert(n_ == o.n_);
      uint64_t acc = 0;
      for (size_t i = 0; i < w_.size(); i++) acc ^= w_[i] & o.w_[i];
      return __builtin_parityll(acc);
    }

    size_t popcount() const {
      size_t c = 0;
      for (uint64_t w : w_) c += __builtin_popcountll(w);
      return c;
    }

    bool any() const {
      for (uint64_t w : w_) if (w) return true;
      return false;
    }

    // index of lowest set bit, or size() if none
    size_t lowest() const {
      for (size_t i = 0; i < w_.size(); i++)
        if (w_[i]) return i * 64 + __builtin_ctzll(w_[i]);
      return n_;
    }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }
    bool operator<(const BitVec& o) const { return w_ < o.w_; }

    std::vector<size_t> ones() const {
      std::vector<size_t> r;
      for (size_t i = 0; i < w_.size(); i++) {
        uint64_t w = w_[i];
        while (w) {
          r.push_back(i * 64 + __builtin_ctzll(w));
          w &= w - 1;
        }
      }
      return r;
    }

  private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace f3
