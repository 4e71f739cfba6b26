#pragma once

#include <cstdint>

namespace f3 {

// Counter-based PRNG: every draw is a pure function of (seed, stream,
// counter), so parallel workers keyed by trial index reproduce exactly.
inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class Rng {
  public:
    Rng(uint64_t seed, uint64_t stream = 0)
        : state_(mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ull))) {}

    uint64_t next() {
      counter_++;
      return mix64(state_ + counter_ * 0xd1342543de82ef95ull);
    }

    bool bit() { return next() >> 63; }

    // uniform in [0,1)
    double uniform() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }

    bool bernoulli(double p) { return uniform() < p; }

    uint64_t below(uint64_t n) { return next() % n; }

  private:
    uint64_t state_;
    uint64_t counter_ = 0;
};

}  // namespace f3
