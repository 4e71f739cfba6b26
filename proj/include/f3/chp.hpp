#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "f3/pauli.hpp"
#include "f3/rng.hpp"

namespace f3 {

// Tableau stabilizer simulator (CHP style, with destabilizers) supporting
// measurement of arbitrary Pauli observables. State starts as |0...0>.
class StabilizerSimulator {
  public:
    explicit StabilizerSimulator(size_t n) : n_(n) {
      for (size_t q = 0; q < n; q++) {
        stab_.push_back(PauliOperator::single(n, q, 'Z'));
        destab_.push_back(PauliOperator::single(n, q, 'X'));
      }
    }

    size_t num_qubits() const { return n_; }

    void apply(const CliffordMap& map) {
      for (auto& p : stab_) p = map.apply(p);
      for (auto& p : destab_) p = map.apply(p);
    }

    struct MeasureResult {
      bool outcome;        // measured eigenvalue is (-1)^outcome
      bool deterministic;
    };

    // Measure Hermitian Pauli observable p (phase 0 or 2).
    MeasureResult measure(const PauliOperator& p, Rng& rng) {
      if (!p.is_hermitian()) throw std::invalid_argument("non-Hermitian observable");
      size_t k = n_;
      for (size_t i = 0; i < n_; i++) {
        if (!stab_[i].commutes_with(p)) { k = i; break; }
      }
      if (k == n_) {
        // deterministic: p = +/- product of stabilizers selected by destabilizers
        PauliOperator acc = PauliOperator::identity(n_);
        for (size_t i = 0; i < n_; i++)
          if (!destab_[i].commutes_with(p)) acc.mul(stab_[i]);
        // acc equals p up to sign
        uint8_t d = uint8_t((acc.phase - p.phase) & 3);
        if ((acc.x != p.x) || (acc.z != p.z) || (d & 1))
          throw std::logic_error("tableau inconsistency");
        return {d == 2, true};
      }
      // random outcome
      bool out = rng.bit();
      for (size_t i = 0; i < n_; i++) {
        if (i == k) continue;
        if (!stab_[i].commutes_with(p)) stab_[i].mul(stab_[k]);
        if (!destab_[i].commutes_with(p)) destab_[i].mul(stab_[k]);
      }
      destab_[k] = stab_[k];
      stab_[k] = p;
      if (out) stab_[k].phase = uint8_t((stab_[k].phase + 2) & 3);
      return {out, false};
    }

    // expectation of Hermitian Pauli: +1/-1 if deterministic, 0 otherwise
    int expectation(const PauliOperator& p) const {
      for (size_t i = 0; i < n_; i++)
        if (!stab_[i].commutes_with(p)) return 0;
      PauliOperator acc = PauliOperator::identity(n_);
      for (size_t i = 0; i < n_; i++)
        if (!destab_[i].commutes_with(p)) acc.mul(stab_[i]);
      return ((acc.phase - p.phase) & 3) == 2 ? -1 : 1;
    }

    const std::vector<PauliOperator>& stabilizers() const { return stab_; }

  private:
    size_t n_;
    std::vector<PauliOperator> stab_, destab_;
};

}  // namespace f3
