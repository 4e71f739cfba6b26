#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "f3/linalg.hpp"
#include "f3/pauli.hpp"

namespace f3 {

struct NonCommutingError : std::runtime_error {
  NonCommutingError(size_t i, size_t j)
      : std::runtime_error("generators " + std::to_string(i) + " and " +
                           std::to_string(j) + " anticommute") {}
};
struct MinusIdentityError : std::runtime_error {
  MinusIdentityError() : std::runtime_error("-identity generated") {}
};

// Canonicalized stabilizer group. Rows are kept in reduced row echelon
// form over the symplectic columns ordered [x_0..x_{n-1}, z_0..z_{n-1}]
// (X-block pivots before Z-block pivots) with exact phase tracking, so
// two generating sets of the same group produce identical row lists.
class StabilizerGroup {
  public:
    StabilizerGroup() = default;
    explicit StabilizerGroup(size_t n) : n_(n) {}

    size_t num_qubits() const { return n_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<PauliOperator>& canonical_rows() const { return rows_; }
    const std::vector<PauliOperator>& generators() const { return gens_; }

    // Column key for the symplectic ordering (X block first).
    size_t col_of(const PauliOperator& p) const {
      size_t lx = p.x.lowest();
      if (lx < n_) return lx;
      return n_ + p.z.lowest();
    }

    // Insert one generator, keeping canonical form. Throws MinusIdentityError
    // if a dependent phase conflict appears. Commutation is not checked here;
    // see canonicalize().
    void insert(const PauliOperator& g) {
      if (g.num_qubits() != n_) throw std::invalid_argument("qubit count mismatch");
      gens_.push_back(g);
      PauliOperator p = g;
      BitVec combo(track_ ? gens_.size() : 0);
      if (track_) combo.set(gens_.size() - 1, 1);
      reduce(p, track_ ? &combo : nullptr);
      if (p.is_identity_vector()) {
        if (p.phase != 0) throw MinusIdentityError();
        return;
      }
      size_t c = col_of(p);
      size_t pos = 0;
      while (pos < rows_.size() && col_of(rows_[pos]) < c) pos++;
      rows_.insert(rows_.begin() + pos, p);
      if (track_) {
        if (combo.size() < gens_.size()) {
          BitVec w(gens_.size());
          for (size_t i : combo.ones()) w.set(i, 1);
          combo = w;
        }
        combos_.insert(combos_.begin() + pos, combo);
      }
      // back-reduce earlier rows on the new pivot column
      for (size_t i = 0; i < rows_.size(); i++) {
        if (i == pos) continue;
        if (bit_at(rows_[i], c)) {
          rows_[i].mul(rows_[pos]);
          if (track_) xor_combo(i, pos);
        }
      }
    }

    bool contains(const PauliOperator& p) const {
      if (p.num_qubits() != n_) return false;
      PauliOperator q = p;
      reduce(q, nullptr);
      return q.is_identity_vector() && q.phase == 0;
    }

    bool contains_up_to_phase(const PauliOperator& p) const {
      PauliOperator q = p;
      reduce(q, nullptr);
      return q.is_identity_vector();
    }

    // residual phase of p after reduction, if p is in the group up to phase
    std::optional<uint8_t> phase_of(const PauliOperator& p) const {
      PauliOperator q = p;
      reduce(q, nullptr);
      if (!q.is_identity_vector()) return std::nullopt;
      return q.phase;
    }

    // Witness: indices of original generators whose product equals p.
    std::optional<std::vector<size_t>> witness(const PauliOperator& p) const {
      if (!track_) throw std::logic_error("witness tracking disabled");
      PauliOperator q = p;
      BitVec combo(gens_.size());
      reduce(q, &combo);
      if (!q.is_identity_vector() || q.phase != 0) return std::nullopt;
      std::vector<size_t> w;
      for (size_t i : combo.ones()) w.push_back(i);
      return w;
    }

    // Subgroup of elements supported entirely on the qubit set `keep`
    // (others' columns cleared first by elimination).
    StabilizerGroup restrict_to(const std::vector<bool>& keep) const {
      // eliminate on the complement columns first: reorder so that
      // complement columns are leading, re-run echelon, then take rows
      // with no support on the complement.
      std::vector<size_t> comp;
      for (size_t q = 0; q < n_; q++) if (!keep[q]) comp.push_back(q);
      std::vector<PauliOperator> work = rows_;
      size_t r = 0;
      auto bit = [&](const PauliOperator& p, size_t k) {
        size_t q = comp[k / 2];
        return (k % 2 == 0) ? p.x.get(q) : p.z.get(q);
      };
      for (size_t k = 0; k < comp.size() * 2 && r < work.size(); k++) {
        size_t sel = r;
        while (sel < work.size() && !bit(work[sel], k)) sel++;
        if (sel == work.size()) continue;
        std::swap(work[r], work[sel]);
        for (size_t i = 0; i < work.size(); i++)
          if (i != r && bit(work[i], k)) work[i].mul(work[r]);
        r++;
      }
      StabilizerGroup g(n_);
      for (size_t i = r; i < work.size(); i++) g.insert(work[i]);
      return g;
    }

    void enable_witness_tracking() { track_ = true; }

    friend StabilizerGroup canonicalize(const std::vector<PauliOperator>& gens,
                                        bool check_commuting, bool track_witness);

  private:
    bool bit_at(const PauliOperator& p, size_t c) const {
      return c < n_ ? p.x.get(c) : p.z.get(c - n_);
    }

    void reduce(PauliOperator& p, BitVec* combo) const {
      for (size_t i = 0; i < rows_.size(); i++) {
        size_t c = col_of(rows_[i]);
        if (bit_at(p, c)) {
          p.mul(rows_[i]);
          if (combo) {
            for (size_t j : combos_[i].ones())
              if (j < combo->size()) combo->flip(j);
          }
        }
      }
    }

    void xor_combo(size_t i, size_t j) {
      if (combos_[i].size() < combos_[j].size()) {
        BitVec w(combos_[j].size());
        for (size_t k : combos_[i].ones()) w.set(k, 1);
        combos_[i] = w;
      }
      for (size_t k : combos_[j].ones()) combos_[i].flip(k);
    }

    size_t n_ = 0;
    bool track_ = false;
    std::vector<PauliOperator> rows_;    // canonical form
    std::vector<BitVec> combos_;         // row i = product of gens_[combos_[i]]
    std::vector<PauliOperator> gens_;    // original generators, in given order
};

inline StabilizerGroup canonicalize(const std::vector<PauliOperator>& gens,
                                    bool check_commuting = true,
                                    bool track_witness = false) {
  if (gens.empty()) return StabilizerGroup();
  if (check_commuting) {
    for (size_t i = 0; i < gens.size(); i++) {
      if (!gens[i].is_hermitian()) throw std::invalid_argument("non-Hermitian generator");
      for (size_t j = i + 1; j < gens.size(); j++)
        if (!gens[i].commutes_with(gens[j])) throw NonCommutingError(i, j);
    }
  }
  StabilizerGroup g(gens[0].num_qubits());
  if (track_witness) g.enable_witness_tracking();
  for (const auto& p : gens) g.insert(p);
  return g;
}

// Basis of the centralizer of the group in the n-qubit Pauli group
// (phases ignored): all v with zero symplectic product against every row.
inline std::vector<PauliOperator> centralizer_basis(const StabilizerGroup& g) {
  size_t n = g.num_qubits();
  BitMatrix m(g.rank(), 2 * n);
  for (size_t i = 0; i < g.rank(); i++) {
    const PauliOperator& p = g.canonical_rows()[i];
    // symplectic form: <p, v> = p.x . v.z + p.z . v.x
    for (size_t q = 0; q < n; q++) {
      m.set(i, q, p.z.get(q));          // multiplies v.x
      m.set(i, n + q, p.x.get(q));      // multiplies v.z
    }
  }
  std::vector<PauliOperator> basis;
  for (const BitVec& v : m.nullspace()) {
    PauliOperator p(n);
    for (size_t q = 0; q < n; q++) {
      p.x.set(q, v.get(q));
      p.z.set(q, v.get(n + q));
    }
    basis.push_back(p);
  }
  return basis;
}

}  // namespace f3
