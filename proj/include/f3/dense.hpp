#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "f3/pauli.hpp"
#include "f3/stab_group.hpp"

namespace f3 {

// Exact dense state-vector utilities for cross-checking the stabilizer
// machinery on <= 20 qubits.
namespace dense {

using cplx = std::complex<double>;
using Vec = std::vector<cplx>;

constexpr size_t kMaxQubits = 20;

inline void check_size(size_t n) {
  if (n > kMaxQubits) throw std::invalid_argument("dense oracle limited to 20 qubits");
}

// apply i^phase * prod P_j to a computational-basis expansion
inline Vec apply_pauli(const PauliOperator& p, const Vec& v) {
  size_t n = p.num_qubits();
  check_size(n);
  Vec r(v.size(), 0.0);
  static const cplx ii(0.0, 1.0);
  cplx global = 1.0;
  for (uint8_t k = 0; k < p.phase; k++) global *= ii;
  // per-qubit: X flips bit; Z gives (-1)^bit; Y = i X Z as literal Pauli
  uint64_t xmask = 0, zmask = 0;
  size_t ycount = 0;
  for (size_t q = 0; q < n; q++) {
    if (p.x.get(q)) xmask |= (1ull << q);
    if (p.z.get(q)) zmask |= (1ull << q);
    if (p.x.get(q) && p.z.get(q)) ycount++;
  }
  // literal Y contributes factor i per Y beyond the X.Z decomposition
  for (size_t k = 0; k < ycount; k++) global *= ii;
  for (uint64_t b = 0; b < v.size(); b++) {
    if (v[b] == 0.0) continue;
    uint64_t nb = b ^ xmask;
    int zpar = __builtin_parityll(b & zmask);
    r[nb] += global * (zpar ? -1.0 : 1.0) * v[b];
  }
  return r;
}

// project with (I + S)/2 and return squared norm of the result
inline double project(const PauliOperator& s, Vec& v) {
  Vec sv = apply_pauli(s, v);
  double norm2 = 0;
  for (size_t b = 0; b < v.size(); b++) {
    v[b] = 0.5 * (v[b] + sv[b]);
    norm2 += std::norm(v[b]);
  }
  return norm2;
}

// Dense +1 eigenstate of all stabilizer rows (the group must have
// rank == n so the state is unique).
inline Vec state_of(const StabilizerGroup& g) {
  size_t n = g.num_qubits();
  check_size(n);
  if (g.rank() != n) throw std::invalid_argument("state_of needs a full-rank group");
  for (uint64_t start = 0; start < (1ull << n); start++) {
    Vec v(1ull << n, 0.0);
    v[start] = 1.0;
    double norm2 = 1.0;
    for (const auto& s : g.canonical_rows()) {
      norm2 = project(s, v);
      if (norm2 < 1e-12) break;
    }
    if (norm2 < 1e-12) continue;
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : v) a *= inv;
    return v;
  }
  throw std::logic_error("no support found for stabilizer state");
}

inline cplx inner(const Vec& a, const Vec& b) {
  cplx s = 0;
  for (size_t i = 0; i < a.size(); i++) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace dense
}  // namespace f3
