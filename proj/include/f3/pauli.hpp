#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "f3/bitvec.hpp"

namespace f3 {

// n-qubit Pauli operator  i^phase * prod_j P_j  with literal Hermitian
// factors P_j in {I,X,Y,Z} encoded as (x_j, z_j) bit pairs (Y = 11).
// Hermitian operators therefore carry phase in {0,2}.
class PauliOperator {
  public:
    BitVec x, z;
    uint8_t phase = 0;  // power of i, mod 4

    PauliOperator() = default;
    explicit PauliOperator(size_t n) : x(n), z(n) {}

    size_t num_qubits() const { return x.size(); }

    static PauliOperator identity(size_t n) { return PauliOperator(n); }

    // single-qubit factor constructors
    static PauliOperator single(size_t n, size_t q, char p, uint8_t ph = 0) {
      PauliOperator r(n);
      r.phase = ph;
      r.set(q, p);
      return r;
    }

    void set(size_t q, char p) {
      switch (p) {
        case 'I': x.set(q, 0); z.set(q, 0); break;
        case 'X': x.set(q, 1); z.set(q, 0); break;
        case 'Y': x.set(q, 1); z.set(q, 1); break;
        case 'Z': x.set(q, 0); z.set(q, 1); break;
        default: throw std::invalid_argument("bad Pauli letter");
      }
    }

    char get(size_t q) const {
      bool a = x.get(q), b = z.get(q);
      return a ? (b ? 'Y' : 'X') : (b ? 'Z' : 'I');
    }

    bool is_identity_vector() const { return !x.any() && !z.any(); }
    bool is_hermitian() const { return phase == 0 || phase == 2; }
    size_t weight() const {
      size_t c = 0;
      for (size_t i = 0; i < x.words(); i++)
        c += __builtin_popcountll(x.word(i) | z.word(i));
      return c;
    }

    void mul(const PauliOperator& o) {
      if (num_qubits() != o.num_qubits())
        throw std::invalid_argument("PauliOperator length mismatch");
      // i-exponent from per-qubit literal products:
      // cyclic successors (XY, YZ, ZX) contribute +1, predecessors -1.
      int plus = 0, minus = 0;
      for (size_t i = 0; i < x.words(); i++) {
        uint64_t a = x.word(i), b = z.word(i), c = o.x.word(i), d = o.z.word(i);
        uint64_t m1 = (a & ~b & c & d) | (a & b & ~c & d) | (~a & b & c & ~d);
        uint64_t m3 = (a & b & c & ~d) | (~a & b & c & d) | (a & ~b & ~c & d);
        plus += __builtin_popcountll(m1);
        minus += __builtin_popcountll(m3);
      }
      phase = uint8_t((phase + o.phase + plus + 4u * 1024u * 1024u - minus) & 3u);
      x ^= o.x;
      z ^= o.z;
    }

    bool commutes_with(const PauliOperator& o) const {
      if (num_qubits() != o.num_qubits())
        throw std::invalid_argument("PauliOperator length mismatch");
      return !(x.dot(o.z) ^ z.dot(o.x));
    }

    PauliOperator inverse() const {
      PauliOperator r = *this;
      // Hermitian part squares to identity; only the i^phase inverts.
      r.phase = uint8_t((4 - phase) & 3);
      return r;
    }

    bool operator==(const PauliOperator& o) const {
      return phase == o.phase && x == o.x && z == o.z;
    }
    bool operator!=(const PauliOperator& o) const { return !(*this == o); }

    // "+1 XIZ", "-i YY", ... phase prefix then letters
    std::string str() const {
      static const char* pre[4] = {"+1 ", "+i ", "-1 ", "-i "};
      std::string s = pre[phase];
      for (size_t q = 0; q < num_qubits(); q++) s += get(q);
      return s;
    }

    static PauliOperator parse(const std::string& s);
};

inline PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  PauliOperator r = a;
  r.mul(b);
  return r;
}

inline bool commutes(const PauliOperator& a, const PauliOperator& b) {
  return a.commutes_with(b);
}

inline PauliOperator PauliOperator::parse(const std::string& s) {
  size_t i = 0;
  uint8_t ph = 0;
  if (i + 1 < s.size() && (s[i] == '+' || s[i] == '-')) {
    bool neg = s[i] == '-';
    bool im = s[i + 1] == 'i';
    if (im || s[i + 1] == '1') {
      ph = uint8_t((neg ? 2 : 0) + (im ? 1 : 0));
      i += 2;
    } else if (neg || s[i] == '+') {
      ph = neg ? 2 : 0;
      i += 1;
    }
  }
  while (i < s.size() && s[i] == ' ') i++;
  PauliOperator p(s.size() - i);
  p.phase = ph;
  size_t q = 0;
  for (; i < s.size(); i++, q++) p.set(q, s[i]);
  return p;
}

// Clifford map given by the images of each single-qubit X_j and Z_j.
// Used for onsite symmetry unitaries and logical tableaus.
class CliffordMap {
  public:
    std::vector<PauliOperator> x_image, z_image;

    CliffordMap() = default;
    static CliffordMap identity(size_t n) {
      CliffordMap m;
      for (size_t q = 0; q < n; q++) {
        m.x_image.push_back(PauliOperator::single(n, q, 'X'));
        m.z_image.push_back(PauliOperator::single(n, q, 'Z'));
      }
      return m;
    }

    size_t num_qubits() const { return x_image.size(); }

    // symplectic condition: images preserve all commutation relations
    bool is_valid() const {
      size_t n = num_qubits();
      for (size_t i = 0; i < n; i++) {
        if (x_image[i].commutes_with(z_image[i])) return false;
        if (!x_image[i].is_hermitian() || !z_image[i].is_hermitian()) return false;
        for (size_t j = i + 1; j < n; j++) {
          if (!x_image[i].commutes_with(x_image[j])) return false;
          if (!x_image[i].commutes_with(z_image[j])) return false;
          if (!z_image[i].commutes_with(x_image[j])) return false;
          if (!z_image[i].commutes_with(z_image[j])) return false;
        }
      }
      return true;
    }

    PauliOperator apply(const PauliOperator& p) const {
      if (p.num_qubits() != num_qubits())
        throw std::invalid_argument("CliffordMap size mismatch");
      size_t m = x_image.empty() ? 0 : x_image[0].num_qubits();
      PauliOperator r(m);
      r.phase = p.phase;
      for (size_t q : p.x.ones()) r.mul(x_image[q]);
      for (size_t q : p.z.ones()) {
        // literal Y_q = i X_q Z_q; the X part was already multiplied in,
        // so add the i here to keep the image exact.
        if (p.x.get(q)) r.phase = uint8_t((r.phase + 1) & 3);
        r.mul(z_image[q]);
      }
      return r;
    }

    // this after other:  (this o other)
    CliffordMap compose_after(const CliffordMap& other) const {
      CliffordMap r;
      for (const auto& p : other.x_image) r.x_image.push_back(apply(p));
      for (const auto& p : other.z_image) r.z_image.push_back(apply(p));
      return r;
    }
};

inline PauliOperator conjugate(const PauliOperator& p, const CliffordMap& map) {
  return map.apply(p);
}

}  // namespace f3
