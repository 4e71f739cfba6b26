#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f3/anyon.hpp"
#include "f3/bitvec.hpp"
#include "f3/pauli.hpp"

namespace f3::braid {

// Monomial in the Majorana algebra over 4n modes: i^phase * prod gamma_j
// with modes listed ascending. gamma_j gamma_k + gamma_k gamma_j = 2 delta.
struct MajoranaMonomial {
  BitVec modes;
  uint8_t phase = 0;  // power of i mod 4

  explicit MajoranaMonomial(size_t num_modes) : modes(num_modes) {}
  static MajoranaMonomial unit(size_t num_modes, size_t j, uint8_t ph = 0) {
    MajoranaMonomial m(num_modes);
    m.modes.set(j, 1);
    m.phase = ph;
    return m;
  }

  size_t num_modes() const { return modes.size(); }
  MajoranaMonomial times(const MajoranaMonomial& o) const;
  bool operator==(const MajoranaMonomial& o) const {
    return phase == o.phase && modes == o.modes;
  }
};

// Logical dictionary for n qubits encoded in blocks of four twists with
// trivial total charge (gamma_1 gamma_2 gamma_3 gamma_4 = I per block):
//   X_i = i g1 g3,  Z_i = i g1 g2,  Y_i = i g1 g4   (block-local indices)
MajoranaMonomial logical_x(size_t n, size_t i);
MajoranaMonomial logical_z(size_t n, size_t i);
MajoranaMonomial logical_y(size_t n, size_t i);
MajoranaMonomial block_redundancy(size_t n, size_t i);

// Reduce a monomial to a logical Pauli using the redundancy relations.
// nullopt if the monomial is not a logical operator (odd block support).
std::optional<PauliOperator> to_logical_pauli(const MajoranaMonomial& m);

// Braid word on 4n strands: letters +-k for sigma_k^{+-1}, k in 1..4n-1.
struct BraidWord {
  std::vector<int> letters;
  size_t strands = 0;

  BraidWord() = default;
  BraidWord(std::vector<int> ls, size_t s) : letters(std::move(ls)), strands(s) {}
  BraidWord inverse() const {
    BraidWord w;
    w.strands = strands;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
    return w;
  }
  BraidWord concat(const BraidWord& o) const {
    BraidWord w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
  }
  // permutation induced on strand positions (position -> where its strand ends)
  std::vector<int> permutation() const;
  bool is_pure() const;
};

// Clifford action on the n encoded qubits; signed images carry the Pauli
// byproduct.
struct LogicalClifford {
  CliffordMap map;
  bool equals_up_to_pauli(const LogicalClifford& o) const;
  bool is_entangling() const;
  std::string str() const;
};

// Twist sectors per strand (2-cycles only; one sector per block of four).
// Same-sector exchanges follow the Majorana exchange rule. Exchanges of
// strands from different sectors additionally conjugate by the charge
// coupler exp(i pi n_P n_Q) of the two twists' wall pairs, the lattice
// image of the fermion line the transported charge leaves on the crossed
// wall. Identity up to this convention is validated against the gate
// tableaus below.
struct SectorAssignment {
  std::vector<anyon::SymmetryElement> block_sector;  // size n
  static SectorAssignment uniform(size_t n, const anyon::SymmetryElement& g) {
    return {std::vector<anyon::SymmetryElement>(n, g)};
  }
};

MajoranaMonomial conjugate_by_braid(const BraidWord& word, const SectorAssignment& sectors,
                                    const MajoranaMonomial& m);

LogicalClifford apply_braid(const BraidWord& word, const SectorAssignment& sectors);

// convenience: all blocks in one 2-cycle sector
LogicalClifford apply_braid(const BraidWord& word);

bool entangling(const BraidWord& word, const SectorAssignment& sectors);

enum class NamedGate { H, S, CZ };

// The braid realizing each named gate: H and S on one block per the braid
// words sigma2 sigma3 sigma1 and sigma3; CZ as a pure braid on two blocks
// of different sectors that threads one twist pair through the other.
BraidWord compile_named_gate(NamedGate gate);
SectorAssignment named_gate_sectors(NamedGate gate);

// reference tableaus
LogicalClifford gate_tableau(NamedGate gate);

// order of the group generated by the words, modulo Pauli factors
size_t clifford_group_closure(const std::vector<LogicalClifford>& gens);

// CZ between two like-sector qubits mediated by an ancilla of a different
// sector: CZ(1,a), H(a), CZ(2,a), X-measure a; frame correction Z1^m.
struct AncillaCircuitReport {
  bool verified = false;            // both outcomes give CZ up to the frame
  std::string channel[2];           // per-outcome conjugation table
};
AncillaCircuitReport cz_via_ancilla();

std::string braid_to_json(const BraidWord& w, const SectorAssignment& s);

}  // namespace f3::braid
