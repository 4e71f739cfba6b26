#pragma once

#include <array>
#include <string>
#include <vector>

#include "f3/anyon.hpp"
#include "f3/lattice.hpp"
#include "f3/pauli.hpp"

namespace f3::symmetry {

using anyon::SymmetryElement;
using lattice::CubicLattice;
using lattice::DCoord;

// Onsite part u(g) as a 2-qubit Clifford on one (sigma, tau) site pair.
// Generators: u(rg) = SWAP, u(rgb) = SWAP . CNOT(sigma->tau).
CliffordMap onsite_u(const SymmetryElement& g);

// the same unitary as an exact 4x4 computational-basis matrix
using Mat4 = std::array<std::array<int, 4>, 4>;
Mat4 onsite_matrix(const SymmetryElement& g);
Mat4 matmul(const Mat4& a, const Mat4& b);

// Non-onsite part: tau-slot translation vector in doubled coordinates.
// (2,2,2) for 2-cycles, zero otherwise.
DCoord nononsite_v(const SymmetryElement& g);

// S(g) = V(g) U(g) acting on lattice Pauli operators. On the original
// layout the site pair is the two qubits of an edge; on the modified
// layout it is (edge e, face e + (1,1,1)).
class SymmetryUnitary {
  public:
    SymmetryUnitary(const CubicLattice& lat, const SymmetryElement& g);

    const SymmetryElement& element() const { return g_; }
    const DCoord& translation() const { return tvec_; }

    PauliOperator apply(const PauliOperator& p) const;

  private:
    const CubicLattice& lat_;
    SymmetryElement g_;
    CliffordMap u_;     // 2-qubit onsite map
    DCoord tvec_;       // tau translation, doubled coords
};

// Eq.-(30)-style realisation of S(rg) on the modified layout: a pure
// lattice translation by w = (+-1,+-1,+-1) in doubled coordinates.
std::vector<int> modified_layout_symmetry(const CubicLattice& lat, const DCoord& w);

struct SymmetryCheck {
  bool pass = true;
  std::string first_failure;
  // per-generator witness decompositions over the generating terms
  std::vector<std::vector<size_t>> witnesses;
};

// Every generator's image under S(g) must be a group member with phase +1.
SymmetryCheck verify_hamiltonian_symmetry(const CubicLattice& lat, lattice::Theory theory,
                                          const SymmetryElement& g,
                                          bool collect_witnesses = false);

// Induced permutation of the B-term species {r,g,b}; throws if the term
// images are not single B terms of a uniform species with shifted anchors.
std::array<int, 3> term_species_permutation(const CubicLattice& lat,
                                            const SymmetryElement& g);

}  // namespace f3::symmetry
