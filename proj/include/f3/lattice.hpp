#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "f3/pauli.hpp"
#include "f3/stab_group.hpp"

namespace f3::lattice {

// Cells of the cubic lattice live at doubled integer coordinates:
// vertices all-even, edges one-odd, faces two-odd, cubes all-odd.
// The tau shift 1/2(1,1,1) is then the vector (1,1,1).
using DCoord = std::array<int, 3>;

inline DCoord add(const DCoord& a, const DCoord& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline DCoord sub(const DCoord& a, const DCoord& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
constexpr DCoord kShift = {1, 1, 1};

enum class CellType : uint8_t { Vertex = 0, Edge = 1, Face = 2, Cube = 3 };

inline CellType cell_type(const DCoord& c) {
  int odd = (c[0] & 1) + (c[1] & 1) + (c[2] & 1);
  return CellType(odd);
}
// edge direction / face normal
inline int cell_axis(const DCoord& c) {
  CellType t = cell_type(c);
  if (t == CellType::Edge) {
    for (int a = 0; a < 3; a++) if (c[a] & 1) return a;
  }
  if (t == CellType::Face) {
    for (int a = 0; a < 3; a++) if (!(c[a] & 1)) return a;
  }
  return -1;
}

enum class Layout { Original, Modified };

enum class Theory { ThreeFermion, ToricCode };

struct HamiltonianTerm {
  PauliOperator op;
  std::string kind;
  DCoord anchor;
};

class CubicLattice {
  public:
    CubicLattice(std::array<int, 3> dims, std::array<bool, 3> periodic, Layout layout);

    const std::array<int, 3>& dims() const { return dims_; }
    const std::array<bool, 3>& periodic() const { return periodic_; }
    Layout layout() const { return layout_; }

    // wraps periodic axes; nullopt if outside a smooth axis range
    std::optional<DCoord> normalize(DCoord c) const;
    bool exists(const DCoord& c) const { return normalize(c).has_value(); }

    const std::vector<DCoord>& cells(CellType t) const { return cells_[int(t)]; }
    int cell_rank(const DCoord& c) const;  // -1 if absent

    size_t num_qubits() const { return num_qubits_; }

    // qubit ids; -1 when the carrying cell does not exist
    int sigma_qubit(const DCoord& edge) const;
    int tau_qubit(const DCoord& cell) const;  // edge for Original, face for Modified

    // geometry (unnormalized neighbors; filter with exists/normalize)
    static std::array<DCoord, 6> star(const DCoord& v);        // edges at a vertex
    static std::array<DCoord, 4> boundary(const DCoord& face); // edges of a face
    static std::array<DCoord, 4> coboundary(const DCoord& edge);  // faces at an edge
    static std::array<DCoord, 6> cube_faces(const DCoord& cube);

    // multiply factor into op if the qubit exists; returns false if truncated away
    bool demand_sigma(PauliOperator& op, const DCoord& edge, char p) const;
    bool demand_tau(PauliOperator& op, const DCoord& cell, char p) const;

  private:
    std::array<int, 3> dims_;
    std::array<bool, 3> periodic_;
    Layout layout_;
    std::array<std::vector<DCoord>, 4> cells_;
    std::unordered_map<uint64_t, int> rank_;
    size_t num_qubits_ = 0;
    size_t num_edges_ = 0;

    static uint64_t key(const DCoord& c) {
      return (uint64_t(uint16_t(c[0] + 8)) << 32) |
             (uint64_t(uint16_t(c[1] + 8)) << 16) |
             uint64_t(uint16_t(c[2] + 8));
    }
};

// Hamiltonian generators. All-periodic lattices give the translation
// invariant bulk model; a smooth axis truncates factors on missing qubits.
std::vector<HamiltonianTerm> build_terms(const CubicLattice& lat, Theory theory);

// spec-named convenience wrappers
std::vector<HamiltonianTerm> build_3f(const CubicLattice& lat);
std::vector<HamiltonianTerm> build_modified_3f(const CubicLattice& lat);
std::vector<HamiltonianTerm> build_tc_walker_wang(const CubicLattice& lat);
std::vector<HamiltonianTerm> build_boundary(const CubicLattice& lat, Theory theory);

StabilizerGroup group_of(const std::vector<HamiltonianTerm>& terms,
                         bool check_commuting = false, bool track_witness = false);

// qubit relabeling original -> modified layout (tau qubits shift by 1/2(1,1,1))
std::vector<int> tau_translation_map(const CubicLattice& original,
                                     const CubicLattice& modified);

// full-lattice translation by w (doubled, all odd) on the modified layout
std::vector<int> translation_permutation(const CubicLattice& lat, const DCoord& w);

PauliOperator apply_qubit_map(const PauliOperator& p, const std::vector<int>& perm,
                              size_t out_qubits);

// closed cycle on a smooth boundary plus its companion over-links
struct BoundaryCycle {
  std::vector<DCoord> edges;   // closed edge path on the boundary plane
  int axis;                    // the smooth axis
  int side;                    // 0 = low boundary, 1 = high boundary
};

// species r: sigma-Z on c, sigma-X on over-links; species g: tau-Z on c,
// sigma-X tau-X on over-links (original layout)
PauliOperator boundary_logical(const CubicLattice& lat, const BoundaryCycle& c, char species);

// straight noncontractible boundary cycle in direction `dir` at transverse
// doubled coordinate `at` (both in-plane axes of the smooth boundary)
BoundaryCycle straight_boundary_cycle(const CubicLattice& lat, int smooth_axis, int side,
                                      int dir, int at);

// rectangle cycle on the boundary: corners (x0,y0)-(x1,y1) in the two
// in-plane axes (doubled, even), for contractibility tests
BoundaryCycle rect_boundary_cycle(const CubicLattice& lat, int smooth_axis, int side,
                                  std::array<int, 2> lo, std::array<int, 2> hi);

std::string terms_to_json(const std::vector<HamiltonianTerm>& terms);

}  // namespace f3::lattice
