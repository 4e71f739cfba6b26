#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace f3::anyon {

// Superselection sectors {1, psi_r, psi_g, psi_b} with Z2xZ2 fusion.
// Two-bit encoding: vac=00, r=10, g=01, b=11, so fusion is XOR.
enum class AnyonLabel : uint8_t { Vac = 0, Pg = 1, Pr = 2, Pb = 3 };

inline AnyonLabel fuse(AnyonLabel a, AnyonLabel b) {
  return AnyonLabel(uint8_t(a) ^ uint8_t(b));
}

inline const char* name(AnyonLabel a) {
  switch (a) {
    case AnyonLabel::Vac: return "1";
    case AnyonLabel::Pr: return "psi_r";
    case AnyonLabel::Pg: return "psi_g";
    case AnyonLabel::Pb: return "psi_b";
  }
  return "?";
}

// color index 0=r,1=g,2=b for the three fermions
inline int color_of(AnyonLabel a) {
  switch (a) {
    case AnyonLabel::Pr: return 0;
    case AnyonLabel::Pg: return 1;
    case AnyonLabel::Pb: return 2;
    default: throw std::invalid_argument("vacuum has no color");
  }
}
inline AnyonLabel fermion(int color) {
  switch (color) {
    case 0: return AnyonLabel::Pr;
    case 1: return AnyonLabel::Pg;
    case 2: return AnyonLabel::Pb;
  }
  throw std::invalid_argument("bad color");
}

// S and T data shared by the three-fermion theory and the toric code
// warm-up (same S, different spins).
struct ModularData {
  std::array<std::array<int, 4>, 4> S;  // unnormalized entries, +-1; D = 2
  std::array<int, 4> T;                 // diagonal, +-1
  std::string name;
};

const ModularData& three_fermion_data();
const ModularData& toric_code_data();

// label order for matrix indexing: 1, psi_r, psi_g, psi_b
inline int index_of(AnyonLabel a) {
  switch (a) {
    case AnyonLabel::Vac: return 0;
    case AnyonLabel::Pr: return 1;
    case AnyonLabel::Pg: return 2;
    case AnyonLabel::Pb: return 3;
  }
  return -1;
}
inline AnyonLabel label_at(int idx) {
  static const AnyonLabel order[4] = {AnyonLabel::Vac, AnyonLabel::Pr,
                                      AnyonLabel::Pg, AnyonLabel::Pb};
  return order[idx];
}

inline int monodromy(const ModularData& d, AnyonLabel a, AnyonLabel b) {
  return d.S[index_of(a)][index_of(b)];
}
inline int topological_spin(const ModularData& d, AnyonLabel a) {
  return d.T[index_of(a)];
}

// c_ mod 8 from (1/D) sum_a d_a^2 theta_a = exp(2 pi i c_/8)
int chiral_central_charge(const ModularData& d);

// S3 permutations of the colors {r,g,b}, cycle-notation io, composition
// right-to-left: (rg).(gb) = (rgb).
struct SymmetryElement {
  std::array<uint8_t, 3> perm = {0, 1, 2};  // color -> color

  static SymmetryElement identity() { return {}; }
  static SymmetryElement parse(const std::string& cycles);

  bool is_identity() const { return perm[0] == 0 && perm[1] == 1 && perm[2] == 2; }
  bool is_two_cycle() const;
  bool is_three_cycle() const { return !is_identity() && !is_two_cycle(); }
  int fixed_color() const;  // for 2-cycles

  SymmetryElement inverse() const {
    SymmetryElement r;
    for (int c = 0; c < 3; c++) r.perm[perm[c]] = uint8_t(c);
    return r;
  }

  std::string str() const;
  bool operator==(const SymmetryElement& o) const { return perm == o.perm; }
  bool operator<(const SymmetryElement& o) const { return perm < o.perm; }
};

// a.b = apply b first, then a
inline SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b) {
  SymmetryElement r;
  for (int c = 0; c < 3; c++) r.perm[c] = a.perm[b.perm[c]];
  return r;
}

std::vector<SymmetryElement> all_s3();

inline AnyonLabel apply_symmetry(const SymmetryElement& g, AnyonLabel a) {
  if (a == AnyonLabel::Vac) return a;
  return fermion(g.perm[color_of(a)]);
}

// An anyon or a twist-defect sector of the S3-enriched theory.
struct Label {
  bool is_defect = false;
  AnyonLabel anyon = AnyonLabel::Vac;
  SymmetryElement g;  // nontrivial for defects
  int sign = +1;      // +-1 for 2-cycle defects; ignored for 3-cycles

  static Label make_anyon(AnyonLabel a) { return {false, a, {}, +1}; }
  static Label defect(const SymmetryElement& g, int sign = +1);

  double quantum_dimension() const;
  SymmetryElement grading() const { return is_defect ? g : SymmetryElement::identity(); }
  std::string str() const;
  bool operator==(const Label& o) const;
  bool operator<(const Label& o) const;
};

// Exact fusion multiset; defect grading composes as grading(t1).grading(t2).
std::vector<Label> fuse_defects(const Label& t1, const Label& t2);

// Anyons that condense on T_g defects. g must be nontrivial.
std::vector<AnyonLabel> condensable(const SymmetryElement& g);

struct ConsistencyReport {
  struct Check {
    std::string name;
    bool pass;
  };
  std::vector<Check> checks;
  bool all_pass() const {
    for (auto& c : checks) if (!c.pass) return false;
    return true;
  }
};

ConsistencyReport verify_consistency();

std::string dump_tables_json();

}  // namespace f3::anyon
