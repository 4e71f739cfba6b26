#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "f3/anyon.hpp"

using namespace f3::anyon;

TEST_CASE("fusion table") {
  CHECK(fuse(AnyonLabel::Pr, AnyonLabel::Pg) == AnyonLabel::Pb);
  CHECK(fuse(AnyonLabel::Pb, AnyonLabel::Pb) == AnyonLabel::Vac);
  for (int a = 0; a < 4; a++) {
    CHECK(fuse(label_at(a), AnyonLabel::Vac) == label_at(a));
    CHECK(fuse(label_at(a), label_at(a)) == AnyonLabel::Vac);
  }
}

TEST_CASE("modular data") {
  const auto& d = three_fermion_data();
  CHECK(monodromy(d, AnyonLabel::Pr, AnyonLabel::Pg) == -1);
  CHECK(monodromy(d, AnyonLabel::Vac, AnyonLabel::Pb) == 1);
  CHECK(topological_spin(d, AnyonLabel::Pb) == -1);
  CHECK(topological_spin(d, AnyonLabel::Vac) == 1);
  // toric code spins
  const auto& tc = toric_code_data();
  CHECK(topological_spin(tc, AnyonLabel::Pr) == 1);
  CHECK(topological_spin(tc, AnyonLabel::Pb) == -1);
}

TEST_CASE("chiral central charge") {
  CHECK(chiral_central_charge(three_fermion_data()) == 4);
  CHECK(chiral_central_charge(toric_code_data()) == 0);
  // Gauss sum direct evaluation for 3F: (1-1-1-1)/2 = -1
  int sum = 0;
  for (int a = 0; a < 4; a++) sum += three_fermion_data().T[a];
  CHECK(sum == -2);  // before dividing by D=2
}

TEST_CASE("S3 parsing, composition, action") {
  auto rg = SymmetryElement::parse("(rg)");
  auto gb = SymmetryElement::parse("(gb)");
  auto rgb = SymmetryElement::parse("(rgb)");
  CHECK(compose(rg, gb) == rgb);  // (rg).(gb) = (rgb)
  CHECK(rg.str() == "(rg)");
  CHECK(rgb.str() == "(rgb)");
  CHECK(SymmetryElement::parse("(rbg)").str() == "(rbg)");
  CHECK(apply_symmetry(rg, AnyonLabel::Pr) == AnyonLabel::Pg);
  CHECK(apply_symmetry(rg, AnyonLabel::Vac) == AnyonLabel::Vac);
  CHECK(apply_symmetry(rgb, AnyonLabel::Pb) == AnyonLabel::Pr);
  CHECK(all_s3().size() == 6);
  CHECK(rg.is_two_cycle());
  CHECK(rgb.is_three_cycle());
  CHECK(rg.fixed_color() == 2);
  CHECK(compose(rgb, rgb.inverse()).is_identity());
}

TEST_CASE("defect fusion rules") {
  auto rg = SymmetryElement::parse("(rg)");
  auto rb = SymmetryElement::parse("(rb)");
  auto rgb = SymmetryElement::parse("(rgb)");
  auto rbg = SymmetryElement::parse("(rbg)");

  auto Trgp = Label::defect(rg, +1);
  auto Trgm = Label::defect(rg, -1);

  // T(rg)+ x T(rg)+ = 1 + psi_b
  auto out = fuse_defects(Trgp, Trgp);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == Label::make_anyon(AnyonLabel::Vac));
  CHECK(out[1] == Label::make_anyon(AnyonLabel::Pb));

  // opposite signs give the two permuted fermions
  out = fuse_defects(Trgp, Trgm);
  REQUIRE(out.size() == 2);
  std::sort(out.begin(), out.end());
  CHECK(out[0] == Label::make_anyon(AnyonLabel::Pg));
  CHECK(out[1] == Label::make_anyon(AnyonLabel::Pr));

  // T(rgb) x T(rbg) = 1 + r + g + b
  out = fuse_defects(Label::defect(rgb), Label::defect(rbg));
  CHECK(out.size() == 4);

  // T(rgb) x T(rgb) = 2 T(rbg)
  out = fuse_defects(Label::defect(rgb), Label::defect(rgb));
  REQUIRE(out.size() == 2);
  CHECK(out[0] == Label::defect(rbg));
  CHECK(out[1] == Label::defect(rbg));

  // 2-cycle x 3-cycle gives both signs of the product-graded 2-cycle
  out = fuse_defects(Trgp, Label::defect(rgb));
  REQUIRE(out.size() == 2);
  auto prod = compose(rg, rgb);
  CHECK(prod.is_two_cycle());
  CHECK(out[0] == Label::defect(prod, +1));
  CHECK(out[1] == Label::defect(prod, -1));

  // distinct 2-cycles fuse to the single graded 3-cycle defect
  out = fuse_defects(Trgp, Label::defect(rb, +1));
  REQUIRE(out.size() == 1);
  CHECK(out[0] == Label::defect(compose(rg, rb)));

  // anyon absorption: fixed fermion preserves sign, permuted ones flip it
  out = fuse_defects(Trgp, Label::make_anyon(AnyonLabel::Pb));
  REQUIRE(out.size() == 1);
  CHECK(out[0] == Trgp);
  out = fuse_defects(Trgp, Label::make_anyon(AnyonLabel::Pr));
  REQUIRE(out.size() == 1);
  CHECK(out[0] == Trgm);
}

TEST_CASE("condensation") {
  auto crg = condensable(SymmetryElement::parse("(rg)"));
  REQUIRE(crg.size() == 2);
  CHECK(crg[0] == AnyonLabel::Vac);
  CHECK(crg[1] == AnyonLabel::Pb);
  auto cgb = condensable(SymmetryElement::parse("(gb)"));
  CHECK(cgb[1] == AnyonLabel::Pr);
  auto c3 = condensable(SymmetryElement::parse("(rgb)"));
  CHECK(c3.size() == 4);
  CHECK_THROWS(condensable(SymmetryElement::identity()));
}

TEST_CASE("consistency report all green") {
  auto rep = verify_consistency();
  for (auto& c : rep.checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass());
}

TEST_CASE("json dump is nonempty and mentions every sector") {
  auto s = dump_tables_json();
  CHECK(s.find("psi_r") != std::string::npos);
  CHECK(s.find("T(rgb)") != std::string::npos);
  CHECK(s.find("c_minus_mod8\": 4") != std::string::npos);
}
