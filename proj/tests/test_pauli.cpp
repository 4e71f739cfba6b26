#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include "f3/chp.hpp"
#include "f3/dense.hpp"
#include "f3/pauli.hpp"
#include "f3/stab_group.hpp"

using namespace f3;
using cplx = std::complex<double>;

namespace {

// dense matrix oracle for small Pauli products
using Mat = std::vector<std::vector<cplx>>;

Mat pauli_matrix(const PauliOperator& p) {
  size_t n = p.num_qubits();
  size_t dim = 1ull << n;
  Mat m(dim, std::vector<cplx>(dim, 0.0));
  for (size_t col = 0; col < dim; col++) {
    dense::Vec v(dim, 0.0);
    v[col] = 1.0;
    dense::Vec w = dense::apply_pauli(p, v);
    for (size_t row = 0; row < dim; row++) m[row][col] = w[row];
  }
  return m;
}

Mat matmul(const Mat& a, const Mat& b) {
  size_t dim = a.size();
  Mat c(dim, std::vector<cplx>(dim, 0.0));
  for (size_t i = 0; i < dim; i++)
    for (size_t k = 0; k < dim; k++) {
      if (a[i][k] == 0.0) continue;
      for (size_t j = 0; j < dim; j++) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

bool mat_eq(const Mat& a, const Mat& b) {
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < a.size(); j++)
      if (std::abs(a[i][j] - b[i][j]) > 1e-9) return false;
  return true;
}

PauliOperator random_pauli(size_t n, std::mt19937& gen, bool hermitian = true) {
  PauliOperator p(n);
  static const char letters[4] = {'I', 'X', 'Y', 'Z'};
  for (size_t q = 0; q < n; q++) p.set(q, letters[gen() % 4]);
  p.phase = hermitian ? uint8_t(2 * (gen() % 2)) : uint8_t(gen() % 4);
  return p;
}

}  // namespace

TEST_CASE("single-qubit products match Pauli algebra") {
  auto X = PauliOperator::parse("+1 X");
  auto Z = PauliOperator::parse("+1 Z");
  auto Y = PauliOperator::parse("+1 Y");
  // X.Z = -iY
  auto xz = multiply(X, Z);
  CHECK(xz.get(0) == 'Y');
  CHECK(xz.phase == 3);
  // a . a^-1 = identity with phase 0
  auto ixz = xz.inverse();
  auto id = multiply(xz, ixz);
  CHECK(id.is_identity_vector());
  CHECK(id.phase == 0);
  // Y.Y = I
  auto yy = multiply(Y, Y);
  CHECK(yy.is_identity_vector());
  CHECK(yy.phase == 0);
}

TEST_CASE("XX.ZZ = -YY (2x2 matrix product oracle)") {
  auto a = PauliOperator::parse("+1 XX");
  auto b = PauliOperator::parse("+1 ZZ");
  auto prod = multiply(a, b);
  CHECK(prod.get(0) == 'Y');
  CHECK(prod.get(1) == 'Y');
  CHECK(prod.phase == 2);  // (XZ)(XZ) = (-iY)(-iY) = -YY
  CHECK(mat_eq(pauli_matrix(prod), matmul(pauli_matrix(a), pauli_matrix(b))));
}

TEST_CASE("multiply matches dense oracle on 1000 random pairs, <=4 qubits") {
  std::mt19937 gen(12345);
  for (int trial = 0; trial < 1000; trial++) {
    size_t n = 1 + gen() % 4;
    auto a = random_pauli(n, gen, false);
    auto b = random_pauli(n, gen, false);
    auto prod = multiply(a, b);
    CHECK(mat_eq(pauli_matrix(prod), matmul(pauli_matrix(a), pauli_matrix(b))));
  }
}

TEST_CASE("multiply is associative on random triples") {
  std::mt19937 gen(99);
  for (int trial = 0; trial < 300; trial++) {
    size_t n = 1 + gen() % 5;
    auto a = random_pauli(n, gen, false);
    auto b = random_pauli(n, gen, false);
    auto c = random_pauli(n, gen, false);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("commutes: basic cases") {
  CHECK_FALSE(commutes(PauliOperator::parse("+1 X"), PauliOperator::parse("+1 Z")));
  CHECK(commutes(PauliOperator::parse("+1 XI"), PauliOperator::parse("+1 IZ")));
  std::mt19937 gen(7);
  for (int t = 0; t < 100; t++) {
    auto a = random_pauli(3, gen);
    CHECK(commutes(a, PauliOperator::identity(3)));
  }
}

TEST_CASE("canonicalize: rank, shuffle invariance, errors") {
  auto XX = PauliOperator::parse("+1 XX");
  auto ZZ = PauliOperator::parse("+1 ZZ");
  CHECK(canonicalize({XX, ZZ}).rank() == 2);
  CHECK(canonicalize({XX, XX}).rank() == 1);
  CHECK_THROWS_AS(canonicalize({PauliOperator::parse("+1 X"), PauliOperator::parse("+1 Z")}),
                  NonCommutingError);
  auto mYY = PauliOperator::parse("-1 YY");
  // XX . ZZ = -YY, so {XX, ZZ, +YY} generates -I
  CHECK_THROWS_AS(canonicalize({XX, ZZ, PauliOperator::parse("+1 YY")}), MinusIdentityError);
  auto g1 = canonicalize({XX, ZZ, mYY});
  CHECK(g1.rank() == 2);

  std::mt19937 gen(4242);
  for (int t = 0; t < 50; t++) {
    // random commuting sets built from products of a fixed base
    std::vector<PauliOperator> base = {
        PauliOperator::parse("+1 XXII"), PauliOperator::parse("+1 ZZII"),
        PauliOperator::parse("+1 IIXX"), PauliOperator::parse("+1 IIZZ")};
    std::vector<PauliOperator> gens;
    for (int k = 0; k < 6; k++) {
      PauliOperator p = PauliOperator::identity(4);
      for (auto& b : base)
        if (gen() % 2) p.mul(b);
      gens.push_back(p);
    }
    auto g = canonicalize(gens);
    std::shuffle(gens.begin(), gens.end(), gen);
    auto h = canonicalize(gens);
    REQUIRE(g.rank() == h.rank());
    for (size_t i = 0; i < g.rank(); i++) CHECK(g.canonical_rows()[i] == h.canonical_rows()[i]);
  }
}

TEST_CASE("contains agrees with exhaustive enumeration (rank <= 12 scaled down)") {
  std::mt19937 gen(31);
  std::vector<PauliOperator> base = {
      PauliOperator::parse("+1 XXI"), PauliOperator::parse("+1 ZZI"),
      PauliOperator::parse("+1 IIX")};
  auto g = canonicalize(base, true, true);
  REQUIRE(g.rank() == 3);
  // enumerate all 8 group elements
  std::vector<PauliOperator> all;
  for (int mask = 0; mask < 8; mask++) {
    PauliOperator p = PauliOperator::identity(3);
    for (int k = 0; k < 3; k++)
      if (mask >> k & 1) p.mul(base[k]);
    all.push_back(p);
  }
  for (auto& p : all) {
    CHECK(g.contains(p));
    auto w = g.witness(p);
    REQUIRE(w.has_value());
    PauliOperator prod = PauliOperator::identity(3);
    for (size_t i : *w) prod.mul(base[i]);
    CHECK(prod == p);
  }
  // membership is exact including phase
  auto member = all[3];
  member.phase = uint8_t((member.phase + 2) & 3);
  CHECK_FALSE(g.contains(member));
  CHECK(g.contains_up_to_phase(member));
  CHECK_FALSE(g.contains(PauliOperator::parse("+1 ZII")));
  CHECK(g.contains(PauliOperator::identity(3)));
  CHECK_FALSE(canonicalize({PauliOperator::parse("+1 XX")}).contains(PauliOperator::parse("+1 ZZ")));
}

TEST_CASE("conjugate: Hadamard, identity, and commutation preservation") {
  CliffordMap had = CliffordMap::identity(1);
  had.x_image[0] = PauliOperator::parse("+1 Z");
  had.z_image[0] = PauliOperator::parse("+1 X");
  CHECK(had.is_valid());
  CHECK(conjugate(PauliOperator::parse("+1 X"), had) == PauliOperator::parse("+1 Z"));
  // H Y H = -Y
  CHECK(conjugate(PauliOperator::parse("+1 Y"), had) == PauliOperator::parse("-1 Y"));

  CliffordMap id = CliffordMap::identity(3);
  std::mt19937 gen(5);
  for (int t = 0; t < 50; t++) {
    auto p = random_pauli(3, gen);
    CHECK(conjugate(p, id) == p);
  }

  // random 2-qubit Clifford built from H/S/CNOT tableaus; check commutation preserved
  CliffordMap cnot = CliffordMap::identity(2);
  cnot.x_image[0] = PauliOperator::parse("+1 XX");
  cnot.z_image[1] = PauliOperator::parse("+1 ZZ");
  CHECK(cnot.is_valid());
  for (int t = 0; t < 200; t++) {
    auto a = random_pauli(2, gen);
    auto b = random_pauli(2, gen);
    CHECK(commutes(a, b) == commutes(conjugate(a, cnot), conjugate(b, cnot)));
    // conjugation is multiplicative
    CHECK(conjugate(multiply(a, b), cnot) == multiply(conjugate(a, cnot), conjugate(b, cnot)));
  }
}

TEST_CASE("conjugate matches dense oracle") {
  // S gate: X -> Y, Z -> Z
  CliffordMap s = CliffordMap::identity(1);
  s.x_image[0] = PauliOperator::parse("+1 Y");
  std::mt19937 gen(17);
  // dense S matrix
  Mat smat = {{1.0, 0.0}, {0.0, cplx(0, 1)}};
  Mat sdag = {{1.0, 0.0}, {0.0, cplx(0, -1)}};
  for (int t = 0; t < 20; t++) {
    auto p = random_pauli(1, gen, false);
    auto img = conjugate(p, s);
    CHECK(mat_eq(pauli_matrix(img), matmul(matmul(smat, pauli_matrix(p)), sdag)));
  }
}

TEST_CASE("stabilizer simulator: GHZ and arbitrary Pauli measurement") {
  // prepare |000>, apply H on 0, CNOT 0->1, 0->2 via CliffordMaps
  StabilizerSimulator sim(3);
  CliffordMap h = CliffordMap::identity(3);
  h.x_image[0] = PauliOperator::single(3, 0, 'Z');
  h.z_image[0] = PauliOperator::single(3, 0, 'X');
  sim.apply(h);
  for (size_t t = 1; t <= 2; t++) {
    CliffordMap cx = CliffordMap::identity(3);
    cx.x_image[0] = multiply(PauliOperator::single(3, 0, 'X'), PauliOperator::single(3, t, 'X'));
    cx.z_image[t] = multiply(PauliOperator::single(3, 0, 'Z'), PauliOperator::single(3, t, 'Z'));
    sim.apply(cx);
  }
  // GHZ: XXX deterministic +1, ZZI deterministic +1, ZII random
  CHECK(sim.expectation(PauliOperator::parse("+1 XXX")) == 1);
  CHECK(sim.expectation(PauliOperator::parse("+1 ZZI")) == 1);
  CHECK(sim.expectation(PauliOperator::parse("+1 ZII")) == 0);
  Rng rng(3);
  auto r = sim.measure(PauliOperator::parse("+1 ZII"), rng);
  CHECK_FALSE(r.deterministic);
  // after measuring Z0, ZZI remains +1 so Z1 must equal Z0
  auto r2 = sim.measure(PauliOperator::parse("+1 IZI"), rng);
  CHECK(r2.deterministic);
  CHECK(r2.outcome == r.outcome);
}

TEST_CASE("centralizer basis has correct dimension and commutes") {
  auto g = canonicalize({PauliOperator::parse("+1 XXI"), PauliOperator::parse("+1 ZZI")});
  auto basis = centralizer_basis(g);
  CHECK(basis.size() == 2 * 3 - 2);
  for (auto& p : basis)
    for (auto& row : g.canonical_rows()) CHECK(commutes(p, row));
}

TEST_CASE("pauli string round trip") {
  std::mt19937 gen(77);
  for (int t = 0; t < 50; t++) {
    auto p = random_pauli(6, gen, false);
    CHECK(PauliOperator::parse(p.str()) == p);
  }
}
