#include "doctest.h"

#include <cmath>

#include "ribbonlab/catalog.hpp"
#include "ribbonlab/numerics.hpp"

using namespace ribbonlab;

namespace {

constexpr double kQ = 1.2;

BlockOperator a1_braid() {
  JimboParams p;
  p.type = 'A';
  p.rank = 1;
  p.q = kQ;
  FaceModel m = jimbo_model(p).model;
  return m.as_operator(PathSpace::enumerate(m.graph_ptr(), 2));
}

// Operator on the edge space of the one-vertex two-edge graph with a chosen
// matrix (the single vertex makes every matrix block-preserving).
BlockOperator loop2_op(const Matrix& m) {
  GraphPtr g = OrientedGraph::create(
      {"v"}, {{"u1", "v", "v"}, {"u2", "v", "v"}});
  return BlockOperator(PathSpace::enumerate(g, 1), m);
}

}  // namespace

TEST_CASE("blockwise inversion inverts and reports singular blocks") {
  BlockOperator w = a1_braid();
  BlockOperator winv = invert(w);
  BlockOperator id = BlockOperator::identity(w.space_ptr());
  CHECK(max_abs((w * winv - id).matrix()) < 1e-14);
  CHECK(max_abs((winv * w - id).matrix()) < 1e-14);

  Matrix sing = Matrix::Zero(2, 2);
  sing(0, 0) = Complex(1.0, 0.0);  // rank one
  try {
    invert(loop2_op(sing));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularBlock);
    CHECK(std::string(e.what()).find("v") != std::string::npos);
  }
}

TEST_CASE("spectral clustering splits the braid operator spectrum") {
  BlockOperator w = a1_braid();
  SpectralData sd = spectral(w);
  REQUIRE(sd.representatives.size() == 2);

  // eigenvalues 1/q (multiplicity 3) and -q (multiplicity 1)
  int i_pos = std::abs(sd.representatives[0] - Complex(1.0 / kQ)) < 1e-9
                  ? 0
                  : 1;
  int i_neg = 1 - i_pos;
  CHECK(std::abs(sd.representatives[i_pos] - Complex(1.0 / kQ)) < 1e-12);
  CHECK(std::abs(sd.representatives[i_neg] - Complex(-kQ)) < 1e-12);
  CHECK(sd.multiplicities[i_pos] == 3);
  CHECK(sd.multiplicities[i_neg] == 1);

  // projectors: idempotent, orthogonal, summing to the identity
  const BlockOperator& P = sd.projectors[i_pos];
  const BlockOperator& Q = sd.projectors[i_neg];
  CHECK(max_abs((P * P - P).matrix()) < 1e-12);
  CHECK(max_abs((P * Q).matrix()) < 1e-12);
  BlockOperator id = BlockOperator::identity(w.space_ptr());
  CHECK(max_abs((P + Q - id).matrix()) < 1e-12);
  CHECK(sd.reconstruction_residual < 1e-12);

  // semisimple + nilpotent recovers the operator; here it is diagonalisable
  CHECK(max_abs((sd.semisimple + sd.nilpotent - w).matrix()) < 1e-12);
  CHECK(max_abs(sd.nilpotent.matrix()) < 1e-10);

  // projectors are polynomials in w, so they commute with it
  CHECK(max_abs((P * w - w * P).matrix()) < 1e-12);
}

TEST_CASE("spectral handles a nilpotent block") {
  Matrix n = Matrix::Zero(2, 2);
  n(0, 1) = Complex(1.0, 0.0);
  SpectralData sd = spectral(loop2_op(n));
  REQUIRE(sd.representatives.size() == 1);
  CHECK(std::abs(sd.representatives[0]) < 1e-12);
  CHECK(sd.multiplicities[0] == 2);
  CHECK(max_abs(sd.semisimple.matrix()) < 1e-10);
  CHECK(max_abs((sd.nilpotent.matrix() - n)) < 1e-12);
}

TEST_CASE("near-coincident clusters refuse to separate") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = Complex(1.0, 0.0);
  m(1, 1) = Complex(1.0 + 5e-7, 0.0);  // distinct at radius 1e-7, too close
  CHECK_THROWS_AS(spectral(loop2_op(m), 1e-7), Error);
  try {
    spectral(loop2_op(m), 1e-7);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ClusterAmbiguity);
  }
  // a generous radius merges them instead
  SpectralData merged = spectral(loop2_op(m), 1e-4);
  CHECK(merged.representatives.size() == 1);
  CHECK(merged.multiplicities[0] == 2);
}

TEST_CASE("operator square root on diagonalisable and defective input") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = Complex(4.0, 0.0);
  d(1, 1) = Complex(9.0, 0.0);
  BlockOperator r = operator_sqrt(loop2_op(d));
  CHECK(std::abs(r.entry(0, 0) - Complex(2.0)) < 1e-12);
  CHECK(std::abs(r.entry(1, 1) - Complex(3.0)) < 1e-12);

  // defective: [[1,1],[0,1]] has square root [[1,1/2],[0,1]]
  Matrix j = Matrix::Identity(2, 2);
  j(0, 1) = Complex(1.0, 0.0);
  BlockOperator rj = operator_sqrt(loop2_op(j));
  CHECK(max_abs(((rj * rj).matrix() - j)) < 1e-12);
  CHECK(std::abs(rj.entry(0, 1) - Complex(0.5)) < 1e-12);

  // square root across a zero eigenvalue is refused
  Matrix n = Matrix::Zero(2, 2);
  n(0, 1) = Complex(1.0, 0.0);
  CHECK_THROWS_AS(operator_sqrt(loop2_op(n)), Error);

  // complex eigenvalues use the principal branch, squaring back exactly
  Matrix c = Matrix::Zero(2, 2);
  c(0, 0) = Complex(0.0, 1.0);
  c(1, 1) = Complex(-2.0, 0.5);
  BlockOperator rc = operator_sqrt(loop2_op(c));
  CHECK(max_abs(((rc * rc).matrix() - c)) < 1e-12);
}

TEST_CASE("commutant dimensions of the rank-one braid operator") {
  BlockOperator w = a1_braid();
  // eigenvalue multiplicities 3 and 1: commutant dimension 3^2 + 1^2
  CHECK(commutant_dimension(w) == 10);
  // the identity commutes with everything block-preserving: 4^2
  CHECK(commutant_dimension(BlockOperator::identity(w.space_ptr())) == 16);

  auto basis = commutant_basis(w);
  REQUIRE(static_cast<int>(basis.size()) == 10);
  for (const auto& x : basis) {
    CHECK(max_abs((x * w - w * x).matrix()) < 1e-8);
    CHECK(x.offblock_magnitude() < 1e-12);
  }

  // two distinct eigenvalues: the operator generates a 2-dimensional algebra
  CHECK(double_commutant_dimension(w) == 2);
}

TEST_CASE("double commutant sizes match the distinct-eigenvalue count") {
  JimboParams p;
  p.type = 'C';
  p.rank = 2;
  p.q = kQ;
  FaceModel c2 = jimbo_model(p).model;
  BlockOperator w = c2.as_operator(PathSpace::enumerate(c2.graph_ptr(), 2));
  CHECK(double_commutant_dimension(w) == 3);
}

TEST_CASE("joint commutant dimension over several generators") {
  GraphPtr g = OrientedGraph::create(
      {"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}, {"f", "b", "a"}});
  SpacePtr s1 = PathSpace::enumerate(g, 1);
  // block-preserving matrices: 2x2 block on (a,b) plus 1x1 on (b,a)
  CHECK(joint_commutant_dimension(*s1, {Matrix::Identity(3, 3)}) == 5);

  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  d(2, 2) = 3.0;
  CHECK(joint_commutant_dimension(*s1, {d}) == 3);

  // a generator that swaps the two blocks ties them together even though it
  // is not block-preserving itself
  Matrix perm = Matrix::Zero(3, 3);
  perm(0, 2) = 1.0;
  perm(2, 0) = 1.0;
  perm(1, 1) = 1.0;
  CHECK(joint_commutant_dimension(*s1, {perm}) == 2);

  // diagonal + block swap still leaves diag(a, b, a)
  CHECK(joint_commutant_dimension(*s1, {d, perm}) == 2);

  // adding the edge swap within the first block forces scalars
  Matrix sym = Matrix::Zero(3, 3);
  sym(0, 1) = 1.0;
  sym(1, 0) = 1.0;
  sym(2, 2) = 1.0;
  CHECK(joint_commutant_dimension(*s1, {d, perm, sym}) == 1);
}
