#include <doctest.h>

#include <array>

#include "cobord/exact/matrix.hpp"
#include "cobord/frobenius/algebra.hpp"
#include "cobord/surface/contexts.hpp"
#include "cobord/surface/enumerate.hpp"
#include "cobord/tqft/evaluator.hpp"
#include "test_support.hpp"

using namespace cobord;
using namespace cobord::exact;
using namespace cobord::tqft;
using surface::e_block;

namespace {

const Evaluator& zqs3_ev() {
  static const Evaluator ev(frobenius::zqs3());
  return ev;
}
const Evaluator& qz5_ev() {
  static const Evaluator ev(frobenius::qz5());
  return ev;
}
const Evaluator& big_ev() {
  static const Evaluator ev(frobenius::qz5_zqs3());
  return ev;
}

Matrix handle1() { return Matrix::from_rows({{3, 0, 3}, {0, 6, 0}, {Rational(3, 2), 0, Rational(9, 2)}}); }

// Routing of factors: the evaluation of a tensor is kron of the parts up to the canonical
// re-indexing, which is the identity here because L's circles follow K's.
Matrix tensor_oracle(const Evaluator& ev, const surface::Cobordism& k, const surface::Cobordism& l) {
  return kron(ev.evaluate(k).matrix, ev.evaluate(l).matrix);
}

}  // namespace

TEST_CASE("iterated multiplication and comultiplication") {
  const auto a = frobenius::qz5();
  CHECK(iterated_mul(a, 0) == a.unit);
  CHECK(iterated_mul(a, 1) == Matrix::identity(5));
  CHECK(iterated_mul(a, 2) == a.mul);
  const auto id = Matrix::identity(5);
  CHECK(iterated_mul(a, 3) == mat_mul(a.mul, kron(id, a.mul)));
  CHECK(iterated_mul(a, 3) == mat_mul(a.mul, kron(a.mul, id)));
  CHECK(iterated_comul(a, 0) == a.counit);
  CHECK(iterated_comul(a, 2) == a.comul);
  CHECK(iterated_comul(a, 3) == mat_mul(kron(id, a.comul), a.comul));
}

TEST_CASE("evaluate examples") {
  CHECK(zqs3_ev().evaluate(e_block(1, 1, 1)).matrix == handle1());
  for (surface::Genus k = 0; k <= 8; ++k) CHECK(qz5_ev().evaluate(e_block(0, k, 0)).matrix == Matrix::scalar(5));
  for (std::size_t n = 0; n <= 2; ++n) {
    CHECK(big_ev().evaluate(surface::identity(n)).matrix == Matrix::identity(n == 0 ? 1 : n == 1 ? 15 : 225));
  }
  CHECK(big_ev().evaluate(e_block(0, 2, 0)).matrix == Matrix::scalar(Rational(135, 2)));
  CHECK(big_ev().evaluate(e_block(0, 3, 0)).matrix == Matrix::scalar(Rational(1485, 4)));
  const auto e = big_ev().evaluate(e_block(2, 0, 1));
  CHECK(e.n_in == 1);
  CHECK(e.n_out == 2);
  CHECK(e.matrix.rows() == 225);
  CHECK(e.matrix.cols() == 15);
}

TEST_CASE("generators map to the structure maps") {
  const auto a = frobenius::zqs3();
  CHECK(zqs3_ev().evaluate(e_block(1, 0, 2)).matrix == a.mul);
  CHECK(zqs3_ev().evaluate(e_block(1, 0, 0)).matrix == a.unit);
  CHECK(zqs3_ev().evaluate(e_block(2, 0, 1)).matrix == a.comul);
  CHECK(zqs3_ev().evaluate(e_block(0, 0, 1)).matrix == a.counit);
  CHECK(zqs3_ev().evaluate(surface::permutation(std::array<std::size_t, 2>{1, 0})).matrix == frobenius::swap_matrix(3));
}

TEST_CASE("handle powers of Z(QS3)") {
  CHECK_THROWS(zqs3_handle_power(0));
  CHECK(zqs3_handle_power(1) == handle1());
  const auto h2 = testing::dense_product(handle1(), handle1());
  CHECK(zqs3_handle_power(2) == h2);
  CHECK(zqs3_handle_power(2) ==
        Matrix::from_rows({{9, 0, 15}, {0, 24, 0}, {Rational(15, 2), 0, Rational(33, 2)}}).scaled(Rational(3, 2)));
  CHECK(zqs3_handle_power(3) == testing::dense_product(h2, handle1()));
  Matrix oracle = handle1();
  for (surface::Genus k = 1; k <= 8; ++k) {
    CHECK(zqs3_ev().evaluate(e_block(1, k, 1)).matrix == zqs3_handle_power(k));
    CHECK(zqs3_handle_power(k) == oracle);
    oracle = testing::dense_product(oracle, handle1());
  }
}

TEST_CASE("QZ5 does not see genus") {
  for (surface::Genus k = 0; k <= 8; ++k) {
    CHECK(qz5_ev().evaluate(e_block(1, k, 1)).matrix == qz5_ev().evaluate(e_block(1, 0, 1)).matrix);
  }
}

TEST_CASE("closed invariants") {
  CHECK(closed_invariant(AlgebraTag::ZQS3, 1) == Rational(3));
  CHECK(closed_invariant(AlgebraTag::ZQS3, 0) == Rational(1));
  CHECK(closed_invariant(AlgebraTag::QZ5, 4) == Rational(5));
  CHECK(closed_invariant(AlgebraTag::A, 0) == Rational(5));
  CHECK(closed_invariant(AlgebraTag::A, 1) == Rational(15));
  CHECK(closed_invariant(AlgebraTag::A, 3) == Rational(1485, 4));
  for (surface::Genus k = 0; k <= 8; ++k) {
    CHECK(big_ev().evaluate(e_block(0, k, 0)).matrix.as_scalar() == closed_invariant(AlgebraTag::A, k));
    CHECK(zqs3_ev().closed_scalar(k) == closed_invariant(AlgebraTag::ZQS3, k));
    CHECK(qz5_ev().closed_scalar(k) == closed_invariant(AlgebraTag::QZ5, k));
  }
}

TEST_CASE("closed pieces multiply") {
  for (surface::Genus g = 0; g <= 3; ++g) {
    for (surface::Genus h = 0; h <= 3; ++h) {
      const auto both = surface::tensor(e_block(0, g, 0), e_block(0, h, 0));
      CHECK(big_ev().evaluate(both).matrix.as_scalar() ==
            closed_invariant(AlgebraTag::A, g) * closed_invariant(AlgebraTag::A, h));
    }
  }
}

TEST_CASE("functoriality over a small enumeration") {
  const auto family = surface::enumerate({.max_circles = 2, .max_genus = 1, .max_closed = 1, .max_closed_genus = 1});
  const auto& ev = zqs3_ev();
  std::size_t composed = 0, tensored = 0;
  for (const auto& k : family) {
    for (const auto& l : family) {
      if (k.n_out() == l.n_in()) {
        CHECK(ev.evaluate(surface::compose(k, l)).matrix == mat_mul(ev.evaluate(l).matrix, ev.evaluate(k).matrix));
        ++composed;
      }
      if (k.n_in() + l.n_in() <= 2 && k.n_out() + l.n_out() <= 2) {
        CHECK(ev.evaluate(surface::tensor(k, l)).matrix == tensor_oracle(ev, k, l));
        ++tensored;
      }
    }
  }
  CHECK(composed > 0);
  CHECK(tensored > 0);
}

TEST_CASE("contexts act at matrix level") {
  const auto& ev = big_ev();
  const auto a = frobenius::qz5_zqs3();
  const auto id = Matrix::identity(15);
  for (surface::Genus p = 0; p <= 2; ++p) {
    // stretching 1
    const auto cap = e_block(0, p, 1);
    CHECK(ev.evaluate(surface::stretch1(cap)).matrix == mat_mul(kron(ev.evaluate(cap).matrix, id), a.comul));
    const auto cup = e_block(1, p, 0);
    CHECK(ev.evaluate(surface::stretch1_dual(cup)).matrix == mat_mul(a.mul, kron(ev.evaluate(cup).matrix, id)));
    // stretching 2
    const auto two = e_block(0, p, 2);
    CHECK(ev.evaluate(surface::stretch2(two)).matrix ==
          mat_mul(kron(ev.evaluate(two).matrix, id), kron(id, ev.evaluate(e_block(2, 0, 0)).matrix)));
    // filling holes and closure
    const auto k = e_block(1, p, 1);
    CHECK(ev.evaluate(surface::fill_hole(k, {0, surface::Side::In})).matrix == mat_mul(ev.evaluate(k).matrix, a.unit));
    CHECK(ev.evaluate(surface::closure(k, 1)).matrix ==
          mat_mul(ev.evaluate(e_block(0, 1, 1)).matrix, mat_mul(ev.evaluate(k).matrix, ev.evaluate(e_block(1, 1, 0)).matrix)));
  }
}

TEST_CASE("evaluator refuses algebras that fail the axioms") {
  auto a = frobenius::zqs3();
  a.counit = Matrix(1, 3);
  CHECK_THROWS_AS(Evaluator{a}, AxiomError);
  try {
    Evaluator ev(a);
  } catch (const AxiomError& e) {
    CHECK_FALSE(e.report().all_passed());
  }
}

TEST_CASE("evaluation JSON header") {
  const auto j = to_json(zqs3_ev().evaluate(e_block(1, 1, 1)));
  CHECK(j["in"] == 1);
  CHECK(j["out"] == 1);
  CHECK(j["dim"] == 3);
  CHECK(matrix_from_json(j["matrix"]) == handle1());
}
