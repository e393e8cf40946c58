#include <doctest.h>

#include <array>
#include <cstdint>
#include <stdexcept>

#include "cobord/faithfulness/faithfulness.hpp"
#include "cobord/frobenius/algebra.hpp"
#include "cobord/surface/enumerate.hpp"
#include "cobord/tqft/evaluator.hpp"

using namespace cobord;
using namespace cobord::faithfulness;
using surface::e_block;

namespace {

// Least prime factor of a^n + b^n dividing no a^k + b^k for k < n, by plain uint64 division.
std::uint64_t brute_witness(std::uint64_t a, std::uint64_t b, unsigned n) {
  auto sum = [&](unsigned k) {
    std::uint64_t x = 1, y = 1;
    for (unsigned i = 0; i < k; ++i) x *= a, y *= b;
    return x + y;
  };
  std::uint64_t v = sum(n);
  for (std::uint64_t p = 2; p <= v; ++p) {
    if (v % p != 0) continue;
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) prime &= p % d != 0;
    if (!prime) continue;
    bool primitive = true;
    for (unsigned k = 1; k < n; ++k) primitive &= sum(k) % p != 0;
    if (primitive) return p;
  }
  return 0;
}

const tqft::Evaluator& big_ev() {
  static const tqft::Evaluator ev(frobenius::qz5_zqs3());
  return ev;
}

surface::Cobordism closed(std::vector<surface::Genus> g) { return surface::Cobordism(0, 0, {}, std::move(g)); }

}  // namespace

TEST_CASE("Zsigmondy examples") {
  CHECK(zsigmondy_witness(2, 1, 3).is_exception());
  CHECK(*zsigmondy_witness(2, 1, 1).prime == 3);
  CHECK(*zsigmondy_witness(2, 1, 5).prime == 11);
  CHECK_THROWS_AS(zsigmondy_witness(1, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(zsigmondy_witness(4, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(zsigmondy_witness(2, 1, 0), std::invalid_argument);
}

TEST_CASE("Zsigmondy witnesses agree with brute force") {
  for (unsigned n = 1; n <= 25; ++n) {
    if (n == 3) continue;
    const auto w = zsigmondy_witness(2, 1, n);
    REQUIRE_FALSE(w.is_exception());
    CHECK(w.prime->get_ui() == brute_witness(2, 1, n));
  }
  for (unsigned n = 1; n <= 12; ++n) CHECK(zsigmondy_witness(3, 2, n).prime->get_ui() == brute_witness(3, 2, n));
}

TEST_CASE("Zsigmondy at the exponents used for genera") {
  for (unsigned k = 3; k <= 12; ++k) {
    const auto w = zsigmondy_witness(2, 1, 2 * k - 1);
    CHECK_FALSE(w.is_exception());
  }
}

TEST_CASE("multiset invariant") {
  CHECK(multiset_invariant(GenusMultiset{}) == Rational(1));
  CHECK(multiset_invariant(GenusMultiset{{1}}) == Rational(15));
  CHECK(multiset_invariant(GenusMultiset{{2, 0}}) == Rational(675, 2));
  CHECK(multiset_invariant(GenusMultiset{{0, 2}}) == Rational(675, 2));
  CHECK(GenusMultiset{{0, 2}}.genera() == std::vector<surface::Genus>{2, 0});
}

TEST_CASE("multiset invariant matches closed evaluation") {
  for (const auto& m : surface::enumerate_multisets(2, 3)) {
    CHECK(big_ev().evaluate(closed(m)).matrix.as_scalar() == multiset_invariant(GenusMultiset{m}));
  }
}

TEST_CASE("multiset invariant is multiplicative and keeps the 5-adic and 2-adic books") {
  const auto all = surface::enumerate_multisets(3, 5);
  for (const auto& s : all) {
    const GenusMultiset ms{s};
    const auto v = multiset_invariant(ms);
    CHECK(exact::valuation(v.numerator(), 5) == s.size());
    unsigned long expected_two = 0;
    for (auto k : s)
      if (k > 0) expected_two += k - 1;
    CHECK(exact::valuation(v.denominator(), 2) == expected_two);
    CHECK(exact::valuation(v.numerator(), 2) == 0);
  }
  for (std::size_t i = 0; i < all.size(); i += 5) {
    for (std::size_t j = 0; j < all.size(); j += 3) {
      const GenusMultiset s{all[i]}, t{all[j]};
      CHECK(multiset_invariant(s.merged(t)) == multiset_invariant(s) * multiset_invariant(t));
    }
  }
}

TEST_CASE("multiset injectivity reports") {
  const auto small = lemma4_injectivity(1, 3);
  CHECK(small.injective);
  CHECK(small.multisets == 5);
  const std::array<Rational, 5> values{Rational(1), Rational(5), Rational(15), Rational(135, 2), Rational(1485, 4)};
  CHECK(multiset_invariant(GenusMultiset{}) == values[0]);
  for (surface::Genus k = 0; k <= 3; ++k) CHECK(multiset_invariant(GenusMultiset{{k}}) == values[k + 1]);
  const auto zero = lemma4_injectivity(0, 5);
  CHECK(zero.injective);
  CHECK(zero.multisets == 1);
  const auto mid = lemma4_injectivity(3, 4);
  CHECK(mid.injective);
  CHECK(mid.multisets == 56);
  CHECK_FALSE(mid.collision.has_value());
}

TEST_CASE("separating closure examples") {
  const auto s1 = separating_closure(e_block(1, 1, 1), e_block(1, 0, 1));
  CHECK(s1.which == SeparationCase::GenusDiffers);
  CHECK(s1.closure_genus == 2);
  CHECK(s1.left == GenusMultiset{{5}});
  CHECK(s1.right == GenusMultiset{{4}});

  const auto s2 = separating_closure(surface::identity(2), surface::permutation(std::array<std::size_t, 2>{1, 0}));
  CHECK(s2.which == SeparationCase::PartitionDiffers);
  CHECK(s2.closure_genus == 1);
  CHECK(s2.left != s2.right);
  CHECK(multiset_invariant(s2.left) != multiset_invariant(s2.right));
  CHECK(((s2.left == GenusMultiset{{2, 0}} && s2.right == GenusMultiset{{1, 1}}) ||
         (s2.left == GenusMultiset{{1, 1}} && s2.right == GenusMultiset{{2, 0}})));

  const auto s3 = separating_closure(closed({0, 0}), closed({1}));
  CHECK(s3.which == SeparationCase::ClosedPiecesDiffer);
  CHECK(s3.left == GenusMultiset{{0, 0}});
  CHECK(s3.right == GenusMultiset{{1}});

  CHECK_THROWS_AS(separating_closure(e_block(1, 0, 1), e_block(1, 0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(separating_closure(e_block(1, 0, 1), e_block(2, 0, 1)), std::invalid_argument);
}

TEST_CASE("separating closure separates every pair in a small enumeration") {
  const auto family = surface::enumerate({.max_circles = 2, .max_genus = 1, .max_closed = 1, .max_closed_genus = 1});
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const auto& k = family[i];
      const auto& l = family[j];
      if (k.n_in() != l.n_in() || k.n_out() != l.n_out()) continue;
      const auto s = separating_closure(k, l);
      CHECK(multiset_invariant(s.left) != multiset_invariant(s.right));
      ++pairs;
    }
  }
  CHECK(pairs > 1000);
}

TEST_CASE("scan over closed surfaces only") {
  const auto cert = faithfulness_scan(big_ev(), {.max_circles = 0, .max_genus = 0, .max_closed = 1, .max_closed_genus = 3}, "A");
  CHECK(cert.enumerated == 5);
  CHECK(cert.pairs_checked == 10);
  CHECK(cert.distinct());
  CHECK(to_json(cert)["verdict"] == "distinct");
}

TEST_CASE("small scan for A and for QZ5") {
  const surface::EnumerationBounds bounds{.max_circles = 1, .max_genus = 2, .max_closed = 1, .max_closed_genus = 2};
  const auto cert = faithfulness_scan(big_ev(), bounds, "A");
  CHECK(cert.distinct());
  CHECK(cert.pairs_checked == cert.enumerated * (cert.enumerated - 1) / 2);

  const tqft::Evaluator qz5(frobenius::qz5());
  const auto control = faithfulness_scan(qz5, bounds, "qz5");
  CHECK_FALSE(control.distinct());
  CHECK(control.separation_failures == 0);
  CHECK(control.reports_collision(e_block(1, 1, 1), e_block(1, 0, 1)));
  CHECK(control.reports_collision(e_block(1, 0, 1), e_block(1, 2, 1)));
  CHECK_FALSE(control.reports_collision(e_block(1, 0, 1), e_block(1, 0, 1)));
  CHECK_FALSE(cert.reports_collision(e_block(1, 1, 1), e_block(1, 0, 1)));
  CHECK(control.colliding.size() == control.matrix_collisions);
  const auto j = to_json(control);
  CHECK(j["verdict"] == "collision");
  CHECK(j.contains("collision"));
}

TEST_CASE("scan refuses bounds beyond three circles") {
  CHECK_THROWS(faithfulness_scan(big_ev(), {.max_circles = 4, .max_genus = 0, .max_closed = 0, .max_closed_genus = 0}, "A"));
}
