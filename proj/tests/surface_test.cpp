#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cobord/surface/cobordism.hpp"
#include "cobord/surface/contexts.hpp"
#include "cobord/surface/enumerate.hpp"

using namespace cobord::surface;

namespace {

const Side In = Side::In;
const Side Out = Side::Out;

Cobordism closed(std::vector<Genus> g) { return Cobordism(0, 0, {}, std::move(g)); }

Cobordism swap2() {
  const std::array<std::size_t, 2> p{1, 0};
  return permutation(p);
}

// Euler characteristic oracle: sum of 2 - 2g - b over all components and closed pieces.
long euler_oracle(const Cobordism& k) {
  long chi = 0;
  for (const auto& c : k.components()) chi += 2 - 2 * static_cast<long>(c.genus) - static_cast<long>(c.in.size() + c.out.size());
  for (auto g : k.closed_genera()) chi += 2 - 2 * static_cast<long>(g);
  return chi;
}

std::vector<Cobordism> small_family() {
  return enumerate({.max_circles = 2, .max_genus = 1, .max_closed = 1, .max_closed_genus = 1});
}

}  // namespace

TEST_CASE("e_block examples") {
  const auto pants = e_block(1, 0, 2);
  CHECK(pants.n_in() == 2);
  CHECK(pants.n_out() == 1);
  REQUIRE(pants.components().size() == 1);
  CHECK(pants.components()[0] == Component{{0, 1}, {0}, 0});
  CHECK(e_block(0, 0, 0) == closed({0}));
  CHECK(e_block(0, 3, 0) == closed({3}));
  CHECK(e_block(0, 3, 0).components().empty());
}

TEST_CASE("identity and permutation examples") {
  CHECK(identity(0) == Cobordism(0, 0, {}));
  const auto s = swap2();
  REQUIRE(s.components().size() == 2);
  CHECK(s.components()[0] == Component{{0}, {1}, 0});
  CHECK(s.components()[1] == Component{{1}, {0}, 0});

  std::array<std::size_t, 4> p{2, 0, 3, 1}, inv{};
  for (std::size_t i = 0; i < 4; ++i) inv[p[i]] = i;
  CHECK(compose(permutation(p), permutation(inv)) == identity(4));
  const std::array<std::size_t, 2> bad{1, 1};
  CHECK_THROWS(permutation(bad));
}

TEST_CASE("constructor validates and canonicalizes") {
  const Cobordism a(2, 1, {{{1}, {0}, 0}, {{0}, {}, 1}}, {0, 2});
  const Cobordism b(2, 1, {{{0}, {}, 1}, {{1}, {0}, 0}}, {2, 0});
  CHECK(a == b);
  CHECK(a.closed_genera() == std::vector<Genus>{2, 0});
  CHECK_THROWS_AS(Cobordism(1, 1, {{{0}, {}, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Cobordism(1, 0, {{{0}, {}, 0}, {{0}, {}, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Cobordism(1, 0, {{{}, {}, 0}, {{0}, {}, 0}}), std::invalid_argument);
}

TEST_CASE("compose examples") {
  CHECK(compose(e_block(2, 0, 1), e_block(1, 0, 2)) == e_block(1, 1, 1));
  CHECK(compose(e_block(1, 0, 0), e_block(0, 0, 1)) == closed({0}));
  for (const auto& k : small_family()) {
    CHECK(compose(identity(k.n_in()), k) == k);
    CHECK(compose(k, identity(k.n_out())) == k);
  }
  CHECK_THROWS_AS(compose(e_block(1, 0, 2), e_block(1, 0, 2)), std::invalid_argument);
}

TEST_CASE("Frobenius normal form identity") {
  const auto left = compose(tensor(identity(1), e_block(2, 0, 1)), tensor(e_block(1, 0, 2), identity(1)));
  const auto middle = compose(e_block(1, 0, 2), e_block(2, 0, 1));
  const auto right = compose(tensor(e_block(2, 0, 1), identity(1)), tensor(identity(1), e_block(1, 0, 2)));
  CHECK(left == e_block(2, 0, 2));
  CHECK(middle == e_block(2, 0, 2));
  CHECK(right == e_block(2, 0, 2));
}

TEST_CASE("gluing twice between the same components adds genus") {
  // delta then mu on a 2->2 block closes a loop: E(2,0,2) ; E(2,0,2) = E(2,1,2)
  CHECK(compose(e_block(2, 0, 2), e_block(2, 0, 2)) == e_block(2, 1, 2));
  CHECK(compose(e_block(2, 1, 1), e_block(0, 2, 2)) == e_block(0, 4, 1));
  CHECK(compose(e_block(2, 1, 0), e_block(0, 2, 2)) == closed({4}));
  CHECK(compose(e_block(2, 0, 0), e_block(0, 0, 2)) == closed({1}));
}

TEST_CASE("tensor examples") {
  for (const auto& k : small_family()) {
    CHECK(tensor(k, identity(0)) == k);
    CHECK(tensor(identity(0), k) == k);
  }
  CHECK(tensor(e_block(0, 2, 0), e_block(0, 1, 0)) == closed({2, 1}));
  CHECK(tensor(e_block(1, 0, 1), e_block(1, 0, 1)) == identity(2));
  const auto t = tensor(e_block(1, 0, 2), e_block(0, 1, 1));
  CHECK(t.n_in() == 3);
  CHECK(t.n_out() == 1);
  CHECK(t.component_of({2, In}) != t.component_of({0, In}));
  CHECK(genus_at(t, {2, In}) == 1);
}

TEST_CASE("rho examples") {
  // The 3 -> 4 example: in 0, in 2, out 0, out 2 on one component; in 1, out 1, out 3 on the other.
  const Cobordism k(3, 4, {{{0, 2}, {0, 2}, 1}, {{1}, {1, 3}, 0}});
  const auto classes = rho(k);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<BoundaryLabel>{{0, In}, {2, In}, {0, Out}, {2, Out}});
  CHECK(classes[1] == std::vector<BoundaryLabel>{{1, In}, {1, Out}, {3, Out}});

  const auto id = rho(identity(2));
  CHECK(id == std::vector<std::vector<BoundaryLabel>>{{{0, In}, {0, Out}}, {{1, In}, {1, Out}}});
  CHECK(rho(e_block(0, 4, 0)).empty());
}

TEST_CASE("fill_hole examples") {
  const auto capped = fill_hole(fill_hole(identity(1), {0, In}), {0, Out});
  CHECK(capped == closed({0}));
  CHECK(fill_hole(e_block(1, 1, 1), {0, In}) == e_block(1, 1, 0));
  CHECK(fill_hole(e_block(0, 0, 2), {1, In}) == e_block(0, 0, 1));
  CHECK(fill_hole(identity(3), {1, Out}) ==
        compose(permutation(std::array<std::size_t, 3>{0, 2, 1}),
                tensor(identity(2), e_block(0, 0, 1))));
  CHECK_THROWS(fill_hole(identity(1), {1, In}));
}

TEST_CASE("stretch examples") {
  for (Genus p = 0; p <= 3; ++p) {
    CHECK(stretch1(e_block(0, p, 1)) == e_block(1, p, 1));
    CHECK(stretch1_dual(e_block(1, p, 0)) == e_block(1, p, 1));
  }
  CHECK(stretch1(e_block(0, 0, 1)) == identity(1));
  CHECK(stretch2(e_block(0, 0, 2)) == identity(1));
  CHECK(stretch2_dual(e_block(2, 0, 0)) == identity(1));
  CHECK(stretch2(e_block(0, 1, 2)) == e_block(1, 1, 1));

  const auto split = stretch2(tensor(e_block(0, 0, 1), e_block(0, 0, 1)));
  CHECK(split == Cobordism(1, 1, {{{0}, {}, 0}, {{}, {0}, 0}}));
  CHECK_THROWS(stretch1(identity(1)));
  CHECK_THROWS(stretch2(e_block(0, 0, 1)));
}

TEST_CASE("closure examples") {
  for (Genus a = 0; a <= 3; ++a) {
    CHECK(closure(identity(1), a) == closed({2 * a}));
    for (Genus p = 0; p <= 2; ++p) CHECK(closure(e_block(1, p, 1), a) == closed({p + 2 * a}));
    const auto split = stretch2(tensor(e_block(0, 0, 1), e_block(0, 0, 1)));
    CHECK(closure(split, a) == closed({a, a}));
  }
  CHECK_THROWS(closure(identity(2), 1));
}

TEST_CASE("compose is associative and preserves Euler characteristic") {
  const auto family = small_family();
  std::size_t triples = 0;
  for (const auto& k : family) {
    CHECK(k.euler_characteristic() == euler_oracle(k));
    for (const auto& l : family) {
      if (l.n_in() != k.n_out()) continue;
      const auto kl = compose(k, l);
      CHECK(kl.euler_characteristic() == k.euler_characteristic() + l.euler_characteristic());
      CHECK(kl.euler_characteristic() == euler_oracle(kl));
      for (const auto& m : family) {
        if (m.n_in() != l.n_out() || m.closed_genera().size() + k.closed_genera().size() > 0) continue;
        if ((triples++ % 7) != 0) continue;
        CHECK(compose(kl, m) == compose(k, compose(l, m)));
      }
    }
  }
  CHECK(triples > 0);
}

TEST_CASE("tensor associativity and interchange law") {
  const auto family = enumerate({.max_circles = 1, .max_genus = 1, .max_closed = 1, .max_closed_genus = 1});
  for (const auto& a : family) {
    for (const auto& b : family) {
      for (const auto& c : family) CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    }
  }
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& k = family[pick(rng)];
    const auto& kk = family[pick(rng)];
    const auto& l = family[pick(rng)];
    const auto& ll = family[pick(rng)];
    if (k.n_out() != kk.n_in() || l.n_out() != ll.n_in()) continue;
    CHECK(compose(tensor(k, l), tensor(kk, ll)) == tensor(compose(k, kk), compose(l, ll)));
  }
}

TEST_CASE("permutation composition matches permutation product") {
  std::array<std::size_t, 4> p{0, 1, 2, 3}, q{0, 1, 2, 3};
  std::mt19937 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    std::shuffle(p.begin(), p.end(), rng);
    std::shuffle(q.begin(), q.end(), rng);
    std::array<std::size_t, 4> pq{};
    for (std::size_t i = 0; i < 4; ++i) pq[i] = p[q[i]];
    CHECK(compose(permutation(q), permutation(p)) == permutation(pq));
  }
}

TEST_CASE("enumeration counts and order") {
  // 1 -> 1: one component (3 genera) or a cap and a cup (9 genus pairs).
  CHECK(enumerate_open(1, 1, 2).size() == 12);
  // 2 -> 0 with genus <= 1: one component (2 genera) or two components (4 genus pairs).
  CHECK(enumerate_open(2, 0, 1).size() == 6);
  CHECK(enumerate_multisets(2, 1) ==
        std::vector<std::vector<Genus>>{{}, {0}, {0, 0}, {1}, {1, 0}, {1, 1}});
  const auto all = enumerate({});
  CHECK(all.size() == 2330);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  const auto closed_only = enumerate({.max_circles = 0, .max_genus = 0, .max_closed = 1, .max_closed_genus = 3});
  CHECK(closed_only.size() == 5);
}

TEST_CASE("cobordism JSON round trip") {
  const Cobordism k(2, 1, {{{0}, {}, 2}, {{1}, {0}, 0}}, {3});
  const auto j = to_json(k);
  CHECK(j.dump() == R"({"closed":[3],"components":[{"genus":2,"in":[0],"out":[]},{"genus":0,"in":[1],"out":[0]}],"in":2,"out":1})");
  CHECK(cobordism_from_json(j) == k);
  for (const auto& c : small_family()) CHECK(cobordism_from_json(to_json(c)) == c);
}
