#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "cobord/exact/rational.hpp"
#include "cobord/surface/cobordism.hpp"
#include "cobord/surface/enumerate.hpp"
#include "cobord/tqft/evaluator.hpp"

namespace cobord::faithfulness {

using exact::Rational;
using surface::Cobordism;
using surface::Genus;

/// Multiset of closed-surface genera, held in descending order.
class GenusMultiset {
 public:
  GenusMultiset() = default;
  explicit GenusMultiset(std::vector<Genus> genera);

  const std::vector<Genus>& genera() const { return genera_; }
  std::size_t size() const { return genera_.size(); }
  GenusMultiset merged(const GenusMultiset& other) const;

  friend auto operator<=>(const GenusMultiset&, const GenusMultiset&) = default;
  friend bool operator==(const GenusMultiset&, const GenusMultiset&) = default;

 private:
  std::vector<Genus> genera_;
};

nlohmann::json to_json(const GenusMultiset& m);

// --- Zsigmondy primitive divisors for a^n + b^n ---

struct ZsigmondyWitness {
  std::optional<mpz_class> prime;  // empty only for the exceptional triple (n, a, b) = (3, 2, 1)
  bool is_exception() const { return !prime.has_value(); }
};

/// Least prime dividing a^n + b^n and no a^k + b^k with 1 <= k < n, by trial division.
/// Requires a > b >= 1, gcd(a, b) = 1 and n >= 1.
ZsigmondyWitness zsigmondy_witness(unsigned long a, unsigned long b, unsigned long n);

/// Product of the A-invariants 5 (3/2)^(k-1) (2^(2k-1)+1) over the multiset.
Rational multiset_invariant(const GenusMultiset& ks);

struct Lemma4Report {
  std::size_t max_size = 0;
  Genus max_genus = 0;
  std::size_t multisets = 0;
  bool injective = true;
  std::optional<std::pair<GenusMultiset, GenusMultiset>> collision;
};

/// Exhaustively checks that multiset_invariant separates all multisets within the bounds.
Lemma4Report lemma4_injectivity(std::size_t max_size, Genus max_genus);

// --- Reduction of a distinct pair to distinct closed surfaces ---

enum class SeparationCase {
  ClosedPiecesDiffer,    // same partition and genera: cap every circle
  GenusDiffers,          // same partition: cap all but one circle, stretch, close
  PartitionDiffers,      // cap all but a separating pair, stretch if needed, close
};

std::string to_string(SeparationCase c);

struct Separation {
  SeparationCase which = SeparationCase::ClosedPiecesDiffer;
  Genus closure_genus = 0;  // the parameter a of the closing context
  GenusMultiset left;
  GenusMultiset right;
};

/// Applies one and the same context to K and L that turns both into closed surfaces with
/// different genus multisets. Throws std::invalid_argument if K == L or the arities differ.
Separation separating_closure(const Cobordism& k, const Cobordism& l);

// --- Exhaustive faithfulness scan ---

struct Collision {
  Cobordism left;
  Cobordism right;
};

struct ScanCertificate {
  surface::EnumerationBounds bounds;
  std::string algebra;
  std::size_t enumerated = 0;
  std::size_t pairs_checked = 0;      // all unordered pairs; mixed-arity pairs differ by shape
  std::size_t same_arity_pairs = 0;
  std::size_t matrix_collisions = 0;  // equal-arity pairs with equal images
  std::size_t separation_failures = 0;
  std::optional<Collision> first_collision;
  std::vector<Collision> first_collision_per_arity;
  std::vector<Cobordism> objects;                              // the enumeration, in scan order
  std::vector<std::pair<std::size_t, std::size_t>> colliding;  // index pairs with equal images

  bool distinct() const { return matrix_collisions == 0 && separation_failures == 0; }
  /// Whether the scan found equal images for this particular pair.
  bool reports_collision(const Cobordism& k, const Cobordism& l) const;
};

/// Evaluates every cobordism within the bounds and checks all pairs for distinct images and,
/// independently, for distinct separating-closure invariants. Requires max_circles <= 3.
ScanCertificate faithfulness_scan(const tqft::Evaluator& evaluator, const surface::EnumerationBounds& bounds,
                                  std::string algebra_name, int workers = 0);

nlohmann::json to_json(const ScanCertificate& c);

}  // namespace cobord::faithfulness
