#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

#include "cobord/frobenius/algebra.hpp"
#include "cobord/surface/cobordism.hpp"

namespace cobord::tqft {

using exact::Matrix;
using exact::Rational;
using frobenius::FrobeniusAlgebra;

/// Raised when an algebra fails verification and therefore induces no 2TQFT.
class AxiomError : public std::runtime_error {
 public:
  explicit AxiomError(frobenius::AxiomReport report);
  const frobenius::AxiomReport& report() const { return report_; }

 private:
  frobenius::AxiomReport report_;
};

/// The image of a cobordism n -> m: a dim^m x dim^n matrix.
struct Evaluation {
  std::shared_ptr<const FrobeniusAlgebra> algebra;
  std::size_t n_in = 0;
  std::size_t n_out = 0;
  Matrix matrix;
};

nlohmann::json to_json(const Evaluation& e);

/// Left-fold of mul: dim^n -> dim. n = 0 gives the unit, n = 1 the identity.
Matrix iterated_mul(const FrobeniusAlgebra& a, std::size_t n);
/// Dual fold of comul: dim -> dim^m. m = 0 gives the counit.
Matrix iterated_comul(const FrobeniusAlgebra& a, std::size_t m);

/// The functor F_A for one algebra. Thread-safe; building blocks are memoized.
class Evaluator {
 public:
  /// Verifies the axioms once; throws AxiomError on failure.
  explicit Evaluator(FrobeniusAlgebra algebra);

  const FrobeniusAlgebra& algebra() const { return *algebra_; }
  std::size_t dim() const { return algebra_->dim; }

  /// mul after comul, the image of E(1,1,1).
  const Matrix& handle() const { return handle_; }
  Matrix handle_power(surface::Genus k) const;
  /// Image of the closed genus-g surface.
  Rational closed_scalar(surface::Genus g) const;
  /// Image of E(m,k,n): comul-tree after handle^k after mul-tree.
  Matrix block(std::size_t m, surface::Genus k, std::size_t n) const;

  Evaluation evaluate(const surface::Cobordism& k) const;

 private:
  std::shared_ptr<const FrobeniusAlgebra> algebra_;
  Matrix handle_;
  mutable std::mutex mutex_;
  mutable std::map<std::tuple<std::size_t, surface::Genus, std::size_t>, Matrix> blocks_;
  mutable std::map<surface::Genus, Matrix> handle_powers_;
  mutable std::map<std::size_t, Matrix> mul_trees_;
  mutable std::map<std::size_t, Matrix> comul_trees_;
};

/// One-off evaluation; prefer a long-lived Evaluator for repeated use.
Evaluation evaluate(const FrobeniusAlgebra& a, const surface::Cobordism& k);

// Closed forms for the two named algebras and their tensor product.

enum class AlgebraTag { QZ5, ZQS3, A };

/// (3/2)^(k-1) [[2^(2k-1)+1, 0, 2^(2k)-1], [0, 3*2^(2k-1), 0], [2^(2k-1)-1/2, 0, 2^(2k)+1/2]], k >= 1.
Matrix zqs3_handle_power(surface::Genus k);

/// Image of the closed genus-k surface: 5, (3/2)^(k-1)(2^(2k-1)+1), and 5 times the latter.
Rational closed_invariant(AlgebraTag tag, surface::Genus k);

}  // namespace cobord::tqft
