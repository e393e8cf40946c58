#include "cobord/tqft/evaluator.hpp"

#include <numeric>

namespace cobord::tqft {

using exact::kron;
using exact::mat_mul;

namespace {

std::string failure_list(const frobenius::AxiomReport& report) {
  std::string s;
  for (const auto& f : report.failures()) s += (s.empty() ? "" : ", ") + f;
  return s;
}

}  // namespace

AxiomError::AxiomError(frobenius::AxiomReport report)
    : std::runtime_error("algebra is not a commutative Frobenius algebra; failed: " + failure_list(report)),
      report_(std::move(report)) {}

nlohmann::json to_json(const Evaluation& e) {
  return {{"in", e.n_in}, {"out", e.n_out}, {"dim", e.algebra->dim}, {"matrix", exact::to_json(e.matrix)}};
}

Matrix iterated_mul(const FrobeniusAlgebra& a, std::size_t n) {
  if (n == 0) return a.unit;
  Matrix tree = Matrix::identity(a.dim);
  for (std::size_t width = 2; width <= n; ++width) {
    tree = mat_mul(a.mul, kron(tree, Matrix::identity(a.dim)));
  }
  return tree;
}

Matrix iterated_comul(const FrobeniusAlgebra& a, std::size_t m) {
  if (m == 0) return a.counit;
  Matrix tree = Matrix::identity(a.dim);
  for (std::size_t width = 2; width <= m; ++width) {
    tree = mat_mul(kron(tree, Matrix::identity(a.dim)), a.comul);
  }
  return tree;
}

Evaluator::Evaluator(FrobeniusAlgebra algebra)
    : algebra_(std::make_shared<const FrobeniusAlgebra>(std::move(algebra))) {
  auto report = frobenius::verify_frobenius(*algebra_);
  if (!report.all_passed()) throw AxiomError(std::move(report));
  handle_ = mat_mul(algebra_->mul, algebra_->comul);
}

Matrix Evaluator::handle_power(surface::Genus k) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = handle_powers_.find(k); it != handle_powers_.end()) return it->second;
  }
  Matrix p = k == 0 ? Matrix::identity(dim()) : mat_mul(handle_power(k - 1), handle_);
  std::lock_guard lock(mutex_);
  return handle_powers_.emplace(k, std::move(p)).first->second;
}

Rational Evaluator::closed_scalar(surface::Genus g) const { return block(0, g, 0).as_scalar(); }

Matrix Evaluator::block(std::size_t m, surface::Genus k, std::size_t n) const {
  const auto key = std::make_tuple(m, k, n);
  {
    std::lock_guard lock(mutex_);
    if (auto it = blocks_.find(key); it != blocks_.end()) return it->second;
  }
  auto tree = [this](std::map<std::size_t, Matrix>& cache, std::size_t width, bool is_mul) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache.find(width); it != cache.end()) return it->second;
    }
    Matrix t = is_mul ? iterated_mul(*algebra_, width) : iterated_comul(*algebra_, width);
    std::lock_guard lock(mutex_);
    return cache.emplace(width, std::move(t)).first->second;
  };
  const Matrix mul_tree = tree(mul_trees_, n, true);
  const Matrix comul_tree = tree(comul_trees_, m, false);
  const Matrix h = handle_power(k);
  // Both trees meet in a single dim-dimensional circle; fold the handles into the
  // narrower side first.
  Matrix result = comul_tree.rows() <= mul_tree.cols() ? mat_mul(mat_mul(comul_tree, h), mul_tree)
                                                       : mat_mul(comul_tree, mat_mul(h, mul_tree));
  std::lock_guard lock(mutex_);
  return blocks_.emplace(key, std::move(result)).first->second;
}

Evaluation Evaluator::evaluate(const surface::Cobordism& k) const {
  std::vector<std::size_t> in_route(k.n_in());
  std::vector<std::size_t> out_route;
  out_route.reserve(k.n_out());
  Matrix core = Matrix::scalar(Rational(1));
  std::size_t grouped = 0;
  for (const auto& c : k.components()) {
    for (auto i : c.in) in_route[i] = grouped++;
    out_route.insert(out_route.end(), c.out.begin(), c.out.end());
    core = kron(core, block(c.out.size(), c.genus, c.in.size()));
  }
  Rational scalar(1);
  for (auto g : k.closed_genera()) scalar *= closed_scalar(g);

  bool in_trivial = true, out_trivial = true;
  for (std::size_t i = 0; i < in_route.size(); ++i) in_trivial = in_trivial && in_route[i] == i;
  for (std::size_t i = 0; i < out_route.size(); ++i) out_trivial = out_trivial && out_route[i] == i;
  if (!in_trivial) core = mat_mul(core, exact::perm_matrix(in_route, dim()));
  if (!out_trivial) core = mat_mul(exact::perm_matrix(out_route, dim()), core);
  if (scalar != Rational(1)) core = core.scaled(scalar);
  return {algebra_, k.n_in(), k.n_out(), std::move(core)};
}

Evaluation evaluate(const FrobeniusAlgebra& a, const surface::Cobordism& k) { return Evaluator(a).evaluate(k); }

}  // namespace cobord::tqft
