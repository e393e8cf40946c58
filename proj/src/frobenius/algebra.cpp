#include "cobord/frobenius/algebra.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cobord::frobenius {

using exact::kron;
using exact::mat_mul;
using exact::Rational;

bool AxiomReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::vector<std::string> AxiomReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

Matrix swap_matrix(std::size_t dim) {
  constexpr std::array<std::size_t, 2> flip{1, 0};
  return exact::perm_matrix(flip, dim);
}

FrobeniusAlgebra group_algebra(const FiniteGroup& g) {
  const std::size_t n = g.order();
  FrobeniusAlgebra a;
  a.dim = n;
  for (std::size_t i = 0; i < n; ++i) a.basis.push_back(g.name(i));
  a.mul = Matrix(n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.mul.set(g.product(i, j), i * n + j, Rational(1));
  }
  a.unit = Matrix(n, 1);
  a.unit.set(g.identity(), 0, Rational(1));
  a.counit = Matrix(1, n);
  a.counit.set(0, g.identity(), Rational(static_cast<long>(n)));
  a.comul = a.mul.transpose().scaled(Rational(1, static_cast<long>(n)));
  return a;
}

FrobeniusAlgebra center_of_group_algebra(const FiniteGroup& g) {
  const auto classes = g.conjugacy_classes();
  const std::size_t d = classes.size();
  std::vector<std::size_t> class_of(g.order());
  for (std::size_t c = 0; c < d; ++c) {
    for (auto x : classes[c]) class_of[x] = c;
  }

  FrobeniusAlgebra a;
  a.dim = d;
  for (const auto& cls : classes) {
    std::vector<std::string> names;
    for (auto x : cls) names.push_back(g.name(x));
    std::sort(names.begin(), names.end());
    std::string joined;
    for (std::size_t i = 0; i < names.size(); ++i) joined += (i ? "+" : "") + names[i];
    a.basis.push_back(joined);
  }

  // C_i C_j = sum_k c_ijk C_k; c_ijk counts products landing on the first element of C_k.
  a.mul = Matrix(d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<long> hits(d, 0);
      for (auto x : classes[i]) {
        for (auto y : classes[j]) {
          const std::size_t z = g.product(x, y);
          if (z == classes[class_of[z]].front()) ++hits[class_of[z]];
        }
      }
      for (std::size_t k = 0; k < d; ++k) a.mul.set(k, i * d + j, Rational(hits[k]));
    }
  }
  a.unit = Matrix(d, 1);
  a.unit.set(0, 0, Rational(1));
  a.counit = Matrix(1, d);
  a.counit.set(0, 0, Rational(1));

  const PairingData pd = pairing_copairing(a);
  // (id (x) mul) after (copairing (x) id)
  a.comul = mat_mul(kron(Matrix::identity(d), a.mul), kron(pd.copairing, Matrix::identity(d)));
  return a;
}

PairingData pairing_copairing(const FrobeniusAlgebra& a) {
  const std::size_t d = a.dim;
  PairingData pd;
  pd.pairing = mat_mul(a.counit, a.mul);
  Matrix form(d, d);
  for (const auto& [col, v] : pd.pairing.row(0)) form.set(col / d, col % d, v);
  Matrix inv;
  try {
    inv = exact::inverse(form);
  } catch (const std::domain_error&) {
    throw std::domain_error("not a Frobenius form: the pairing counit*mul is degenerate");
  }
  pd.copairing = Matrix(d * d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& [j, v] : inv.row(i)) pd.copairing.set(i * d + j, 0, v);
  }
  return pd;
}

FrobeniusAlgebra tensor_algebra(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b) {
  FrobeniusAlgebra t;
  t.dim = a.dim * b.dim;
  for (const auto& x : a.basis) {
    for (const auto& y : b.basis) t.basis.push_back(x + "⊗" + y);
  }
  // (a1 b1)(a2 b2) -> (a1 a2)(b1 b2) before multiplying each side.
  constexpr std::array<std::size_t, 4> middle{0, 2, 1, 3};
  const std::array<std::size_t, 4> mixed_in{a.dim, b.dim, a.dim, b.dim};
  const std::array<std::size_t, 4> split_in{a.dim, a.dim, b.dim, b.dim};
  t.mul = mat_mul(kron(a.mul, b.mul), exact::perm_matrix(middle, mixed_in));
  t.comul = mat_mul(exact::perm_matrix(middle, split_in), kron(a.comul, b.comul));
  t.unit = kron(a.unit, b.unit);
  t.counit = kron(a.counit, b.counit);
  return t;
}

AxiomReport verify_frobenius(const FrobeniusAlgebra& a) {
  const std::size_t d = a.dim;
  AxiomReport report;
  auto check = [&report](std::string name, auto&& test) {
    bool ok = false;
    try {
      ok = test();
    } catch (const std::invalid_argument&) {
      ok = false;  // shape mismatch counts as failure
    }
    report.checks.push_back({std::move(name), ok});
  };
  const Matrix id = Matrix::identity(d);

  check("shapes", [&] {
    return a.basis.size() == d && a.mul.rows() == d && a.mul.cols() == d * d && a.unit.rows() == d &&
           a.unit.cols() == 1 && a.comul.rows() == d * d && a.comul.cols() == d && a.counit.rows() == 1 &&
           a.counit.cols() == d;
  });
  if (!report.all_passed()) return report;

  const Matrix mul_id = kron(a.mul, id);
  const Matrix id_mul = kron(id, a.mul);
  const Matrix comul_id = kron(a.comul, id);
  const Matrix id_comul = kron(id, a.comul);

  check("left unit", [&] { return mat_mul(a.mul, kron(a.unit, id)) == id; });
  check("right unit", [&] { return mat_mul(a.mul, kron(id, a.unit)) == id; });
  check("associativity", [&] { return mat_mul(a.mul, mul_id) == mat_mul(a.mul, id_mul); });
  check("commutativity", [&] { return mat_mul(a.mul, swap_matrix(d)) == a.mul; });
  check("left counit", [&] { return mat_mul(kron(a.counit, id), a.comul) == id; });
  check("right counit", [&] { return mat_mul(kron(id, a.counit), a.comul) == id; });
  check("coassociativity", [&] { return mat_mul(comul_id, a.comul) == mat_mul(id_comul, a.comul); });
  const Matrix comul_after_mul = mat_mul(a.comul, a.mul);
  check("frobenius (id x mul)(comul x id)", [&] { return mat_mul(id_mul, comul_id) == comul_after_mul; });
  check("frobenius (mul x id)(id x comul)", [&] { return mat_mul(mul_id, id_comul) == comul_after_mul; });
  return report;
}

FrobeniusAlgebra qz5() { return group_algebra(FiniteGroup::cyclic(5)); }

FrobeniusAlgebra zqs3() { return center_of_group_algebra(FiniteGroup::symmetric(3)); }

FrobeniusAlgebra qz5_zqs3() { return tensor_algebra(qz5(), zqs3()); }

nlohmann::json to_json(const FrobeniusAlgebra& a) {
  return {{"dim", a.dim},
          {"basis", a.basis},
          {"mul", exact::to_json(a.mul)},
          {"unit", exact::to_json(a.unit)},
          {"comul", exact::to_json(a.comul)},
          {"counit", exact::to_json(a.counit)}};
}

FrobeniusAlgebra algebra_from_json(const nlohmann::json& j) {
  FrobeniusAlgebra a;
  a.dim = j.at("dim").get<std::size_t>();
  if (j.contains("basis")) {
    a.basis = j.at("basis").get<std::vector<std::string>>();
  } else {
    for (std::size_t i = 0; i < a.dim; ++i) a.basis.push_back("b" + std::to_string(i));
  }
  a.mul = exact::matrix_from_json(j.at("mul"));
  a.unit = exact::matrix_from_json(j.at("unit"));
  a.comul = exact::matrix_from_json(j.at("comul"));
  a.counit = exact::matrix_from_json(j.at("counit"));
  return a;
}

}  // namespace cobord::frobenius
