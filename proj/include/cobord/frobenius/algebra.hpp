#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cobord/exact/matrix.hpp"
#include "cobord/frobenius/group.hpp"

namespace cobord::frobenius {

using exact::Matrix;

/// Commutative Frobenius algebra over Q in a fixed basis. Tensor powers use the basis
/// ordering b_i (x) b_j -> i * dim + j.
struct FrobeniusAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  Matrix mul;     // dim x dim^2
  Matrix unit;    // dim x 1
  Matrix comul;   // dim^2 x dim
  Matrix counit;  // 1 x dim
};

/// Frobenius pairing (counit after mul) and its inverse copairing.
struct PairingData {
  Matrix pairing;    // 1 x dim^2
  Matrix copairing;  // dim^2 x 1
};

struct AxiomCheck {
  std::string name;
  bool passed = false;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  std::vector<std::string> failures() const;
};

/// Q[G] with counit e -> |G| (other elements -> 0) and comul (1/|G|) mul^T.
FrobeniusAlgebra group_algebra(const FiniteGroup& g);

/// Center of Q[G] on the class-sum basis (identity class first, then by least element).
/// Counit reads the coefficient of e; comul is derived from the copairing.
FrobeniusAlgebra center_of_group_algebra(const FiniteGroup& g);

/// Throws std::domain_error("not a Frobenius form") when the pairing is degenerate.
PairingData pairing_copairing(const FrobeniusAlgebra& a);

/// A (x) B with the structure maps routed through the middle swap.
FrobeniusAlgebra tensor_algebra(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b);

/// Checks every axiom of a commutative Frobenius algebra as an exact matrix identity.
AxiomReport verify_frobenius(const FrobeniusAlgebra& a);

/// Flip on A (x) A.
Matrix swap_matrix(std::size_t dim);

FrobeniusAlgebra qz5();
FrobeniusAlgebra zqs3();
/// QZ5 (x) Z(QS3), the 15-dimensional algebra.
FrobeniusAlgebra qz5_zqs3();

nlohmann::json to_json(const FrobeniusAlgebra& a);
/// Reads the algebra JSON form. Does not verify axioms.
FrobeniusAlgebra algebra_from_json(const nlohmann::json& j);

}  // namespace cobord::frobenius
