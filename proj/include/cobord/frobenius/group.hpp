#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cobord::frobenius {

/// Finite group given by its Cayley table: table[i][j] is the index of g_i * g_j.
class FiniteGroup {
 public:
  /// Validates closure, associativity, identity and inverses; throws std::invalid_argument.
  FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names = {});

  static FiniteGroup cyclic(std::size_t n);
  /// Symmetric group on {1..n}; elements listed in lexicographic order of their image lists,
  /// named in cycle notation.
  static FiniteGroup symmetric(std::size_t n);
  static FiniteGroup trivial() { return cyclic(1); }

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t product(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::string& name(std::size_t a) const { return names_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  /// Conjugacy classes, each sorted by element index; the identity class comes first and the
  /// rest are ordered by least element index.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::string> names_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

nlohmann::json to_json(const FiniteGroup& g);
/// Reads {"order":n,"table":[[...]]}.
FiniteGroup group_from_json(const nlohmann::json& j);

}  // namespace cobord::frobenius
