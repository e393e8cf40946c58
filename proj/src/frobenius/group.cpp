#include "cobord/frobenius/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cobord::frobenius {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const std::size_t n = table_.size();
  if (n == 0) throw std::invalid_argument("group must have at least one element");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("Cayley table is not square");
    for (auto x : row) {
      if (x >= n) throw std::invalid_argument("Cayley table entry out of range");
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool is_identity = true;
    for (std::size_t a = 0; a < n && is_identity; ++a) is_identity = table_[e][a] == a && table_[a][e] == a;
    if (is_identity) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("Cayley table has no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw std::invalid_argument("Cayley table is not associative at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    }
    if (inverse_[a] == n) throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
  }
  if (names_.empty()) {
    for (std::size_t a = 0; a < n; ++a) names_.push_back(a == identity_ ? "e" : "g" + std::to_string(a));
  } else if (names_.size() != n) {
    throw std::invalid_argument("element name count does not match group order");
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    names.push_back(i == 0 ? "e" : i == 1 ? "a" : "a^" + std::to_string(i));
  }
  return FiniteGroup(std::move(table), std::move(names));
}

namespace {

std::string cycle_notation(const std::vector<std::size_t>& image) {
  std::vector<char> seen(image.size(), 0);
  std::string s;
  for (std::size_t start = 0; start < image.size(); ++start) {
    if (seen[start] || image[start] == start) continue;
    s += "(";
    for (std::size_t x = start; !seen[x]; x = image[x]) {
      seen[x] = 1;
      s += std::to_string(x + 1);
    }
    s += ")";
  }
  return s.empty() ? "e" : s;
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < order; ++a) {
    names.push_back(cycle_notation(perms[a]));
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<std::size_t> composed(n);
      for (std::size_t x = 0; x < n; ++x) composed[x] = perms[a][perms[b][x]];
      table[a][b] = static_cast<std::size_t>(
          std::lower_bound(perms.begin(), perms.end(), composed) - perms.begin());
    }
  }
  return FiniteGroup(std::move(table), std::move(names));
}

std::vector<std::vector<std::size_t>> FiniteGroup::conjugacy_classes() const {
  const std::size_t n = order();
  std::vector<char> assigned(n, 0);
  std::vector<std::vector<std::size_t>> classes;
  auto collect = [&](std::size_t x) {
    std::vector<std::size_t> cls;
    for (std::size_t g = 0; g < n; ++g) {
      const std::size_t y = table_[table_[g][x]][inverse_[g]];
      if (!assigned[y]) {
        assigned[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  };
  collect(identity_);
  for (std::size_t x = 0; x < n; ++x) {
    if (!assigned[x]) collect(x);
  }
  return classes;
}

nlohmann::json to_json(const FiniteGroup& g) { return {{"order", g.order()}, {"table", g.table()}}; }

FiniteGroup group_from_json(const nlohmann::json& j) {
  auto table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
  if (j.contains("order") && j.at("order").get<std::size_t>() != table.size()) {
    throw std::invalid_argument("group JSON: order does not match table size");
  }
  return FiniteGroup(std::move(table));
}

}  // namespace cobord::frobenius
