#include "cobord/surface/enumerate.hpp"

#include <algorithm>

namespace cobord::surface {

namespace {

// Calls f(block_of) for every set partition of {0..n-1}, as restricted growth strings.
template <typename F>
void for_each_partition(std::size_t n, F&& f) {
  std::vector<std::size_t> block(n, 0);
  auto rec = [&](auto& self, std::size_t pos, std::size_t blocks) -> void {
    if (pos == n) {
      f(block, blocks);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      block[pos] = b;
      self(self, pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<Cobordism> enumerate_open(std::size_t n_in, std::size_t n_out, Genus max_genus) {
  std::vector<Cobordism> out;
  const std::size_t labels = n_in + n_out;
  for_each_partition(labels, [&](const std::vector<std::size_t>& block, std::size_t blocks) {
    std::vector<Component> shape(blocks);
    for (std::size_t l = 0; l < labels; ++l) {
      if (l < n_in) {
        shape[block[l]].in.push_back(l);
      } else {
        shape[block[l]].out.push_back(l - n_in);
      }
    }
    std::vector<Genus> genus(blocks, 0);
    while (true) {
      for (std::size_t b = 0; b < blocks; ++b) shape[b].genus = genus[b];
      out.emplace_back(n_in, n_out, shape);
      std::size_t b = 0;
      while (b < blocks && genus[b] == max_genus) genus[b++] = 0;
      if (b == blocks) break;
      ++genus[b];
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Genus>> enumerate_multisets(std::size_t max_count, Genus max_genus) {
  std::vector<std::vector<Genus>> out{{}};
  std::vector<Genus> current;
  auto rec = [&](auto& self, Genus cap) -> void {
    if (current.size() == max_count) return;
    for (Genus g = 0; g <= cap; ++g) {
      current.push_back(g);
      out.push_back(current);
      self(self, g);
      current.pop_back();
    }
  };
  rec(rec, max_genus);
  for (auto& m : out) std::sort(m.begin(), m.end(), std::greater<>());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cobordism> enumerate(const EnumerationBounds& bounds) {
  const auto closed = enumerate_multisets(bounds.max_closed, bounds.max_closed_genus);
  std::vector<Cobordism> out;
  for (std::size_t n_in = 0; n_in <= bounds.max_circles; ++n_in) {
    for (std::size_t n_out = 0; n_out <= bounds.max_circles; ++n_out) {
      for (const auto& open : enumerate_open(n_in, n_out, bounds.max_genus)) {
        for (const auto& c : closed) {
          out.emplace_back(n_in, n_out, open.components(), c);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json to_json(const EnumerationBounds& b) {
  return {{"max_circles", b.max_circles},
          {"max_genus", b.max_genus},
          {"max_closed", b.max_closed},
          {"max_closed_genus", b.max_closed_genus}};
}

EnumerationBounds bounds_from_json(const nlohmann::json& j) {
  return {j.at("max_circles").get<std::size_t>(), j.at("max_genus").get<Genus>(),
          j.at("max_closed").get<std::size_t>(), j.at("max_closed_genus").get<Genus>()};
}

}  // namespace cobord::surface
