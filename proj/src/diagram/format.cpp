#include <numeric>
#include <vector>

#include "cobord/diagram/term.hpp"

namespace cobord::diagram {

namespace {

std::string id_word(std::size_t n) { return "id[" + std::to_string(n) + "]"; }

// `core` with identity strands on either side; zero-width identities are dropped.
std::string padded(std::size_t before, const std::string& core, std::size_t after) {
  std::string s;
  if (before > 0) s += id_word(before) + " * ";
  s += core;
  if (after > 0) s += " * " + id_word(after);
  return s;
}

// Layers of adjacent swaps realizing "strand at input t ends at output p[t]".
std::vector<std::string> permutation_layers(const std::vector<std::size_t>& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> arrangement(n);
  std::iota(arrangement.begin(), arrangement.end(), 0);
  std::vector<std::string> layers;
  for (std::size_t pass = 0; pass < n; ++pass) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (p[arrangement[j]] > p[arrangement[j + 1]]) {
        std::swap(arrangement[j], arrangement[j + 1]);
        layers.push_back(padded(j, "swap", n - j - 2));
      }
    }
  }
  return layers;
}

void append_handles(std::vector<std::string>& steps, surface::Genus k) {
  for (surface::Genus h = 0; h < k; ++h) {
    steps.emplace_back("delta");
    steps.emplace_back("mu");
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += sep;
    s += parts[i];
  }
  return s;
}

// mu-tree, handles, delta-tree for one connected piece.
std::string component_word(std::size_t n_in, std::size_t n_out, surface::Genus genus) {
  std::vector<std::string> steps;
  if (n_in == 0) steps.emplace_back("eta");
  for (std::size_t width = n_in; width >= 2; --width) steps.push_back(padded(0, "mu", width - 2));
  append_handles(steps, genus);
  for (std::size_t width = 1; width < n_out; ++width) steps.push_back(padded(0, "delta", width - 1));
  if (n_out == 0) steps.emplace_back("eps");
  if (steps.empty()) return id_word(1);
  return join(steps, " ; ");
}

}  // namespace

std::string format(const surface::Cobordism& k) {
  std::vector<std::size_t> in_route(k.n_in()), out_route;
  std::vector<std::string> pieces;
  std::size_t grouped = 0;
  for (const auto& c : k.components()) {
    for (auto i : c.in) in_route[i] = grouped++;
    out_route.insert(out_route.end(), c.out.begin(), c.out.end());
    pieces.push_back(component_word(c.in.size(), c.out.size(), c.genus));
  }
  for (auto g : k.closed_genera()) pieces.push_back(component_word(0, 0, g));

  std::vector<std::string> sequence = permutation_layers(in_route);
  if (pieces.empty()) {
    sequence.push_back(id_word(0));
  } else if (pieces.size() == 1) {
    sequence.push_back(pieces.front());
  } else {
    for (auto& p : pieces) {
      if (p.find(';') != std::string::npos) p = "(" + p + ")";
    }
    sequence.push_back(join(pieces, " * "));
  }
  for (auto& layer : permutation_layers(out_route)) sequence.push_back(std::move(layer));
  return join(sequence, " ; ");
}

}  // namespace cobord::diagram
