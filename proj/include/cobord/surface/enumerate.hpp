#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "cobord/surface/cobordism.hpp"

namespace cobord::surface {

struct EnumerationBounds {
  std::size_t max_circles = 2;      // per side
  Genus max_genus = 2;              // per boundary-touching component
  std::size_t max_closed = 1;       // number of closed pieces
  Genus max_closed_genus = 3;
  friend bool operator==(const EnumerationBounds&, const EnumerationBounds&) = default;
};

/// Every cobordism with n_in -> n_out and component genus <= max_genus, without closed pieces.
std::vector<Cobordism> enumerate_open(std::size_t n_in, std::size_t n_out, Genus max_genus);

/// Descending genus multisets with at most max_count entries, each <= max_genus.
std::vector<std::vector<Genus>> enumerate_multisets(std::size_t max_count, Genus max_genus);

/// All distinct cobordisms within the bounds, sorted by (n_in, n_out, components, closed).
std::vector<Cobordism> enumerate(const EnumerationBounds& bounds);

nlohmann::json to_json(const EnumerationBounds& b);
EnumerationBounds bounds_from_json(const nlohmann::json& j);

}  // namespace cobord::surface
