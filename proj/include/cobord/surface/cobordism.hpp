#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cobord::surface {

using Genus = unsigned;

enum class Side : unsigned char { In = 0, Out = 1 };

/// A boundary circle: position `index` on the ingoing or outgoing side.
struct BoundaryLabel {
  std::size_t index = 0;
  Side side = Side::In;
  friend auto operator<=>(const BoundaryLabel&, const BoundaryLabel&) = default;
};

/// One connected component that touches the boundary.
struct Component {
  std::vector<std::size_t> in;   // sorted
  std::vector<std::size_t> out;  // sorted
  Genus genus = 0;
  friend auto operator<=>(const Component&, const Component&) = default;
  friend bool operator==(const Component&, const Component&) = default;
};

/// Normal form of a 2-cobordism n_in -> n_out: the boundary partition, the genus of each
/// boundary-touching component, and the multiset of closed-component genera.
///
/// Components are ordered by their first boundary circle (ingoing circles before outgoing
/// ones) and closed genera are sorted descending, so two values compare equal exactly when
/// they describe the same cobordism class.
class Cobordism {
 public:
  Cobordism() = default;
  /// Validates the partition and canonicalizes; throws std::invalid_argument otherwise.
  Cobordism(std::size_t n_in, std::size_t n_out, std::vector<Component> components,
            std::vector<Genus> closed_genera = {});

  std::size_t n_in() const { return n_in_; }
  std::size_t n_out() const { return n_out_; }
  const std::vector<Component>& components() const { return components_; }
  const std::vector<Genus>& closed_genera() const { return closed_; }

  /// Index into components() of the component containing `label`.
  std::size_t component_of(const BoundaryLabel& label) const;
  long euler_characteristic() const;
  Genus max_genus() const;
  /// Same boundary structure with the closed pieces removed.
  Cobordism without_closed() const;

  std::string arity_string() const;

  friend auto operator<=>(const Cobordism&, const Cobordism&) = default;
  friend bool operator==(const Cobordism&, const Cobordism&) = default;
  std::size_t hash() const;

 private:
  std::size_t n_in_ = 0;
  std::size_t n_out_ = 0;
  std::vector<Component> components_;
  std::vector<Genus> closed_;
};

/// Connected genus-k cobordism with n ingoing and m outgoing circles (closed when m = n = 0).
Cobordism e_block(std::size_t m, Genus k, std::size_t n);
Cobordism identity(std::size_t n);
/// Cylinders joining ingoing i to outgoing p[i].
Cobordism permutation(std::span<const std::size_t> p);

/// Glue K's outgoing circles to L's ingoing circles; K acts first.
Cobordism compose(const Cobordism& k, const Cobordism& l);
/// Side-by-side union, L's circles placed after K's.
Cobordism tensor(const Cobordism& k, const Cobordism& l);

/// The partition of boundary circles by connected component, in component order.
std::vector<std::vector<BoundaryLabel>> rho(const Cobordism& k);
/// Genus of the component containing the given circle.
Genus genus_at(const Cobordism& k, const BoundaryLabel& label);

nlohmann::json to_json(const Cobordism& k);
Cobordism cobordism_from_json(const nlohmann::json& j);

std::ostream& operator<<(std::ostream& os, const Cobordism& k);

}  // namespace cobord::surface

template <>
struct std::hash<cobord::surface::Cobordism> {
  std::size_t operator()(const cobord::surface::Cobordism& k) const noexcept { return k.hash(); }
};
