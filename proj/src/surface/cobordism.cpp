#include "cobord/surface/cobordism.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cobord::surface {

namespace {

std::size_t sort_key(const Component& c, std::size_t n_in) {
  return c.in.empty() ? n_in + c.out.front() : c.in.front();
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

long component_chi(const Component& c) {
  return 2 - 2 * static_cast<long>(c.genus) - static_cast<long>(c.in.size() + c.out.size());
}

}  // namespace

Cobordism::Cobordism(std::size_t n_in, std::size_t n_out, std::vector<Component> components,
                     std::vector<Genus> closed_genera)
    : n_in_(n_in), n_out_(n_out), components_(std::move(components)), closed_(std::move(closed_genera)) {
  std::vector<char> seen_in(n_in, 0), seen_out(n_out, 0);
  for (auto& c : components_) {
    if (c.in.empty() && c.out.empty()) {
      throw std::invalid_argument("component without boundary circles; closed pieces belong in closed_genera");
    }
    std::sort(c.in.begin(), c.in.end());
    std::sort(c.out.begin(), c.out.end());
    for (std::size_t i : c.in) {
      if (i >= n_in || seen_in[i]) {
        throw std::invalid_argument("ingoing circles do not partition {0.." + std::to_string(n_in) + "-1}");
      }
      seen_in[i] = 1;
    }
    for (std::size_t o : c.out) {
      if (o >= n_out || seen_out[o]) {
        throw std::invalid_argument("outgoing circles do not partition {0.." + std::to_string(n_out) + "-1}");
      }
      seen_out[o] = 1;
    }
  }
  if (std::count(seen_in.begin(), seen_in.end(), 0) != 0 ||
      std::count(seen_out.begin(), seen_out.end(), 0) != 0) {
    throw std::invalid_argument("some boundary circle belongs to no component");
  }
  std::sort(components_.begin(), components_.end(), [n_in](const Component& a, const Component& b) {
    return sort_key(a, n_in) < sort_key(b, n_in);
  });
  std::sort(closed_.begin(), closed_.end(), std::greater<>());
}

std::size_t Cobordism::component_of(const BoundaryLabel& label) const {
  const std::size_t arity = label.side == Side::In ? n_in_ : n_out_;
  if (label.index >= arity) {
    throw std::invalid_argument("boundary label " + std::to_string(label.index) +
                                (label.side == Side::In ? " (in)" : " (out)") +
                                " out of range for " + arity_string());
  }
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& v = label.side == Side::In ? components_[c].in : components_[c].out;
    if (std::binary_search(v.begin(), v.end(), label.index)) return c;
  }
  throw std::logic_error("unreachable: boundary circle without component");
}

long Cobordism::euler_characteristic() const {
  long chi = 0;
  for (const auto& c : components_) chi += component_chi(c);
  for (Genus g : closed_) chi += 2 - 2 * static_cast<long>(g);
  return chi;
}

Genus Cobordism::max_genus() const {
  Genus g = closed_.empty() ? 0 : closed_.front();
  for (const auto& c : components_) g = std::max(g, c.genus);
  return g;
}

Cobordism Cobordism::without_closed() const {
  Cobordism k = *this;
  k.closed_.clear();
  return k;
}

std::string Cobordism::arity_string() const {
  return std::to_string(n_in_) + "->" + std::to_string(n_out_);
}

std::size_t Cobordism::hash() const {
  std::size_t h = n_in_ * 131 + n_out_;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& c : components_) {
    for (auto i : c.in) mix(i);
    mix(1000003);
    for (auto o : c.out) mix(o);
    mix(c.genus + 7919);
  }
  for (auto g : closed_) mix(g + 104729);
  return h;
}

Cobordism e_block(std::size_t m, Genus k, std::size_t n) {
  if (m == 0 && n == 0) return Cobordism(0, 0, {}, {k});
  Component c;
  c.in.resize(n);
  c.out.resize(m);
  std::iota(c.in.begin(), c.in.end(), 0);
  std::iota(c.out.begin(), c.out.end(), 0);
  c.genus = k;
  return Cobordism(n, m, {std::move(c)});
}

Cobordism identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return permutation(p);
}

Cobordism permutation(std::span<const std::size_t> p) {
  std::vector<Component> comps;
  comps.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) comps.push_back({{i}, {p[i]}, 0});
  return Cobordism(p.size(), p.size(), std::move(comps));
}

Cobordism compose(const Cobordism& k, const Cobordism& l) {
  if (k.n_out() != l.n_in()) {
    throw std::invalid_argument("compose: cannot glue " + k.arity_string() + " to " + l.arity_string() +
                                " (" + std::to_string(k.n_out()) + " outgoing vs " +
                                std::to_string(l.n_in()) + " ingoing circles)");
  }
  const auto& kc = k.components();
  const auto& lc = l.components();
  const std::size_t offset = kc.size();
  UnionFind uf(kc.size() + lc.size());

  std::vector<std::size_t> k_owner(k.n_out()), l_owner(l.n_in());
  for (std::size_t c = 0; c < kc.size(); ++c) {
    for (auto o : kc[c].out) k_owner[o] = c;
  }
  for (std::size_t c = 0; c < lc.size(); ++c) {
    for (auto i : lc[c].in) l_owner[i] = offset + c;
  }
  for (std::size_t j = 0; j < k.n_out(); ++j) uf.unite(k_owner[j], l_owner[j]);

  // Per merged class: total Euler characteristic and surviving boundary.
  const std::size_t total = kc.size() + lc.size();
  std::vector<long> chi(total, 0);
  std::vector<Component> merged(total);
  for (std::size_t c = 0; c < kc.size(); ++c) {
    const std::size_t r = uf.find(c);
    chi[r] += component_chi(kc[c]);
    merged[r].in.insert(merged[r].in.end(), kc[c].in.begin(), kc[c].in.end());
  }
  for (std::size_t c = 0; c < lc.size(); ++c) {
    const std::size_t r = uf.find(offset + c);
    chi[r] += component_chi(lc[c]);
    merged[r].out.insert(merged[r].out.end(), lc[c].out.begin(), lc[c].out.end());
  }

  std::vector<Component> comps;
  std::vector<Genus> closed = k.closed_genera();
  closed.insert(closed.end(), l.closed_genera().begin(), l.closed_genera().end());
  for (std::size_t r = 0; r < total; ++r) {
    if (uf.find(r) != r) continue;
    const long b = static_cast<long>(merged[r].in.size() + merged[r].out.size());
    const long twice_genus = 2 - chi[r] - b;
    if (twice_genus < 0 || twice_genus % 2 != 0) {
      throw std::logic_error("compose: Euler characteristic gives non-integral genus");
    }
    merged[r].genus = static_cast<Genus>(twice_genus / 2);
    if (b == 0) {
      closed.push_back(merged[r].genus);
    } else {
      comps.push_back(std::move(merged[r]));
    }
  }
  return Cobordism(k.n_in(), l.n_out(), std::move(comps), std::move(closed));
}

Cobordism tensor(const Cobordism& k, const Cobordism& l) {
  std::vector<Component> comps = k.components();
  for (auto c : l.components()) {
    for (auto& i : c.in) i += k.n_in();
    for (auto& o : c.out) o += k.n_out();
    comps.push_back(std::move(c));
  }
  std::vector<Genus> closed = k.closed_genera();
  closed.insert(closed.end(), l.closed_genera().begin(), l.closed_genera().end());
  return Cobordism(k.n_in() + l.n_in(), k.n_out() + l.n_out(), std::move(comps), std::move(closed));
}

std::vector<std::vector<BoundaryLabel>> rho(const Cobordism& k) {
  std::vector<std::vector<BoundaryLabel>> classes;
  classes.reserve(k.components().size());
  for (const auto& c : k.components()) {
    std::vector<BoundaryLabel> cls;
    for (auto i : c.in) cls.push_back({i, Side::In});
    for (auto o : c.out) cls.push_back({o, Side::Out});
    classes.push_back(std::move(cls));
  }
  return classes;
}

Genus genus_at(const Cobordism& k, const BoundaryLabel& label) {
  return k.components()[k.component_of(label)].genus;
}

nlohmann::json to_json(const Cobordism& k) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : k.components()) {
    comps.push_back({{"in", c.in}, {"out", c.out}, {"genus", c.genus}});
  }
  return {{"in", k.n_in()}, {"out", k.n_out()}, {"components", std::move(comps)},
          {"closed", k.closed_genera()}};
}

Cobordism cobordism_from_json(const nlohmann::json& j) {
  std::vector<Component> comps;
  for (const auto& c : j.at("components")) {
    comps.push_back({c.at("in").get<std::vector<std::size_t>>(),
                     c.at("out").get<std::vector<std::size_t>>(), c.at("genus").get<Genus>()});
  }
  std::vector<Genus> closed;
  if (j.contains("closed")) closed = j.at("closed").get<std::vector<Genus>>();
  return Cobordism(j.at("in").get<std::size_t>(), j.at("out").get<std::size_t>(), std::move(comps),
                   std::move(closed));
}

std::ostream& operator<<(std::ostream& os, const Cobordism& k) { return os << to_json(k).dump(); }

}  // namespace cobord::surface
