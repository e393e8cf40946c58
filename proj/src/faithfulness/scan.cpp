#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "cobord/faithfulness/faithfulness.hpp"

namespace cobord::faithfulness {

namespace {

// First pair (in row-major (i, j) order) failing the check, per row i.
struct RowResult {
  std::size_t matrix_collisions = 0;
  std::size_t separation_failures = 0;
  std::optional<std::size_t> first_partner;
  std::vector<std::size_t> image_partners;
};

}  // namespace

ScanCertificate faithfulness_scan(const tqft::Evaluator& evaluator, const surface::EnumerationBounds& bounds,
                                  std::string algebra_name, int workers) {
  if (bounds.max_circles > 3) {
    throw std::invalid_argument("faithfulness_scan: at most 3 circles per side (images grow as dim^circles)");
  }
  if (workers > 0) omp_set_num_threads(workers);

  ScanCertificate cert;
  cert.bounds = bounds;
  cert.algebra = std::move(algebra_name);
  std::vector<Cobordism> objects = surface::enumerate(bounds);
  const std::size_t n = objects.size();
  cert.enumerated = n;
  cert.pairs_checked = n * (n - (n > 0 ? 1 : 0)) / 2;

  std::vector<exact::Matrix> images(n);
  std::vector<std::size_t> hashes(n);
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < sn; ++i) {
    const auto u = static_cast<std::size_t>(i);
    images[u] = evaluator.evaluate(objects[u]).matrix;
    hashes[u] = images[u].hash();
  }

  // Objects are sorted by arity, so each arity is a contiguous run [begin, end).
  std::vector<std::size_t> run_end(n);
  for (std::size_t i = n; i-- > 0;) {
    const bool last = i + 1 == n || objects[i + 1].n_in() != objects[i].n_in() ||
                      objects[i + 1].n_out() != objects[i].n_out();
    run_end[i] = last ? i + 1 : run_end[i + 1];
  }

  std::vector<RowResult> rows(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < sn; ++i) {
    const auto u = static_cast<std::size_t>(i);
    RowResult& r = rows[u];
    for (std::size_t j = u + 1; j < run_end[u]; ++j) {
      const bool same_image = hashes[u] == hashes[j] && images[u] == images[j];
      bool separated = false;
      try {
        const Separation s = separating_closure(objects[u], objects[j]);
        separated = multiset_invariant(s.left) != multiset_invariant(s.right);
      } catch (const std::logic_error&) {
        separated = false;
      }
      if (same_image) {
        ++r.matrix_collisions;
        r.image_partners.push_back(j);
      }
      if (!separated) ++r.separation_failures;
      if ((same_image || !separated) && !r.first_partner) r.first_partner = j;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    cert.same_arity_pairs += run_end[i] - i - 1;
    cert.matrix_collisions += rows[i].matrix_collisions;
    cert.separation_failures += rows[i].separation_failures;
    for (auto j : rows[i].image_partners) cert.colliding.emplace_back(i, j);
    if (!rows[i].first_partner) continue;
    Collision c{objects[i], objects[*rows[i].first_partner]};
    if (!cert.first_collision) cert.first_collision = c;
    const bool new_arity = cert.first_collision_per_arity.empty() ||
                           cert.first_collision_per_arity.back().left.n_in() != c.left.n_in() ||
                           cert.first_collision_per_arity.back().left.n_out() != c.left.n_out();
    if (new_arity) cert.first_collision_per_arity.push_back(std::move(c));
  }
  cert.objects = std::move(objects);
  return cert;
}

bool ScanCertificate::reports_collision(const Cobordism& k, const Cobordism& l) const {
  const auto index = [&](const Cobordism& x) -> std::optional<std::size_t> {
    const auto it = std::lower_bound(objects.begin(), objects.end(), x);
    if (it == objects.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - objects.begin());
  };
  auto a = index(k), b = index(l);
  if (!a || !b) return false;
  if (*a > *b) std::swap(a, b);
  return std::binary_search(colliding.begin(), colliding.end(), std::make_pair(*a, *b));
}

nlohmann::json to_json(const ScanCertificate& c) {
  nlohmann::json j = {{"bounds", surface::to_json(c.bounds)},
                      {"algebra", c.algebra},
                      {"enumerated", c.enumerated},
                      {"pairs_checked", c.pairs_checked},
                      {"same_arity_pairs", c.same_arity_pairs},
                      {"matrix_collisions", c.matrix_collisions},
                      {"separation_failures", c.separation_failures},
                      {"verdict", c.distinct() ? "distinct" : "collision"}};
  if (c.first_collision) {
    j["collision"] = {{"left", surface::to_json(c.first_collision->left)},
                      {"right", surface::to_json(c.first_collision->right)}};
    nlohmann::json per = nlohmann::json::array();
    for (const auto& x : c.first_collision_per_arity) {
      per.push_back({{"left", surface::to_json(x.left)}, {"right", surface::to_json(x.right)}});
    }
    j["collisions_by_arity"] = std::move(per);
  }
  return j;
}

}  // namespace cobord::faithfulness
