#include <algorithm>
#include <unordered_map>

#include "cobord/faithfulness/faithfulness.hpp"

namespace cobord::faithfulness {

GenusMultiset::GenusMultiset(std::vector<Genus> genera) : genera_(std::move(genera)) {
  std::sort(genera_.begin(), genera_.end(), std::greater<>());
}

GenusMultiset GenusMultiset::merged(const GenusMultiset& other) const {
  std::vector<Genus> all = genera_;
  all.insert(all.end(), other.genera_.begin(), other.genera_.end());
  return GenusMultiset(std::move(all));
}

nlohmann::json to_json(const GenusMultiset& m) { return m.genera(); }

Rational multiset_invariant(const GenusMultiset& ks) {
  Rational product(1);
  for (Genus k : ks.genera()) product *= tqft::closed_invariant(tqft::AlgebraTag::A, k);
  return product;
}

Lemma4Report lemma4_injectivity(std::size_t max_size, Genus max_genus) {
  Lemma4Report report;
  report.max_size = max_size;
  report.max_genus = max_genus;
  std::unordered_map<Rational, GenusMultiset> seen;
  for (auto& genera : surface::enumerate_multisets(max_size, max_genus)) {
    GenusMultiset m(std::move(genera));
    ++report.multisets;
    auto [it, inserted] = seen.emplace(multiset_invariant(m), m);
    if (!inserted && report.injective) {
      report.injective = false;
      report.collision = std::make_pair(it->second, m);
    }
  }
  return report;
}

}  // namespace cobord::faithfulness
