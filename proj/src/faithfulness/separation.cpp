#include <algorithm>
#include <stdexcept>

#include "cobord/faithfulness/faithfulness.hpp"
#include "cobord/surface/contexts.hpp"

namespace cobord::faithfulness {

using surface::BoundaryLabel;
using surface::Side;

std::string to_string(SeparationCase c) {
  switch (c) {
    case SeparationCase::ClosedPiecesDiffer: return "closed-pieces-differ";
    case SeparationCase::GenusDiffers: return "genus-differs";
    case SeparationCase::PartitionDiffers: return "partition-differs";
  }
  return "unknown";
}

namespace {

bool same_partition(const Cobordism& k, const Cobordism& l) {
  const auto& a = k.components();
  const auto& b = l.components();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].in != b[i].in || a[i].out != b[i].out) return false;
  }
  return true;
}

// Ingoing circles ascending, then outgoing circles ascending.
std::vector<BoundaryLabel> all_labels(const Cobordism& k) {
  std::vector<BoundaryLabel> labels;
  for (std::size_t i = 0; i < k.n_in(); ++i) labels.push_back({i, Side::In});
  for (std::size_t o = 0; o < k.n_out(); ++o) labels.push_back({o, Side::Out});
  return labels;
}

// Caps every circle not listed in `keep`, ingoing first, ascending. Circles above a capped
// one shift down by one, which the running counters account for.
Cobordism fill_all_except(Cobordism k, const std::vector<BoundaryLabel>& keep) {
  std::size_t removed_in = 0, removed_out = 0;
  for (const auto& label : all_labels(k)) {
    if (std::find(keep.begin(), keep.end(), label) != keep.end()) continue;
    if (label.side == Side::In) {
      k = surface::fill_hole(k, {label.index - removed_in++, Side::In});
    } else {
      k = surface::fill_hole(k, {label.index - removed_out++, Side::Out});
    }
  }
  return k;
}

GenusMultiset closed_multiset(const Cobordism& k) {
  if (!k.components().empty()) throw std::logic_error("separating context left boundary circles");
  return GenusMultiset(k.closed_genera());
}

}  // namespace

Separation separating_closure(const Cobordism& k, const Cobordism& l) {
  if (k.n_in() != l.n_in() || k.n_out() != l.n_out()) {
    throw std::invalid_argument("separating_closure: arities differ (" + k.arity_string() + " vs " +
                                l.arity_string() + ")");
  }
  if (k == l) throw std::invalid_argument("separating_closure: the cobordisms are equal");

  Separation s;
  s.closure_genus = std::max(k.max_genus(), l.max_genus()) + 1;
  Cobordism ck, cl;

  if (same_partition(k, l)) {
    const auto& a = k.components();
    const auto& b = l.components();
    std::size_t differing = a.size();
    for (std::size_t c = 0; c < a.size() && differing == a.size(); ++c) {
      if (a[c].genus != b[c].genus) differing = c;
    }
    if (differing == a.size()) {
      s.which = SeparationCase::ClosedPiecesDiffer;
      ck = fill_all_except(k, {});
      cl = fill_all_except(l, {});
    } else {
      s.which = SeparationCase::GenusDiffers;
      const auto& comp = a[differing];
      const BoundaryLabel kept = comp.in.empty() ? BoundaryLabel{comp.out.front(), Side::Out}
                                                 : BoundaryLabel{comp.in.front(), Side::In};
      auto reduce = [&](const Cobordism& x) {
        Cobordism y = fill_all_except(x, {kept});
        y = kept.side == Side::In ? surface::stretch1(y) : surface::stretch1_dual(y);
        return surface::closure(y, s.closure_genus);
      };
      ck = reduce(k);
      cl = reduce(l);
    }
  } else {
    s.which = SeparationCase::PartitionDiffers;
    const auto labels = all_labels(k);
    std::optional<std::pair<BoundaryLabel, BoundaryLabel>> pair;
    for (std::size_t x = 0; x < labels.size() && !pair; ++x) {
      for (std::size_t y = x + 1; y < labels.size() && !pair; ++y) {
        const bool in_k = k.component_of(labels[x]) == k.component_of(labels[y]);
        const bool in_l = l.component_of(labels[x]) == l.component_of(labels[y]);
        if (in_k != in_l) pair = std::make_pair(labels[x], labels[y]);
      }
    }
    if (!pair) throw std::logic_error("partitions differ but no separating pair was found");
    const auto [first, second] = *pair;
    auto reduce = [&](const Cobordism& x) {
      Cobordism y = fill_all_except(x, {first, second});
      if (first.side == Side::In && second.side == Side::In) {
        y = surface::stretch2(y);
      } else if (first.side == Side::Out && second.side == Side::Out) {
        y = surface::stretch2_dual(y);
      }
      return surface::closure(y, s.closure_genus);
    };
    ck = reduce(k);
    cl = reduce(l);
  }

  s.left = closed_multiset(ck);
  s.right = closed_multiset(cl);
  if (s.left == s.right) {
    throw std::logic_error("separating_closure produced equal multisets for distinct cobordisms " +
                           to_json(k).dump() + " and " + to_json(l).dump());
  }
  return s;
}

}  // namespace cobord::faithfulness
