#include "cobord/surface/contexts.hpp"

#include <stdexcept>

namespace cobord::surface {

namespace {

void require_arity(const Cobordism& k, std::size_t n_in, std::size_t n_out, const char* op) {
  if (k.n_in() != n_in || k.n_out() != n_out) {
    throw std::invalid_argument(std::string(op) + " expects a " + std::to_string(n_in) + "->" +
                                std::to_string(n_out) + " cobordism, got " + k.arity_string());
  }
}

Cobordism padded(std::size_t before, const Cobordism& middle, std::size_t after) {
  return tensor(tensor(identity(before), middle), identity(after));
}

}  // namespace

Cobordism fill_hole(const Cobordism& k, const BoundaryLabel& label) {
  k.component_of(label);  // validates the label
  if (label.side == Side::In) {
    return compose(padded(label.index, e_block(1, 0, 0), k.n_in() - label.index - 1), k);
  }
  return compose(k, padded(label.index, e_block(0, 0, 1), k.n_out() - label.index - 1));
}

Cobordism stretch1(const Cobordism& k) {
  require_arity(k, 1, 0, "stretch1");
  return compose(e_block(2, 0, 1), tensor(k, identity(1)));
}

Cobordism stretch1_dual(const Cobordism& k) {
  require_arity(k, 0, 1, "stretch1_dual");
  return compose(tensor(k, identity(1)), e_block(1, 0, 2));
}

Cobordism stretch2(const Cobordism& k) {
  require_arity(k, 2, 0, "stretch2");
  return compose(tensor(identity(1), e_block(2, 0, 0)), tensor(k, identity(1)));
}

Cobordism stretch2_dual(const Cobordism& k) {
  require_arity(k, 0, 2, "stretch2_dual");
  return compose(tensor(k, identity(1)), tensor(identity(1), e_block(0, 0, 2)));
}

Cobordism closure(const Cobordism& k, Genus a) {
  require_arity(k, 1, 1, "closure");
  return compose(compose(e_block(1, a, 0), k), e_block(0, a, 1));
}

}  // namespace cobord::surface
