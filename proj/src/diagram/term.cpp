#include "cobord/diagram/term.hpp"

#include <array>

namespace cobord::diagram {

std::string to_string(const Arity& a) { return std::to_string(a.in) + "->" + std::to_string(a.out); }

TermPtr gen(Gen g) { return std::make_shared<const Term>(g); }
TermPtr comp(TermPtr left, TermPtr right) {
  const std::size_t pos = left->position();
  return std::make_shared<const Term>(Comp{std::move(left), std::move(right)}, pos);
}
TermPtr tens(TermPtr left, TermPtr right) {
  const std::size_t pos = left->position();
  return std::make_shared<const Term>(Tens{std::move(left), std::move(right)}, pos);
}

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("at position " + std::to_string(position) + ": " + message),
      position_(position),
      message_(message) {}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Arity gen_arity(const Gen& g) {
  switch (g.kind) {
    case GenKind::Mu: return {2, 1};
    case GenKind::Eta: return {0, 1};
    case GenKind::Delta: return {1, 2};
    case GenKind::Eps: return {1, 0};
    case GenKind::Id: return {g.n, g.n};
    case GenKind::Swap: return {2, 2};
    case GenKind::Block: return {g.n, g.m};
  }
  return {};
}

}  // namespace

Arity arity(const Term& t) {
  return std::visit(
      overloaded{
          [](const Gen& g) { return gen_arity(g); },
          [](const Comp& c) {
            const Arity l = arity(*c.left);
            const Arity r = arity(*c.right);
            if (l.out != r.in) {
              throw ParseError(c.right->position(),
                               "composition arity mismatch: left side is " + to_string(l) +
                                   " but right side is " + to_string(r) + " (needs " +
                                   std::to_string(l.out) + " ingoing, has " + std::to_string(r.in) + ")");
            }
            return Arity{l.in, r.out};
          },
          [](const Tens& c) {
            const Arity l = arity(*c.left);
            const Arity r = arity(*c.right);
            return Arity{l.in + r.in, l.out + r.out};
          }},
      t.node());
}

std::string print(const Term& t) {
  return std::visit(overloaded{[](const Gen& g) -> std::string {
                                 switch (g.kind) {
                                   case GenKind::Mu: return "mu";
                                   case GenKind::Eta: return "eta";
                                   case GenKind::Delta: return "delta";
                                   case GenKind::Eps: return "eps";
                                   case GenKind::Swap: return "swap";
                                   case GenKind::Id: return "id[" + std::to_string(g.n) + "]";
                                   case GenKind::Block:
                                     return "E[" + std::to_string(g.m) + "," + std::to_string(g.k) +
                                            "," + std::to_string(g.n) + "]";
                                 }
                                 return {};
                               },
                               [](const Comp& c) { return "(" + print(*c.left) + " ; " + print(*c.right) + ")"; },
                               [](const Tens& c) { return "(" + print(*c.left) + " * " + print(*c.right) + ")"; }},
                    t.node());
}

namespace {

surface::Cobordism elaborate_checked(const Term& t) {
  return std::visit(overloaded{[](const Gen& g) {
                                 switch (g.kind) {
                                   case GenKind::Mu: return surface::e_block(1, 0, 2);
                                   case GenKind::Eta: return surface::e_block(1, 0, 0);
                                   case GenKind::Delta: return surface::e_block(2, 0, 1);
                                   case GenKind::Eps: return surface::e_block(0, 0, 1);
                                   case GenKind::Id: return surface::identity(g.n);
                                   case GenKind::Swap: {
                                     constexpr std::array<std::size_t, 2> flip{1, 0};
                                     return surface::permutation(flip);
                                   }
                                   case GenKind::Block: return surface::e_block(g.m, g.k, g.n);
                                 }
                                 return surface::Cobordism{};
                               },
                               [](const Comp& c) {
                                 return surface::compose(elaborate_checked(*c.left), elaborate_checked(*c.right));
                               },
                               [](const Tens& c) {
                                 return surface::tensor(elaborate_checked(*c.left), elaborate_checked(*c.right));
                               }},
                    t.node());
}

}  // namespace

surface::Cobordism elaborate(const Term& t) {
  arity(t);
  return elaborate_checked(t);
}

}  // namespace cobord::diagram
