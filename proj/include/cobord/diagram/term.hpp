#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "cobord/surface/cobordism.hpp"

namespace cobord::diagram {

struct Arity {
  std::size_t in = 0;
  std::size_t out = 0;
  friend bool operator==(const Arity&, const Arity&) = default;
};

std::string to_string(const Arity& a);

enum class GenKind { Mu, Eta, Delta, Eps, Id, Swap, Block };

/// A generator atom. `m, k, n` are meaningful for Block (E[m,k,n]); `n` for Id (id[n]).
struct Gen {
  GenKind kind = GenKind::Id;
  std::size_t m = 0;
  surface::Genus k = 0;
  std::size_t n = 0;
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// `left ; right`: left acts first.
struct Comp {
  TermPtr left, right;
};
/// `left * right`: side by side.
struct Tens {
  TermPtr left, right;
};

class Term {
 public:
  using Node = std::variant<Gen, Comp, Tens>;

  explicit Term(Node node, std::size_t position = 0) : node_(std::move(node)), position_(position) {}

  const Node& node() const { return node_; }
  /// Source offset where the term starts (0 for terms built in code).
  std::size_t position() const { return position_; }

 private:
  Node node_;
  std::size_t position_;
};

TermPtr gen(Gen g);
TermPtr comp(TermPtr left, TermPtr right);
TermPtr tens(TermPtr left, TermPtr right);

/// Syntax or typing error at a source offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

/// Arity of a well-formed term; throws ParseError on a composition mismatch.
Arity arity(const Term& t);

/// Parses and type-checks a generator word.
TermPtr parse(std::string_view text);

/// Fully parenthesized rendering; parse(print(t)) rebuilds t.
std::string print(const Term& t);

/// Interprets the word as a cobordism normal form.
surface::Cobordism elaborate(const Term& t);

/// A canonical generator word that elaborates back to `k`.
std::string format(const surface::Cobordism& k);

}  // namespace cobord::diagram
