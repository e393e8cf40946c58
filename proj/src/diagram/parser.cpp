#include <cctype>
#include <limits>

#include "cobord/diagram/term.hpp"

namespace cobord::diagram {

namespace {

// term   := tensor (";" tensor)*
// tensor := atom ("*" atom)*
// atom   := "(" term ")" | "mu" | "eta" | "delta" | "eps" | "swap" | "id[" n "]" | "E[" m "," k "," n "]"
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TermPtr parse_all() {
    TermPtr t = parse_seq();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(pos_ < text_.size() ? "expected '" + std::string(1, c) + "', found '" + std::string(1, text_[pos_]) + "'"
                               : "expected '" + std::string(1, c) + "', found end of input");
    }
  }

  TermPtr parse_seq() {
    TermPtr t = parse_tensor();
    while (accept(';')) t = comp(std::move(t), parse_tensor());
    return t;
  }

  TermPtr parse_tensor() {
    TermPtr t = parse_atom();
    while (accept('*')) t = tens(std::move(t), parse_atom());
    return t;
  }

  std::size_t parse_count() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t digit = static_cast<std::size_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<unsigned>::max() - digit) / 10) fail("number too large");
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected a non-negative integer");
    return value;
  }

  TermPtr parse_atom() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept('(')) {
      TermPtr t = parse_seq();
      expect(')');
      return t;
    }
    std::size_t end = pos_;
    while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
    const std::string_view word = text_.substr(pos_, end - pos_);
    if (word.empty()) {
      fail(pos_ < text_.size() ? "expected a generator, found '" + std::string(1, text_[pos_]) + "'"
                               : "expected a generator, found end of input");
    }
    Gen g;
    if (word == "mu") {
      g.kind = GenKind::Mu;
    } else if (word == "eta") {
      g.kind = GenKind::Eta;
    } else if (word == "delta") {
      g.kind = GenKind::Delta;
    } else if (word == "eps") {
      g.kind = GenKind::Eps;
    } else if (word == "swap") {
      g.kind = GenKind::Swap;
    } else if (word == "id") {
      pos_ = end;
      expect('[');
      g.kind = GenKind::Id;
      g.n = parse_count();
      expect(']');
      return std::make_shared<const Term>(g, start);
    } else if (word == "E") {
      pos_ = end;
      expect('[');
      g.kind = GenKind::Block;
      g.m = parse_count();
      expect(',');
      g.k = static_cast<surface::Genus>(parse_count());
      expect(',');
      g.n = parse_count();
      expect(']');
      return std::make_shared<const Term>(g, start);
    } else {
      fail("unknown generator '" + std::string(word) + "'");
    }
    pos_ = end;
    return std::make_shared<const Term>(g, start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse(std::string_view text) {
  TermPtr t = Parser(text).parse_all();
  arity(*t);
  return t;
}

}  // namespace cobord::diagram
