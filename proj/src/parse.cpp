#include "pfister/parse.hpp"

#include <algorithm>
#include <cctype>

#include "pfister/error.hpp"

namespace pfister {

namespace {

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

  FieldElement expr() {
    FieldElement acc = term();
    while (peek() == '+' || peek() == '-') {
      ++pos_;
      acc += term();
    }
    return acc;
  }

  QuadraticForm form() {
    QuadraticForm acc = form_term();
    while (true) {
      skip_ws();
      if (s_.substr(pos_, 3) != "_|_") break;
      pos_ += 3;
      acc = orth_sum(acc, form_term());
    }
    return acc;
  }

  QPfisterSymbol symbol() {
    expect('(');
    expect('(');
    auto entries = list(')');
    expect(')');
    expect(')');
    return QPfisterSymbol(std::move(entries));
  }

  PfisterForm pfister() {
    expect('[');
    expect('[');
    auto entries = list(']');
    expect(']');
    expect(']');
    if (entries.empty()) fail("empty Pfister form");
    PfisterForm p{{entries.begin(), entries.end() - 1}, entries.back()};
    return p;
  }

  SymbolSum symbol_sum(std::size_t fold) {
    if (peek() == '0') {
      ++pos_;
      return SymbolSum(fold);
    }
    QPfisterSymbol first = symbol();
    SymbolSum sum(first.fold());
    sum += first;
    while (peek() == '+') {
      ++pos_;
      sum += symbol();
    }
    return sum;
  }

  void finish() {
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  char peek2() {
    skip_ws();
    return pos_ + 1 < s_.size() ? s_[pos_ + 1] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::vector<FieldElement> list(char close) {
    std::vector<FieldElement> out;
    if (peek() == close) return out;
    out.push_back(expr());
    while (peek() == ',') {
      ++pos_;
      out.push_back(expr());
    }
    return out;
  }

  FieldElement term() {
    FieldElement acc = factor();
    while (peek() == '*' || peek() == '/') {
      const char op = s_[pos_++];
      FieldElement rhs = factor();
      if (op == '*') {
        acc *= rhs;
      } else {
        if (rhs.is_zero()) fail("division by zero");
        acc = acc / rhs;
      }
    }
    return acc;
  }

  FieldElement factor() {
    FieldElement base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (neg && base.is_zero()) fail("negative power of zero");
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  FieldElement primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      FieldElement e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return FieldElement::variable(ring_, *idx);
    }
    fail("expected an element");
  }

  FieldElement number() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    if (s_.substr(pos_, 2) == "0x" || s_.substr(pos_, 2) == "0X") {
      pos_ += 2;
      const std::size_t digits = pos_;
      while (pos_ < s_.size() && std::isxdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 16 + static_cast<std::uint64_t>(std::stoi(std::string(1, s_[pos_]), nullptr, 16));
        if (v > 0xFFFFFFFFull) fail("literal too large");
        ++pos_;
      }
      if (digits == pos_) fail("expected hex digits");
    } else {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 16 + static_cast<std::uint64_t>(s_[pos_] - '0');
        if (v > 0xFFFFFFFFull) fail("literal too large");
        ++pos_;
      }
    }
    if (!ring_->field.contains(static_cast<std::uint32_t>(v))) {
      pos_ = start;
      fail("coefficient outside " + ring_->field.name());
    }
    return FieldElement::constant(ring_, static_cast<std::uint32_t>(v));
  }

  QuadraticForm form_term() {
    const char c = peek();
    if (c == '<') {
      ++pos_;
      const bool pfister_prefix = peek() == '<';
      if (pfister_prefix) ++pos_;
      auto entries = list('>');
      expect('>');
      if (pfister_prefix) expect('>');
      if (peek() == '*') {
        ++pos_;
        QuadraticForm rest = form_term();
        const BilinearDiag b = pfister_prefix ? BilinearDiag::pfister(entries, ring_) : BilinearDiag(entries);
        return tensor_bilinear(b, rest);
      }
      if (pfister_prefix) fail("bilinear Pfister form must be followed by '*'");
      if (entries.empty()) fail("empty diagonal form");
      std::vector<Block> blocks;
      for (auto& e : entries) blocks.push_back(UnaryBlock{e});
      return QuadraticForm(std::move(blocks));
    }
    if (c == '[') {
      if (peek2() == '[') return expand(pfister());
      ++pos_;
      FieldElement a = expr();
      expect(',');
      FieldElement b = expr();
      expect(']');
      return QuadraticForm::binary(std::move(a), std::move(b));
    }
    if (c == '(' && peek2() == '(') return expand(symbol());
    if (c == '\0') fail("expected a form");
    // Scalar prefix "c*term"; the product ends at the first form term.
    FieldElement k = factor();
    while (peek() == '*') {
      ++pos_;
      const char d = peek();
      if (d == '<' || d == '[' || (d == '(' && peek2() == '(')) {
        if (k.is_zero()) fail("zero scalar");
        return scale(k, form_term());
      }
      k *= factor();
    }
    fail("expected '*' and a form");
  }

  std::string_view s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_element(std::string_view text, const RingPtr& ring) {
  Parser p(text, ring);
  FieldElement e = p.expr();
  p.finish();
  return e;
}

QuadraticForm parse_form(std::string_view text, const RingPtr& ring) {
  Parser p(text, ring);
  QuadraticForm f = p.form();
  p.finish();
  return f;
}

QPfisterSymbol parse_symbol(std::string_view text, const RingPtr& ring) {
  Parser p(text, ring);
  QPfisterSymbol s = p.symbol();
  p.finish();
  return s;
}

SymbolSum parse_symbol_sum(std::string_view text, const RingPtr& ring, std::size_t fold) {
  Parser p(text, ring);
  SymbolSum s = p.symbol_sum(fold);
  p.finish();
  return s;
}

PfisterForm parse_pfister(std::string_view text, const RingPtr& ring) {
  Parser p(text, ring);
  PfisterForm f = p.pfister();
  p.finish();
  return f;
}

std::vector<std::string> collect_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Skip numeric literals, including the letters of a hex literal.
      ++i;
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string name(text.substr(start, i - start));
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace pfister
