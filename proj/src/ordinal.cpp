#include "tfs/ordinal.hpp"

#include <algorithm>
#include <cctype>

#include "tfs/errors.hpp"

namespace tfs {

namespace {

void check_coefficient(std::uint64_t c) {
  if (c > Ordinal::kMaxCoefficient)
    throw ResourceError("ordinal coefficient " + std::to_string(c) + " exceeds cap " +
                        std::to_string(Ordinal::kMaxCoefficient));
}

void check_depth(const Ordinal& a) {
  if (nesting_depth(a) > Ordinal::kMaxNestingDepth)
    throw ResourceError("ordinal nesting depth exceeds cap " +
                        std::to_string(Ordinal::kMaxNestingDepth));
}

}  // namespace

Ordinal::Ordinal(std::uint64_t n) {
  check_coefficient(n);
  if (n > 0) terms_.push_back(Term{Ordinal(), n});
}

Ordinal Ordinal::omega() { return omega_power(Ordinal(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coeff) {
  if (coeff == 0) return Ordinal();
  check_coefficient(coeff);
  Ordinal r;
  r.terms_.push_back(Term{exponent, coeff});
  check_depth(r);
  return r;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw DomainError("zero coefficient in ordinal term list");
    check_coefficient(terms[i].coefficient);
    if (i + 1 < terms.size() && compare(terms[i].exponent, terms[i + 1].exponent) <= 0)
      throw DomainError("ordinal term exponents not strictly decreasing");
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  check_depth(r);
  return r;
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) throw DomainError("finite_value of infinite ordinal " + format(*this));
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

bool Ordinal::operator==(const Ordinal& other) const { return terms_ == other.terms_; }

std::strong_ordering Ordinal::operator<=>(const Ordinal& other) const {
  return compare(*this, other);
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    auto c = compare(ta[i].exponent, tb[i].exponent);
    if (c != 0) return c;
    if (ta[i].coefficient != tb[i].coefficient)
      return ta[i].coefficient <=> tb[i].coefficient;
  }
  // Equal prefix: the longer term list is the larger ordinal.
  return ta.size() <=> tb.size();
}

bool is_limit(const Ordinal& a) {
  return !a.is_zero() && !a.terms().back().exponent.is_zero();
}

Ordinal successor(const Ordinal& a) { return add(a, Ordinal(1)); }

Ordinal predecessor(const Ordinal& a) {
  if (a.is_zero()) throw DomainError("predecessor of 0");
  if (is_limit(a)) throw DomainError("predecessor of limit ordinal " + format(a));
  auto terms = a.terms();
  if (terms.back().coefficient == 1)
    terms.pop_back();
  else
    terms.back().coefficient -= 1;
  return Ordinal::from_terms(std::move(terms));
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead_exp = b.terms().front().exponent;
  std::vector<Ordinal::Term> terms;
  for (const auto& t : a.terms()) {
    if (compare(t.exponent, lead_exp) > 0)
      terms.push_back(t);
    else
      break;  // absorbed by b's leading term
  }
  std::size_t kept = terms.size();
  bool merge = kept < a.terms().size() && a.terms()[kept].exponent == lead_exp;
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  if (merge) {
    std::uint64_t c = terms[kept].coefficient + a.terms()[kept].coefficient;
    check_coefficient(c);
    terms[kept].coefficient = c;
  }
  return Ordinal::from_terms(std::move(terms));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal result;
  // Left distributivity over the CNF decomposition of b.
  for (const auto& t : b.terms()) {
    Ordinal part;
    if (t.exponent.is_zero()) {
      // a * k: scale the leading coefficient, keep the tail.
      auto terms = a.terms();
      std::uint64_t c = terms[0].coefficient * t.coefficient;
      if (t.coefficient != 0 && c / t.coefficient != terms[0].coefficient)
        throw ResourceError("ordinal coefficient overflow in product");
      check_coefficient(c);
      terms[0].coefficient = c;
      part = Ordinal::from_terms(std::move(terms));
    } else {
      part = Ordinal::omega_power(add(a.terms().front().exponent, t.exponent), t.coefficient);
    }
    result = add(result, part);
  }
  return result;
}

Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
  auto cmp = compare(a, b);
  if (cmp > 0)
    throw DomainError("left_subtract: " + format(a) + " exceeds " + format(b));
  if (cmp == 0) return Ordinal();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0;
  while (i < ta.size() && i < tb.size() && ta[i] == tb[i]) ++i;
  // a is a strict prefix of b, or they first differ at position i with
  // b's term the larger one.
  std::vector<Ordinal::Term> terms(tb.begin() + static_cast<std::ptrdiff_t>(i), tb.end());
  if (i < ta.size() && i < tb.size() && ta[i].exponent == tb[i].exponent)
    terms[0].coefficient = tb[i].coefficient - ta[i].coefficient;
  return Ordinal::from_terms(std::move(terms));
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal value = parse_literal();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input after ordinal literal", pos_);
    return value;
  }

 private:
  Ordinal parse_literal() {
    Ordinal value = parse_term();
    while (true) {
      skip_ws();
      if (!match('+')) break;
      value = add(value, parse_term());
    }
    return value;
  }

  Ordinal parse_term() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected ordinal term", pos_);
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) return Ordinal(parse_nat());
    if (!match('w')) throw ParseError("expected 'w' or a natural number", pos_);
    Ordinal exponent(1);
    skip_ws();
    if (match('^')) exponent = parse_power_exponent();
    std::uint64_t coeff = 1;
    skip_ws();
    if (match('*')) {
      skip_ws();
      coeff = parse_nat();
    }
    if (coeff == 0) return Ordinal();
    return Ordinal::omega_power(exponent, coeff);
  }

  Ordinal parse_power_exponent() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected exponent after '^'", pos_);
    if (match('(')) {
      Ordinal e = parse_literal();
      skip_ws();
      if (!match(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) return Ordinal(parse_nat());
    if (match('w')) return Ordinal::omega();
    throw ParseError("expected natural number, 'w', or parenthesized literal", pos_);
  }

  std::uint64_t parse_nat() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected natural number", pos_);
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > Ordinal::kMaxCoefficient)
        throw ParseError("coefficient exceeds cap", pos_);
      ++pos_;
    }
    return value;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool match(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return Parser(text).parse(); }

std::string format(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal(1)) {
      out += '^';
      // Bare exponents are unambiguous only for naturals and w itself.
      if (t.exponent.is_finite() || t.exponent == Ordinal::omega())
        out += format(t.exponent);
      else
        out += '(' + format(t.exponent) + ')';
    }
    if (t.coefficient != 1) out += '*' + std::to_string(t.coefficient);
  }
  return out;
}

std::size_t nesting_depth(const Ordinal& a) {
  std::size_t depth = 0;
  for (const auto& t : a.terms()) depth = std::max(depth, nesting_depth(t.exponent) + 1);
  return depth;
}

}  // namespace tfs
