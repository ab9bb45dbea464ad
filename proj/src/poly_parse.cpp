#include <cctype>
#include <cstdint>
#include <limits>
#include <set>
#include <string>

#include "theta_sums/cli.hpp"
#include "theta_sums/errors.hpp"

namespace theta_sums::cli {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, Prime p) : text_(text), p_(p) {}

  SparsePoly parse() {
    std::vector<Term> terms;
    std::set<std::int64_t> seen;
    for (;;) {
      const std::size_t term_start = skip_ws();
      const Term t = term();
      if (!seen.insert(t.exponent).second) {
        throw ParseError(ParseError::Kind::DuplicateExponent, term_start,
                         "duplicate exponent " + std::to_string(t.exponent) +
                             " at position " + std::to_string(term_start));
      }
      terms.push_back(t);
      skip_ws();
      if (at_end()) break;
      expect('+');
    }
    return SparsePoly(p_, std::move(terms));
  }

 private:
  Term term() {
    const std::size_t start = skip_ws();
    std::int64_t coeff = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      skip_ws();
      if (at_end() || peek() == '+') {
        throw ParseError(ParseError::Kind::Range, start,
                         "constant term at position " + std::to_string(start) +
                             " has exponent 0, outside [1, p-2]");
      }
      expect('*');
      skip_ws();
    }
    if (at_end() || (peek() != 'x' && peek() != 'X')) {
      syntax("expected 'x'");
    }
    ++pos_;
    expect('^');
    skip_ws();
    const std::size_t exp_pos = pos_;
    const std::int64_t exponent = number();

    const std::int64_t p = p_.value();
    const std::int64_t reduced = coeff % p;
    if (reduced == 0) {
      throw ParseError(ParseError::Kind::Range, start,
                       "coefficient at position " + std::to_string(start) +
                           " is 0 mod " + std::to_string(p));
    }
    if (exponent < 1 || exponent > p - 2) {
      throw ParseError(ParseError::Kind::Range, exp_pos,
                       "exponent " + std::to_string(exponent) + " at position " +
                           std::to_string(exp_pos) + " outside [1, " +
                           std::to_string(p - 2) + "]");
    }
    return Term{reduced, exponent};
  }

  std::int64_t number() {
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      syntax("expected a decimal integer");
    }
    std::int64_t v = 0;
    constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max() / 10 - 9;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > kMax) {
        throw ParseError(ParseError::Kind::Range, start,
                         "integer at position " + std::to_string(start) +
                             " is too large");
      }
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) syntax(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void syntax(const std::string& what) const {
    std::string found = at_end() ? "end of input" : std::string("'") + peek() + "'";
    throw ParseError(ParseError::Kind::Syntax, pos_,
                     what + " at position " + std::to_string(pos_) + ", found " +
                         found);
  }

  std::size_t skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    return pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  Prime p_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, Prime p) {
  return PolyParser(text, p).parse();
}

}  // namespace theta_sums::cli
