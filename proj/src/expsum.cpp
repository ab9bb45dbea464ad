#include "theta_sums/expsum.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "theta_sums/errors.hpp"

namespace theta_sums {

SparsePoly::SparsePoly(Prime p, std::vector<Term> terms)
    : p_(p), terms_(std::move(terms)) {
  if (terms_.empty()) throw InvalidInput("polynomial has no terms");
  for (const Term& t : terms_) {
    if (t.coeff < 1 || t.coeff > p.value() - 1) {
      throw InvalidInput("coefficient " + std::to_string(t.coeff) +
                         " outside [1, p-1]");
    }
    if (t.exponent < 1 || t.exponent > p.value() - 2) {
      throw InvalidInput("exponent " + std::to_string(t.exponent) +
                         " outside [1, p-2]");
    }
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  const auto dup = std::adjacent_find(
      terms_.begin(), terms_.end(),
      [](const Term& a, const Term& b) { return a.exponent == b.exponent; });
  if (dup != terms_.end()) {
    throw InvalidInput("duplicate exponent " + std::to_string(dup->exponent));
  }
}

SparsePoly SparsePoly::binomial(Prime p, std::int64_t a, std::int64_t d1,
                                std::int64_t b, std::int64_t d2) {
  return SparsePoly(p, {Term{a, d1}, Term{b, d2}});
}

std::int64_t SparsePoly::evaluate(std::int64_t x) const {
  const std::int64_t p = p_.value();
  std::int64_t acc = 0;
  for (const Term& t : terms_) {
    acc = (acc + t.coeff * pow_mod(x, t.exponent, p)) % p;
  }
  return acc;
}

std::string SparsePoly::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) os << " + ";
    os << terms_[i].coeff << "*x^" << terms_[i].exponent;
  }
  return os.str();
}

CycInt exp_sum(const SparsePoly& f) {
  const Prime p = f.prime();
  // Accumulate how often each exponent F(x) occurs, convert once.
  std::vector<mpz_class> counts(static_cast<std::size_t>(p.value()));
  std::int64_t visited = 0;
  for (std::int64_t x = 0; x < p.value(); ++x) {
    counts[static_cast<std::size_t>(f.evaluate(x))] += 1;
    ++visited;
  }
  assert(visited == p.value());
  (void)visited;
  return CycInt::from_exponent_counts(p, counts);
}

Valuation sum_valuation(const SparsePoly& f) { return theta_valuation(exp_sum(f)); }

SparsePoly twist(const SparsePoly& f, std::int64_t c) {
  const std::int64_t p = f.prime().value();
  if (c < 1 || c > p - 1) throw InvalidInput("twist factor outside [1, p-1]");
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const Term& t : f.terms()) out.push_back(Term{c * t.coeff % p, t.exponent});
  return SparsePoly(f.prime(), std::move(out));
}

}  // namespace theta_sums
