#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "theta_sums/cyclotomic.hpp"
#include "theta_sums/modarith.hpp"
#include "theta_sums/valuation.hpp"

namespace theta_sums {

struct Term {
  std::int64_t coeff;     // in [1, p-1]
  std::int64_t exponent;  // in [1, p-2]

  friend bool operator==(const Term&, const Term&) = default;
};

/// F(X) = sum a_i X^(d_i) over F_p, nonzero coefficients, distinct exponents,
/// terms sorted by exponent.
class SparsePoly {
 public:
  // Validates ranges and distinctness, then sorts. Throws InvalidInput.
  SparsePoly(Prime p, std::vector<Term> terms);

  static SparsePoly binomial(Prime p, std::int64_t a, std::int64_t d1,
                             std::int64_t b, std::int64_t d2);

  Prime prime() const noexcept { return p_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  // F(x) mod p.
  std::int64_t evaluate(std::int64_t x) const;

  // "3*x^2 + 7*x^3", re-parseable by parse_poly.
  std::string to_string() const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  Prime p_;
  std::vector<Term> terms_;
};

// S_p(F) = sum_{x in F_p} xi^(F(x)), i.e. the character phi(t) = xi^t.
CycInt exp_sum(const SparsePoly& f);

Valuation sum_valuation(const SparsePoly& f);

// Scales every coefficient by c; realizes the character phi_c(t) = xi^(ct).
SparsePoly twist(const SparsePoly& f, std::int64_t c);

}  // namespace theta_sums
