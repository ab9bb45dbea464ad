#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "theta_sums/modarith.hpp"
#include "theta_sums/valuation.hpp"

namespace theta_sums {

/// Exact element of Z[xi], xi a primitive p-th root of unity.
///
/// Stored in the power basis xi^0 .. xi^(p-2). Every operation reduces
/// xi^(p-1) through 1 + xi + ... + xi^(p-1) = 0 immediately, so two values
/// are equal iff their coefficient vectors are equal.
class CycInt {
 public:
  static CycInt zero(Prime p);
  static CycInt from_integer(Prime p, const mpz_class& n);
  // xi^(e mod p).
  static CycInt from_exponent(Prime p, std::int64_t e);
  // theta = 1 - xi.
  static CycInt theta(Prime p);
  // Takes a length p-1 vector in the reduced basis.
  static CycInt from_coeffs(Prime p, std::vector<mpz_class> coeffs);
  // Sum of counts[e] * xi^e over e in [0, p-1]; counts must have length p.
  static CycInt from_exponent_counts(Prime p, std::span<const mpz_class> counts);

  Prime prime() const noexcept { return p_; }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  // Image under xi -> 1, read mod p this is the residue mod theta.
  mpz_class coefficient_sum() const;

  friend bool operator==(const CycInt& a, const CycInt& b);

 private:
  CycInt(Prime p, std::vector<mpz_class> coeffs)
      : p_(p), coeffs_(std::move(coeffs)) {}

  Prime p_;
  std::vector<mpz_class> coeffs_;
};

// Ring operations; mixed moduli throw ModulusMismatch.
CycInt cyc_add(const CycInt& x, const CycInt& y);
CycInt cyc_neg(const CycInt& x);
CycInt cyc_sub(const CycInt& x, const CycInt& y);
CycInt cyc_mul(const CycInt& x, const CycInt& y);

inline CycInt operator+(const CycInt& x, const CycInt& y) { return cyc_add(x, y); }
inline CycInt operator-(const CycInt& x, const CycInt& y) { return cyc_sub(x, y); }
inline CycInt operator-(const CycInt& x) { return cyc_neg(x); }
inline CycInt operator*(const CycInt& x, const CycInt& y) { return cyc_mul(x, y); }

/// Coordinates of an element in the basis theta^0 .. theta^(p-2).
struct ThetaExpansion {
  Prime p;
  std::vector<mpz_class> bcoeffs;
};

// b_k = (-1)^k * sum_{i >= k} c_i * binom(i, k), from xi = 1 - theta.
ThetaExpansion theta_expansion(const CycInt& x);
// Inverse change of basis: sum_k b_k (1 - xi)^k.
CycInt from_theta_expansion(const ThetaExpansion& t);

// Ordinary p-adic valuation of a nonzero integer.
std::int64_t integer_p_valuation(const mpz_class& n, std::int64_t p);

Valuation theta_valuation(const CycInt& x);

// Same valuation by repeated exact division by theta. Independent of the
// change of basis used by theta_valuation.
Valuation theta_valuation_oracle(const CycInt& x);

// nu_theta(x) / (p - 1). Throws ZeroElement for x == 0.
Rational p_adic_valuation(const CycInt& x);

}  // namespace theta_sums
