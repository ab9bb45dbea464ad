#include "theta_sums/cyclotomic.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "theta_sums/errors.hpp"

namespace theta_sums {
namespace {

std::size_t basis_size(Prime p) { return static_cast<std::size_t>(p.order()); }

void require_same_prime(const CycInt& x, const CycInt& y) {
  if (x.prime() != y.prime()) {
    throw ModulusMismatch("cyclotomic operands over p=" +
                          std::to_string(x.prime().value()) + " and p=" +
                          std::to_string(y.prime().value()));
  }
}

}  // namespace

CycInt CycInt::zero(Prime p) {
  return CycInt(p, std::vector<mpz_class>(basis_size(p)));
}

CycInt CycInt::from_integer(Prime p, const mpz_class& n) {
  CycInt out = zero(p);
  out.coeffs_[0] = n;
  return out;
}

CycInt CycInt::from_exponent(Prime p, std::int64_t e) {
  std::vector<mpz_class> counts(static_cast<std::size_t>(p.value()));
  counts[static_cast<std::size_t>(mod_floor(e, p.value()))] = 1;
  return from_exponent_counts(p, counts);
}

CycInt CycInt::theta(Prime p) {
  CycInt out = zero(p);
  out.coeffs_[0] = 1;
  out.coeffs_[1] = -1;
  return out;
}

CycInt CycInt::from_coeffs(Prime p, std::vector<mpz_class> coeffs) {
  if (coeffs.size() != basis_size(p)) {
    throw InvalidInput("expected " + std::to_string(basis_size(p)) +
                       " coefficients, got " + std::to_string(coeffs.size()));
  }
  return CycInt(p, std::move(coeffs));
}

CycInt CycInt::from_exponent_counts(Prime p, std::span<const mpz_class> counts) {
  const std::size_t n = basis_size(p);
  if (counts.size() != n + 1) {
    throw InvalidInput("exponent counts must have length p");
  }
  // xi^(p-1) = -(1 + xi + ... + xi^(p-2)).
  const mpz_class& top = counts[n];
  std::vector<mpz_class> coeffs(n);
  for (std::size_t k = 0; k < n; ++k) coeffs[k] = counts[k] - top;
  return CycInt(p, std::move(coeffs));
}

bool CycInt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpz_class& c) { return sgn(c) == 0; });
}

mpz_class CycInt::coefficient_sum() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool operator==(const CycInt& a, const CycInt& b) {
  return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
}

CycInt cyc_add(const CycInt& x, const CycInt& y) {
  require_same_prime(x, y);
  std::vector<mpz_class> out(x.coeffs());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += y.coeffs()[k];
  return CycInt::from_coeffs(x.prime(), std::move(out));
}

CycInt cyc_neg(const CycInt& x) {
  std::vector<mpz_class> out(x.coeffs());
  for (auto& c : out) c = -c;
  return CycInt::from_coeffs(x.prime(), std::move(out));
}

CycInt cyc_sub(const CycInt& x, const CycInt& y) { return cyc_add(x, cyc_neg(y)); }

CycInt cyc_mul(const CycInt& x, const CycInt& y) {
  require_same_prime(x, y);
  const Prime p = x.prime();
  const std::size_t n = basis_size(p);
  const std::size_t pv = n + 1;
  // Schoolbook product with exponents folded mod p, then one reduction.
  std::vector<mpz_class> acc(pv);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x.coeffs()[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t e = i + j;
      if (e >= pv) e -= pv;
      acc[e] += x.coeffs()[i] * y.coeffs()[j];
    }
  }
  return CycInt::from_exponent_counts(p, acc);
}

ThetaExpansion theta_expansion(const CycInt& x) {
  const std::size_t n = x.coeffs().size();
  std::vector<mpz_class> b(n);
  // Pascal row i holds binom(i, 0..i); c_i contributes c_i * binom(i, k) to
  // every k <= i.
  std::vector<mpz_class> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      row.emplace_back(1);
      for (std::size_t k = i - 1; k >= 1; --k) row[k] += row[k - 1];
    }
    const mpz_class& c = x.coeffs()[i];
    if (sgn(c) == 0) continue;
    for (std::size_t k = 0; k <= i; ++k) b[k] += c * row[k];
  }
  for (std::size_t k = 1; k < n; k += 2) b[k] = -b[k];
  return ThetaExpansion{x.prime(), std::move(b)};
}

CycInt from_theta_expansion(const ThetaExpansion& t) {
  const std::size_t n = t.bcoeffs.size();
  if (n != basis_size(t.p)) {
    throw InvalidInput("theta expansion must have p-1 coefficients");
  }
  // (1 - xi)^k = sum_i binom(k, i) (-1)^i xi^i with i <= k <= p-2, so no
  // reduction is needed.
  std::vector<mpz_class> c(n);
  std::vector<mpz_class> row{1};
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      row.emplace_back(1);
      for (std::size_t i = k - 1; i >= 1; --i) row[i] += row[i - 1];
    }
    const mpz_class& bk = t.bcoeffs[k];
    if (sgn(bk) == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) {
      if (i % 2 == 0) {
        c[i] += bk * row[i];
      } else {
        c[i] -= bk * row[i];
      }
    }
  }
  return CycInt::from_coeffs(t.p, std::move(c));
}

std::int64_t integer_p_valuation(const mpz_class& n, std::int64_t p) {
  if (sgn(n) == 0) throw ZeroElement("p-adic valuation of 0");
  const mpz_class prime = static_cast<long>(p);
  mpz_class rest = n;
  std::int64_t v = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), prime.get_mpz_t()) != 0) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
    ++v;
  }
  return v;
}

// theta^(p-1) = p * unit, so the term b_k theta^k has valuation
// k + (p-1) v_p(b_k). For distinct k in [0, p-2] these are pairwise distinct
// mod p-1, hence pairwise distinct, and the valuation of the sum is the
// minimum over its terms.
Valuation theta_valuation(const CycInt& x) {
  if (x.is_zero()) return Valuation::infinite();
  const std::int64_t p = x.prime().value();
  const ThetaExpansion t = theta_expansion(x);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t k = 0; k < t.bcoeffs.size(); ++k) {
    const std::int64_t kk = static_cast<std::int64_t>(k);
    // Terms with k >= best cannot win.
    if (kk >= best) break;
    if (sgn(t.bcoeffs[k]) == 0) continue;
    best = std::min(best, kk + (p - 1) * integer_p_valuation(t.bcoeffs[k], p));
  }
  return Valuation::finite(best);
}

Valuation theta_valuation_oracle(const CycInt& x) {
  const Prime p = x.prime();
  const mpz_class pz = static_cast<long>(p.value());
  // prod_{i=1}^{p-1} (1 - xi^i) = p, so 1/theta = prod_{i=2}^{p-1}(1 - xi^i) / p.
  CycInt cofactor = CycInt::from_integer(p, 1);
  for (std::int64_t i = 2; i < p.value(); ++i) {
    cofactor = cofactor * (CycInt::from_integer(p, 1) - CycInt::from_exponent(p, i));
  }

  CycInt cur = x;
  std::int64_t count = 0;
  while (!cur.is_zero()) {
    if (!mpz_divisible_p(cur.coefficient_sum().get_mpz_t(), pz.get_mpz_t())) {
      return Valuation::finite(count);
    }
    const CycInt scaled = cur * cofactor;
    std::vector<mpz_class> q(scaled.coeffs());
    for (auto& c : q) {
      if (!mpz_divisible_p(c.get_mpz_t(), pz.get_mpz_t())) {
        throw InexactDivision("theta divides the element but p does not divide "
                              "the scaled coefficients");
      }
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
    }
    cur = CycInt::from_coeffs(p, std::move(q));
    ++count;
  }
  return Valuation::infinite();
}

Rational p_adic_valuation(const CycInt& x) {
  const Valuation v = theta_valuation(x);
  if (v.is_infinite()) throw ZeroElement("p-adic valuation of the zero element");
  return Rational::make(v.value(), x.prime().order());
}

}  // namespace theta_sums
