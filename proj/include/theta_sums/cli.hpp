#pragma once

#include <ostream>
#include <string_view>

#include "theta_sums/expsum.hpp"

namespace theta_sums::cli {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolations = 2;
inline constexpr int kExitInternal = 3;

// Environment variable consulted when --threads is not given.
inline constexpr const char* kThreadsEnv = "THETA_SUMS_THREADS";

/// Parses  poly := term ("+" term)* ;  term := [coeff "*"] "x" "^" exp | coeff
///
/// Whitespace between tokens is ignored and "X" is accepted for "x".
/// Coefficients are reduced mod p. Throws ParseError with kind Syntax,
/// Range (zero coefficient, exponent outside [1, p-2], bare constants) or
/// DuplicateExponent.
SparsePoly parse_poly(std::string_view text, Prime p);

// Runs the tool. Results go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Embedded acceptance fixtures; one PASS/FAIL line each.
int selftest(std::ostream& out, std::ostream& err);

}  // namespace theta_sums::cli
