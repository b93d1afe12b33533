#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "liftlab/errors.hpp"

namespace liftlab {

// Every quantity that enters a verdict is an exact rational. Floats appear
// only in "display-only" renderings.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// x^k by repeated squaring, exact.
Rat rat_pow(const Rat& x, unsigned long k);

/// 2^e for signed e, exact.
Rat pow2(long e);

Rat rat_abs(const Rat& x);

/// Parse "p", "-p" or "p/q"; always canonicalizes.
Rat parse_rat(const std::string& s);

/// Canonical "p" / "p/q" rendering.
std::string rat_str(const Rat& x);

/// Display-only float rendering, never used in any verdict.
double rat_display(const Rat& x);

/// Least integer m with 2^m >= 1/eps, for eps in (0,1].
long ceil_log2_inv(const Rat& eps);

/// FNV-1a over a byte string; used for artifact checksums.
std::uint64_t fnv1a64(const void* data, std::size_t len);

/// Exact mean of a table of rationals.
Rat table_mean(const std::vector<Rat>& v);

}  // namespace liftlab
