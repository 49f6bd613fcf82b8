#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wg {

// Exact scalar field: arbitrary-precision rationals, canonical form
// (denominator > 0, reduced) maintained by the backend.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

Int factorial(long n);
Int binomial(long n, long k);

// x(x-1)...(x-m+1), m factors.
Int falling_factorial(const Int& x, long m);

Int int_pow(const Int& base, long exp);

// The shifted double factorial x!! = (x-1)(x-3)(x-5)..., with the product
// ending at 1 or 2; empty product (x <= 1) gives 1. Note this is NOT the
// usual convention: here 4!! = 3, 5!! = 8, 6!! = 15.
Int shifted_dfact(long x);

// Catalan number binom(2k,k)/(k+1).
Int catalan(long k);

// "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& q);
Rat parse_rat(const std::string& s);

// floor(log2 |x|) + 1 for x != 0; 0 for x == 0.
long bit_length(const Int& x);

} // namespace wg
