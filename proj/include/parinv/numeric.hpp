#pragma once

#include <gmpxx.h>

#include <string>

namespace parinv {

// All exact arithmetic in this project runs on GMP integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

bool is_integer(const Rat& x);

// Throws ConsistencyError if x is not an integer.
Int to_integer(const Rat& x);

long long to_longlong(const Int& x);

// gmpxx has no long long constructor; this project targets LP64.
static_assert(sizeof(long) >= 8, "64-bit long required");
inline Int make_int(long long x) { return Int(static_cast<long>(x)); }

Int factorial(unsigned n);

Int pow_int(const Int& base, unsigned long e);

// q = p^k for a prime p and k >= 1.
bool is_prime_power(long q);

// Canonical non-negative residue.
long mod_reduce(long x, long m);

}  // namespace parinv
