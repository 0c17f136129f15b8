#include "parinv/numeric.hpp"

#include <stdexcept>

#include "parinv/errors.hpp"

namespace parinv {

bool is_integer(const Rat& x) {
    Rat c(x);
    c.canonicalize();
    return c.get_den() == 1;
}

Int to_integer(const Rat& x) {
    Rat c(x);
    c.canonicalize();
    if (c.get_den() != 1) {
        throw ConsistencyError("expected integer, got " + c.get_str());
    }
    return c.get_num();
}

long long to_longlong(const Int& x) {
    if (!x.fits_slong_p()) {
        throw std::overflow_error("integer too large for long long: " + x.get_str());
    }
    return x.get_si();
}

Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

bool is_prime_power(long q) {
    if (q < 2) return false;
    for (long p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    }
    return true;  // q itself prime
}

long mod_reduce(long x, long m) {
    if (m <= 0) throw std::invalid_argument("modulus must be positive");
    long r = x % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace parinv
