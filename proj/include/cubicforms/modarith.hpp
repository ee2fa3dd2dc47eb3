#ifndef CUBICFORMS_MODARITH_HPP
#define CUBICFORMS_MODARITH_HPP

#include "cubicforms/integer.hpp"

#include <cstdint>
#include <vector>

namespace cubicforms {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    a %= m; b %= m;
    std::uint64_t s = a + b;
    if (s < a || s >= m)
        s -= m;
    return s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    a %= m; b %= m;
    return a >= b ? a - b : a + m - b;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Inverse of a modulo prime p; throws if p | a.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

// Reduction of an arbitrary-precision integer into [0, m).
std::uint64_t mod_reduce(const Int& x, std::uint64_t m);

// Jacobi symbol (a/n) for odd n > 0, computed by the binary algorithm
// (quadratic reciprocity, no factoring).
int jacobi_symbol(std::uint64_t a, std::uint64_t n);

// Legendre symbol (x/p) for an odd prime p.
int legendre(const Int& x, std::uint64_t p);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Tonelli-Shanks: r with r*r = n (mod p), 0 <= r <= p-r (the smaller root).
// Returns 0 when p | n; throws when n is a nonresidue.
std::uint64_t sqrt_mod_p(const Int& n, std::uint64_t p);

// Primes in [lo, hi] by sieve.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

} // namespace cubicforms

#endif
