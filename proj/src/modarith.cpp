#include "cubicforms/modarith.hpp"

#include <stdexcept>

namespace cubicforms {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    if (m == 1)
        return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1)
            r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
    a %= p;
    if (a == 0)
        throw std::invalid_argument("inverse of zero modulo p");
    return powmod(a, p - 2, p);
}

std::uint64_t mod_reduce(const Int& x, std::uint64_t m)
{
    Int r = x % Int(m);
    if (r < 0)
        r += Int(m);
    return r.convert_to<std::uint64_t>();
}

int jacobi_symbol(std::uint64_t a, std::uint64_t n)
{
    if (n == 0 || n % 2 == 0)
        throw std::invalid_argument("Jacobi symbol requires odd positive n");
    a %= n;
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::uint64_t r = n % 8;
            if (r == 3 || r == 5)
                t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

int legendre(const Int& x, std::uint64_t p)
{
    return jacobi_symbol(mod_reduce(x, p), p);
}

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0)
            return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // Deterministic base set for 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

std::uint64_t sqrt_mod_p(const Int& n, std::uint64_t p)
{
    if (p == 2 || !is_prime_u64(p))
        throw std::invalid_argument("sqrt_mod_p requires an odd prime");
    std::uint64_t a = mod_reduce(n, p);
    if (a == 0)
        return 0;
    if (jacobi_symbol(a, p) != 1)
        throw std::invalid_argument("sqrt_mod_p: nonresidue");

    std::uint64_t r;
    if (p % 4 == 3) {
        r = powmod(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks.
        std::uint64_t q = p - 1;
        int s = 0;
        while (q % 2 == 0) {
            q /= 2;
            ++s;
        }
        std::uint64_t z = 2;
        while (jacobi_symbol(z, p) != -1)
            ++z;
        std::uint64_t m = s;
        std::uint64_t c = powmod(z, q, p);
        std::uint64_t t = powmod(a, q, p);
        r = powmod(a, (q + 1) / 2, p);
        while (t != 1) {
            std::uint64_t i = 0;
            std::uint64_t tt = t;
            while (tt != 1) {
                tt = mulmod(tt, tt, p);
                ++i;
            }
            std::uint64_t b = c;
            for (std::uint64_t k = 0; k + i + 1 < m; ++k)
                b = mulmod(b, b, p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
    }
    if (r > p - r)
        r = p - r;
    return r;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    if (hi < 2 || hi < lo)
        return out;
    std::vector<bool> sieve(hi + 1, true);
    sieve[0] = sieve[1] = false;
    for (std::uint64_t i = 2; i * i <= hi; ++i)
        if (sieve[i])
            for (std::uint64_t j = i * i; j <= hi; j += i)
                sieve[j] = false;
    for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i)
        if (sieve[i])
            out.push_back(i);
    return out;
}

} // namespace cubicforms
