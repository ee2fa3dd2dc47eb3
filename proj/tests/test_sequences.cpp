#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubicforms/modarith.hpp"
#include "cubicforms/sequences.hpp"

#include <random>
#include <vector>

using namespace cubicforms;

namespace {

std::mt19937_64 rng(246810);

long long rnd(long long lo, long long hi)
{
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

// Naive modular iteration, the oracle for the matrix-power path.
std::uint64_t u_naive(long long a1, long long a2, long long a3,
                      std::uint64_t n, std::uint64_t p)
{
    std::uint64_t c1 = mod_reduce(Int(-a1), p), c2 = mod_reduce(Int(-a2), p),
                  c3 = mod_reduce(Int(-a3), p);
    std::uint64_t t0 = 1 % p, t1 = c1,
                  t2 = mod_reduce(Int(a1) * a1 - a2, p);
    if (n == 0) return t0;
    if (n == 1) return t1;
    for (std::uint64_t i = 2; i < n; ++i) {
        std::uint64_t t3 = addmod(addmod(mulmod(c1, t2, p), mulmod(c2, t1, p), p),
                                  mulmod(c3, t0, p), p);
        t0 = t1; t1 = t2; t2 = t3;
    }
    return t2;
}

std::uint64_t s_naive(long long a1, long long a2, long long a3,
                      std::uint64_t n, std::uint64_t p)
{
    std::uint64_t c1 = mod_reduce(Int(-a1), p), c2 = mod_reduce(Int(-a2), p),
                  c3 = mod_reduce(Int(-a3), p);
    std::uint64_t t0 = 3 % p, t1 = mod_reduce(Int(-a1), p),
                  t2 = mod_reduce(Int(a1) * a1 - 2 * a2, p);
    if (n == 0) return t0;
    if (n == 1) return t1;
    for (std::uint64_t i = 2; i < n; ++i) {
        std::uint64_t t3 = addmod(addmod(mulmod(c1, t2, p), mulmod(c2, t1, p), p),
                                  mulmod(c3, t0, p), p);
        t0 = t1; t1 = t2; t2 = t3;
    }
    return t2;
}

} // namespace

TEST_CASE("initial values and closed forms")
{
    // u_3 = -a1^3 + 2 a1 a2 - a3
    CHECK(u_exact(Int(0), Int(-1), Int(2), 3) == -2);
    CHECK(u_mod(Int(0), Int(-1), Int(2), 3, 101) == 101 - 2);
    for (int i = 0; i < 50; ++i) {
        Int a1 = rnd(-9, 9), a2 = rnd(-9, 9), a3 = rnd(-9, 9);
        CHECK(u_exact(a1, a2, a3, 2) == a1 * a1 - a2);
        CHECK(u_exact(a1, a2, a3, 3) == -a1 * a1 * a1 + 2 * a1 * a2 - a3);
        CHECK(s_exact(a1, a2, a3, 0) == 3);
        CHECK(s_exact(a1, a2, a3, 1) == -a1);
        CHECK(s_exact(a1, a2, a3, 2) == a1 * a1 - 2 * a2);
    }
    CHECK(s_exact(Int(0), Int(-1), Int(2), 3) == -6);
}

TEST_CASE("pinned criterion residues at p = 31")
{
    CHECK(u_mod(Int(0), Int(-1), Int(2), 29, 31) == 0);
    CHECK(u_naive(0, -1, 2, 29, 31) == 0);
    CHECK(s_mod(Int(0), Int(-1), Int(2), 32, 31) == 2);
    CHECK(s_naive(0, -1, 2, 32, 31) == 2);
}

TEST_CASE("lucas pinned values")
{
    auto [u0, v0] = lucas_exact(Int(18), Int(3), 0);
    CHECK(u0 == 0);
    CHECK(v0 == 2);

    auto [u3, v3] = lucas_exact(Int(18), Int(3), 3);
    CHECK(u3 == 321);
    auto [u2, v2] = lucas_exact(Int(18), Int(3), 2);
    CHECK(v2 == 318);

    auto [w3, x3] = lucas_exact(Int(-54), Int(27), 3);
    CHECK(w3 == 2889);
    CHECK(w3 == 9 * u3);

    auto lm = lucas_mod(Int(18), Int(3), 3, 1009);
    CHECK(lm.u == 321);
    auto lm2 = lucas_mod(Int(18), Int(3), 2, 1009);
    CHECK(lm2.v == 318);
}

TEST_CASE("U_n(-54,27) = (-3)^{n-1} U_n(18,3) exactly")
{
    Int pw = 1; // (-3)^{n-1}
    for (std::uint64_t n = 1; n <= 50; ++n) {
        auto [ua, va] = lucas_exact(Int(-54), Int(27), n);
        auto [ub, vb] = lucas_exact(Int(18), Int(3), n);
        CHECK(ua == pw * ub);
        pw *= -3;
    }
}

TEST_CASE("matrix power equals naive iteration")
{
    auto primes = primes_in_range(3, 100);
    for (int trial = 0; trial < 60; ++trial) {
        long long a1 = rnd(-20, 20), a2 = rnd(-20, 20), a3 = rnd(-20, 20);
        std::uint64_t p = primes[rng() % primes.size()];
        for (std::uint64_t n = 0; n <= 200; ++n) {
            CHECK(u_mod(Int(a1), Int(a2), Int(a3), n, p) == u_naive(a1, a2, a3, n, p));
            CHECK(s_mod(Int(a1), Int(a2), Int(a3), n, p) == s_naive(a1, a2, a3, n, p));
        }
    }
    // Lucas: matrix power vs exact iteration reduced mod p
    for (int trial = 0; trial < 40; ++trial) {
        long long b = rnd(-30, 30), c = rnd(-30, 30);
        std::uint64_t p = primes[rng() % primes.size()];
        for (std::uint64_t n = 0; n <= 120; ++n) {
            auto [ue, ve] = lucas_exact(Int(b), Int(c), n);
            auto lm = lucas_mod(Int(b), Int(c), n, p);
            CHECK(lm.u == mod_reduce(ue, p));
            CHECK(lm.v == mod_reduce(ve, p));
        }
    }
}

TEST_CASE("s_n equals the Newton power sums")
{
    for (int trial = 0; trial < 60; ++trial) {
        Int a1 = rnd(-8, 8), a2 = rnd(-8, 8), a3 = rnd(-8, 8);
        // e1 = -a1, e2 = a2, e3 = -a3; p_k = e1 p_{k-1} - e2 p_{k-2} + e3 p_{k-3},
        // seeded by p_1 = e1, p_2 = e1 p_1 - 2 e2, p_3 = e1 p_2 - e2 p_1 + 3 e3.
        Int e1 = -a1, e2 = a2, e3 = -a3;
        std::vector<Int> ps{3, e1, e1 * e1 - 2 * e2};
        for (int k = 3; k <= 20; ++k) {
            Int next = e1 * ps[k - 1] - e2 * ps[k - 2] +
                       (k == 3 ? Int(3 * e3) : Int(e3 * ps[k - 3]));
            ps.push_back(next);
        }
        for (std::uint64_t n = 0; n <= 20; ++n)
            CHECK(s_exact(a1, a2, a3, n) == ps[n]);
    }
}

TEST_CASE("binomial sums")
{
    CHECK(binomial_sum(Int(-54), Int(27), 11) == 7);
    CHECK(binomial_sum(Int(-54), Int(27), 31) == 0);
    CHECK(binomial_sum(Int(0), Int(5), 7) == 0); // r = 0
    CHECK_THROWS_AS(binomial_sum(Int(1), Int(7), 7), std::invalid_argument);
    CHECK_THROWS_AS(binomial_sum(Int(1), Int(1), 3), std::invalid_argument);

    // direct-summation oracle with exact binomials
    for (int trial = 0; trial < 40; ++trial) {
        long long P0 = rnd(-50, 50), Q0 = rnd(-50, 50);
        std::uint64_t p = 5 + 2 * static_cast<std::uint64_t>(rnd(0, 40));
        if (!is_prime_u64(p) || Q0 == 0 || mod_reduce(Int(27) * Q0, p) == 0)
            continue;
        Int r_num = Int(P0) * P0;
        std::uint64_t r = mulmod(mod_reduce(r_num, p),
                                 inv_mod(mod_reduce(Int(27) * Q0, p), p), p);
        Int binom = 1;
        std::uint64_t expect = 0, rp = 1 % p;
        for (std::uint64_t k = 1; k <= p / 3; ++k) {
            // C(3k, k) exactly
            binom = 1;
            for (std::uint64_t i = 0; i < k; ++i)
                binom = binom * Int(3 * k - i) / Int(i + 1);
            rp = mulmod(rp, r, p);
            expect = addmod(expect, mulmod(mod_reduce(binom, p), rp, p), p);
        }
        CHECK(binomial_sum(Int(P0), Int(Q0), p) == expect);
    }
}
