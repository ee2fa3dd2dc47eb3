#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubicforms/cubic_symbol.hpp"
#include "cubicforms/integer.hpp"
#include "cubicforms/modarith.hpp"

#include <random>
#include <vector>

using namespace cubicforms;

namespace {

EisensteinInt eis(long long a, long long b) { return {Int(a), Int(b)}; }

std::mt19937_64 rng(775533);

long long rnd(long long lo, long long hi)
{
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

// Primary primes of norm up to `bound`: split primes p = 1 (mod 3) give
// a + b*omega of norm p; inert rational primes q = 2 (mod 3) stay prime.
std::vector<EisensteinInt> primary_primes_up_to_norm(std::uint64_t bound)
{
    std::vector<EisensteinInt> out;
    for (std::uint64_t p : primes_in_range(2, bound)) {
        if (p % 3 == 1) {
            bool found = false;
            long long lim = static_cast<long long>(isqrt(Int(4 * p / 3)).convert_to<long long>()) + 1;
            for (long long a = -lim; a <= lim && !found; ++a)
                for (long long b = -lim; b <= lim && !found; ++b)
                    if (norm(eis(a, b)) == Int(p)) {
                        out.push_back(primary_associate(eis(a, b)));
                        found = true;
                    }
            REQUIRE(found);
        } else if (p % 3 == 2 && p * p <= bound) {
            out.push_back(eis(static_cast<long long>(p), 0));
        }
    }
    return out;
}

} // namespace

TEST_CASE("symbol value group")
{
    CHECK(SymbolValue::Omega * SymbolValue::Omega == SymbolValue::OmegaSq);
    CHECK(SymbolValue::Omega * SymbolValue::OmegaSq == SymbolValue::One);
    CHECK(SymbolValue::Zero * SymbolValue::Omega == SymbolValue::Zero);
    CHECK(sym_inv(SymbolValue::Omega) == SymbolValue::OmegaSq);
    CHECK(sym_pow(SymbolValue::OmegaSq, 3) == SymbolValue::One);
}

TEST_CASE("pinned symbol values")
{
    // ((-27 - 3*5(1+2w))/17) = w
    CHECK(cubic_jacobi(eis(-42, -30), eis(17, 0)) == SymbolValue::Omega);
    // ((-27 - 3*(-6)(1+2w))/31) = 1
    CHECK(cubic_jacobi(eis(-9, 36), eis(31, 0)) == SymbolValue::One);
    // ((1+2w)/(2+3w)) = w^{b/3} = w
    CHECK(cubic_jacobi(eis(1, 2), eis(2, 3)) == SymbolValue::Omega);
    // trivial denominators
    CHECK(cubic_jacobi(eis(5, 7), eis(1, 0)) == SymbolValue::One);
    CHECK(cubic_jacobi(eis(5, 7), eis(-1, 0)) == SymbolValue::One);
    CHECK(cubic_jacobi(eis(0, 0), eis(1, 0)) == SymbolValue::One);
}

TEST_CASE("rejected denominators")
{
    CHECK_THROWS_AS(cubic_jacobi(eis(1, 1), eis(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(cubic_jacobi(eis(1, 1), eis(3, 0)), std::invalid_argument);
    CHECK_THROWS_AS(cubic_jacobi(eis(1, 1), eis(1, -1)), std::invalid_argument);
    CHECK_THROWS_AS(cubic_jacobi(eis(1, 1), eis(1, 2)), std::invalid_argument);
    // non-rational unit
    CHECK_THROWS_AS(cubic_jacobi(eis(1, 1), eis(0, 1)), std::invalid_argument);
    // coprime to 1-omega but not an admissible associate
    CHECK_THROWS_AS(cubic_jacobi(eis(1, 1), eis(3, 1)), std::invalid_argument);
}

TEST_CASE("oracle pinned values")
{
    // N(2+3w) = 7, 2^2 = 4 = w under w -> 4 (mod 7)
    CHECK(residue_character_oracle(eis(2, 0), eis(2, 3)) == SymbolValue::Omega);
    CHECK(residue_character_oracle(eis(1, 0), eis(2, 3)) == SymbolValue::One);
    CHECK(residue_character_oracle(eis(2, 3) * eis(4, 1), eis(2, 3)) ==
          SymbolValue::Zero);
    // inert prime
    CHECK(residue_character_oracle(eis(0, 1), eis(2, 0)) == SymbolValue::Omega);
    CHECK_THROWS_AS(residue_character_oracle(eis(1, 0), eis(3, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(residue_character_oracle(eis(1, 0), eis(-7, 0)),
                    std::invalid_argument);
}

TEST_CASE("jacobi agrees with the residue character oracle")
{
    auto primes = primary_primes_up_to_norm(800);
    for (const auto& pi : primes) {
        for (int i = 0; i < 40; ++i) {
            EisensteinInt alpha = eis(rnd(-60, 60), rnd(-60, 60));
            CHECK(cubic_jacobi(alpha, pi) == residue_character_oracle(alpha, pi));
        }
    }
}

TEST_CASE("multiplicativity in the numerator")
{
    for (int i = 0; i < 400; ++i) {
        EisensteinInt beta = eis(rnd(-40, 40) * 3 + 1, rnd(-13, 13) * 3);
        if (norm(beta) <= 1 || norm(beta) % 3 == 0)
            continue;
        EisensteinInt x = eis(rnd(-40, 40), rnd(-40, 40));
        EisensteinInt y = eis(rnd(-40, 40), rnd(-40, 40));
        SymbolValue sx = cubic_jacobi(x, beta);
        SymbolValue sy = cubic_jacobi(y, beta);
        if (sx == SymbolValue::Zero || sy == SymbolValue::Zero)
            continue;
        CHECK(cubic_jacobi(x * y, beta) == sx * sy);
    }
}

TEST_CASE("multiplicativity in the denominator")
{
    for (int i = 0; i < 300; ++i) {
        // random primary beta1, beta2
        EisensteinInt b1 = eis(rnd(-12, 12) * 3 + 2, rnd(-12, 12) * 3);
        EisensteinInt b2 = eis(rnd(-12, 12) * 3 + 2, rnd(-12, 12) * 3);
        if (norm(b1) % 3 == 0 || norm(b2) % 3 == 0)
            continue;
        if (norm(b1) <= 1 || norm(b2) <= 1)
            continue;
        EisensteinInt alpha = eis(rnd(-50, 50), rnd(-50, 50));
        CHECK(cubic_jacobi(alpha, b1 * b2) ==
              cubic_jacobi(alpha, b1) * cubic_jacobi(alpha, b2));
    }
}

TEST_CASE("rational numerators over rational denominators are trivial")
{
    // (n/m) = 1 for coprime rational m, n with 3 not dividing m
    for (int i = 0; i < 400; ++i) {
        long long m = rnd(2, 400);
        long long n = rnd(1, 400);
        if (m % 3 == 0)
            continue;
        if (gcd_int(Int(m), Int(n)) != 1)
            continue;
        CHECK(cubic_jacobi(eis(n, 0), eis(m, 0)) == SymbolValue::One);
    }
}

TEST_CASE("conjugate numerators invert over rational denominators")
{
    // (c+dw/a) * (c+dw^2/a) = 1 when gcd(a, N(c+dw)) = 1, 3 not dividing a
    for (int i = 0; i < 400; ++i) {
        long long a = rnd(2, 300);
        if (a % 3 == 0)
            continue;
        EisensteinInt z = eis(rnd(-40, 40), rnd(-40, 40));
        if (gcd_int(Int(a), norm(z)) != 1)
            continue;
        SymbolValue s1 = cubic_jacobi(z, eis(a, 0));
        SymbolValue s2 = cubic_jacobi(conj(z), eis(a, 0));
        CHECK(s1 * s2 == SymbolValue::One);
    }
}

namespace {

struct IdentityTuple {
    Int P, D, a, b, c, x, y;
};

// Tuples satisfying the reciprocity-identity hypotheses:
// 3 does not divide P (or 27 | P), Q = P^2 + 27D = 2^q1 q0^3, b^2 - ac = D,
// gcd(a(ax^2+2bxy+cy^2), 3DQy) = 1.
std::vector<IdentityTuple> identity_corpus(std::size_t want)
{
    std::vector<IdentityTuple> out;
    std::vector<std::pair<Int, Int>> pd; // (P, D) with the cube-shaped Q
    for (int q1 = 0; q1 <= 2; ++q1)
        for (int q0 = -8; q0 <= 8; ++q0) {
            if (q0 == 0)
                continue;
            Int Q = Int(1 << q1) * q0 * q0 * q0;
            for (int P = -40; P <= 40; ++P) {
                if (P % 3 == 0 && P % 27 != 0)
                    continue;
                Int num = Q - Int(P) * P;
                if (num == 0 || num % 27 != 0)
                    continue;
                pd.emplace_back(P, num / 27);
            }
        }
    REQUIRE(!pd.empty());
    std::size_t guard = 0;
    while (out.size() < want && guard < want * 4000) {
        ++guard;
        const auto& [P, D] = pd[rng() % pd.size()];
        Int Q = P * P + 27 * D;
        long long a = rnd(-12, 12);
        long long b = rnd(-12, 12);
        if (a == 0)
            continue;
        Int cnum = Int(b) * b - D;
        if (cnum % a != 0)
            continue;
        Int c = cnum / a;
        long long x = rnd(-9, 9);
        long long y = rnd(-9, 9);
        Int f = Int(a) * x * x + 2 * Int(b) * x * y + c * y * y;
        if (gcd_int(Int(a) * f, 3 * D * Q * y) != 1)
            continue;
        out.push_back({P, D, Int(a), Int(b), c, Int(x), Int(y)});
    }
    REQUIRE(out.size() == want);
    return out;
}

} // namespace

TEST_CASE("reciprocity identity over a random hypothesis corpus")
{
    for (const auto& t : identity_corpus(250)) {
        Int axby = t.a * t.x + t.b * t.y;
        Int f = t.a * t.x * t.x + 2 * t.b * t.x * t.y + t.c * t.y * t.y;
        // P y + 3(ax+by)(1+2w)
        EisensteinInt lhs_num{t.P * t.y + 3 * axby, 6 * axby};
        EisensteinInt rhs_num{t.P - 3 * t.b, -6 * t.b};
        SymbolValue lhs = cubic_jacobi(lhs_num, EisensteinInt{f, Int(0)});
        SymbolValue rhs = cubic_jacobi(rhs_num, EisensteinInt{t.a, Int(0)});
        CHECK(lhs == rhs);
        CHECK(lhs != SymbolValue::Zero);
    }
}
