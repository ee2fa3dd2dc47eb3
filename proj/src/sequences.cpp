#include "cubicforms/sequences.hpp"

#include "cubicforms/modarith.hpp"

#include <array>
#include <stdexcept>

namespace cubicforms {

namespace {

using Mat3 = std::array<std::array<std::uint64_t, 3>, 3>;
using Vec3 = std::array<std::uint64_t, 3>;

Mat3 mat_mul(const Mat3& x, const Mat3& y, std::uint64_t p)
{
    Mat3 z{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            if (x[i][k] == 0)
                continue;
            for (int j = 0; j < 3; ++j)
                z[i][j] = addmod(z[i][j], mulmod(x[i][k], y[k][j], p), p);
        }
    return z;
}

Vec3 mat_apply(const Mat3& m, const Vec3& v, std::uint64_t p)
{
    Vec3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out[i] = addmod(out[i], mulmod(m[i][j], v[j], p), p);
    return out;
}

// (companion matrix)^n applied to the initial window (T_0, T_1, T_2);
// returns (T_n, T_{n+1}, T_{n+2}).
Vec3 companion_power(const Int& a1, const Int& a2, const Int& a3,
                     const Vec3& init, std::uint64_t n, std::uint64_t p)
{
    std::uint64_t c1 = mod_reduce(-a1, p);
    std::uint64_t c2 = mod_reduce(-a2, p);
    std::uint64_t c3 = mod_reduce(-a3, p);
    Mat3 m{{{0, 1, 0}, {0, 0, 1}, {c3, c2, c1}}};
    Mat3 acc{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    while (n) {
        if (n & 1)
            acc = mat_mul(acc, m, p);
        m = mat_mul(m, m, p);
        n >>= 1;
    }
    return mat_apply(acc, init, p);
}

} // namespace

std::uint64_t u_mod(const Int& a1, const Int& a2, const Int& a3,
                    std::uint64_t n, std::uint64_t p)
{
    // u_0 = 1, u_1 = -a1, u_2 = a1^2 - a2
    Vec3 init{1 % p, mod_reduce(-a1, p), mod_reduce(a1 * a1 - a2, p)};
    return companion_power(a1, a2, a3, init, n, p)[0];
}

std::uint64_t s_mod(const Int& a1, const Int& a2, const Int& a3,
                    std::uint64_t n, std::uint64_t p)
{
    Vec3 init{3 % p, mod_reduce(-a1, p), mod_reduce(a1 * a1 - 2 * a2, p)};
    return companion_power(a1, a2, a3, init, n, p)[0];
}

LucasPair lucas_mod(const Int& b, const Int& c, std::uint64_t n,
                    std::uint64_t p)
{
    std::uint64_t bm = mod_reduce(b, p);
    std::uint64_t cm = mod_reduce(c, p);
    // [[b, -c], [1, 0]]^n = [[U_{n+1}, -c U_n], [U_n, -c U_{n-1}]]
    std::uint64_t m00 = bm, m01 = submod(0, cm, p), m10 = 1 % p, m11 = 0;
    std::uint64_t a00 = 1 % p, a01 = 0, a10 = 0, a11 = 1 % p;
    std::uint64_t e = n;
    while (e) {
        if (e & 1) {
            std::uint64_t t00 = addmod(mulmod(a00, m00, p), mulmod(a01, m10, p), p);
            std::uint64_t t01 = addmod(mulmod(a00, m01, p), mulmod(a01, m11, p), p);
            std::uint64_t t10 = addmod(mulmod(a10, m00, p), mulmod(a11, m10, p), p);
            std::uint64_t t11 = addmod(mulmod(a10, m01, p), mulmod(a11, m11, p), p);
            a00 = t00; a01 = t01; a10 = t10; a11 = t11;
        }
        std::uint64_t t00 = addmod(mulmod(m00, m00, p), mulmod(m01, m10, p), p);
        std::uint64_t t01 = addmod(mulmod(m00, m01, p), mulmod(m01, m11, p), p);
        std::uint64_t t10 = addmod(mulmod(m10, m00, p), mulmod(m11, m10, p), p);
        std::uint64_t t11 = addmod(mulmod(m10, m01, p), mulmod(m11, m11, p), p);
        m00 = t00; m01 = t01; m10 = t10; m11 = t11;
        e >>= 1;
    }
    std::uint64_t un = a10;
    std::uint64_t un1 = a00;
    // V_n = 2 U_{n+1} - b U_n
    std::uint64_t vn = submod(addmod(un1, un1, p), mulmod(bm, un, p), p);
    return {un, vn};
}

std::uint64_t binomial_sum(const Int& P0, const Int& Q0, std::uint64_t p)
{
    if (mod_reduce(27 * Q0, p) == 0)
        throw std::invalid_argument("binomial_sum requires p not dividing 27*Q0");
    std::uint64_t p0 = mod_reduce(P0, p);
    std::uint64_t r = mulmod(mulmod(p0, p0, p), inv_mod(mod_reduce(27 * Q0, p), p), p);
    std::uint64_t kmax = p / 3;
    // C(3(k+1), k+1) = C(3k, k) * (3k+1)(3k+2)(3k+3) / ((k+1)(2k+1)(2k+2))
    std::uint64_t binom = 1 % p;
    std::uint64_t rpow = 1 % p;
    std::uint64_t sum = 0;
    for (std::uint64_t k = 1; k <= kmax; ++k) {
        std::uint64_t j = k - 1;
        std::uint64_t numer = mulmod(mulmod(3 * j + 1, 3 * j + 2, p), 3 * j + 3, p);
        std::uint64_t denom = mulmod(mulmod(j + 1, 2 * j + 1, p), 2 * j + 2, p);
        binom = mulmod(binom, mulmod(numer, inv_mod(denom, p), p), p);
        rpow = mulmod(rpow, r, p);
        sum = addmod(sum, mulmod(binom, rpow, p), p);
    }
    return sum;
}

Int u_exact(const Int& a1, const Int& a2, const Int& a3, std::uint64_t n)
{
    Int t0 = 1, t1 = -a1, t2 = a1 * a1 - a2;
    if (n == 0) return t0;
    if (n == 1) return t1;
    for (std::uint64_t i = 2; i < n; ++i) {
        Int t3 = -a1 * t2 - a2 * t1 - a3 * t0;
        t0 = t1; t1 = t2; t2 = t3;
    }
    return t2;
}

Int s_exact(const Int& a1, const Int& a2, const Int& a3, std::uint64_t n)
{
    Int t0 = 3, t1 = -a1, t2 = a1 * a1 - 2 * a2;
    if (n == 0) return t0;
    if (n == 1) return t1;
    for (std::uint64_t i = 2; i < n; ++i) {
        Int t3 = -a1 * t2 - a2 * t1 - a3 * t0;
        t0 = t1; t1 = t2; t2 = t3;
    }
    return t2;
}

std::pair<Int, Int> lucas_exact(const Int& b, const Int& c, std::uint64_t n)
{
    Int u0 = 0, u1 = 1, v0 = 2, v1 = b;
    if (n == 0) return {u0, v0};
    for (std::uint64_t i = 1; i < n; ++i) {
        Int u2 = b * u1 - c * u0;
        Int v2 = b * v1 - c * v0;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    return {u1, v1};
}

} // namespace cubicforms
