#ifndef CUBICFORMS_INTEGER_HPP
#define CUBICFORMS_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace cubicforms {

using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(const Int& a, const Int& b)
{
    return boost::multiprecision::gcd(a, b);
}

// Floor division (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& n, const Int& d)
{
    Int q = n / d;
    if (q * d != n && ((n < 0) != (d < 0)))
        q -= 1;
    return q;
}

// Residue in [0, 3).
inline int mod3(const Int& x)
{
    Int r = x % 3;
    if (r < 0)
        r += 3;
    return static_cast<int>(r);
}

// Extended gcd: returns g = gcd(a,b) >= 0 with g = a*x + b*y.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y)
{
    Int r0 = a, r1 = b;
    Int x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int x2 = x0 - q * x1;
        Int y2 = y0 - q * y1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
    x = x0; y = y0;
    return r0;
}

inline Int isqrt(const Int& n)
{
    if (n < 0)
        throw std::invalid_argument("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

// Exact signed cube root, or nullopt if n is not a perfect cube.
inline std::optional<Int> cbrt_exact(const Int& n)
{
    if (n == 0)
        return Int(0);
    Int m = abs_int(n);
    Int lo = 0, hi = 1;
    while (hi * hi * hi < m)
        hi <<= 1;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (mid * mid * mid < m)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo * lo * lo != m)
        return std::nullopt;
    return n < 0 ? Int(-lo) : lo;
}

// 2-adic valuation of a nonzero integer.
inline unsigned v2(const Int& n)
{
    if (n == 0)
        throw std::invalid_argument("v2 of zero");
    return boost::multiprecision::lsb(abs_int(n));
}

inline bool fits_int64(const Int& x)
{
    return x >= std::numeric_limits<std::int64_t>::min() &&
           x <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Int& x)
{
    if (!fits_int64(x))
        throw std::overflow_error("integer does not fit in 64 bits");
    return x.convert_to<std::int64_t>();
}

} // namespace cubicforms

#endif
