#ifndef CUBICFORMS_EISENSTEIN_HPP
#define CUBICFORMS_EISENSTEIN_HPP

#include "cubicforms/integer.hpp"

#include <string>

namespace cubicforms {

/*
 * Element a + b*omega of Z[omega], omega = (-1 + sqrt(-3))/2, so that
 * omega^2 = -1 - omega and norm(a + b*omega) = a^2 - a*b + b^2 >= 0.
 * Values are immutable; all operations are pure.
 */
struct EisensteinInt {
    Int a;
    Int b;

    EisensteinInt() : a(0), b(0) {}
    EisensteinInt(Int re, Int om) : a(std::move(re)), b(std::move(om)) {}

    bool is_zero() const { return a == 0 && b == 0; }

    bool operator==(const EisensteinInt& o) const { return a == o.a && b == o.b; }
    bool operator!=(const EisensteinInt& o) const { return !(*this == o); }

    static EisensteinInt omega() { return {0, 1}; }
    static EisensteinInt omega_sq() { return {-1, -1}; }
    // 1 - omega: the ramified prime of norm 3.
    static EisensteinInt lambda() { return {1, -1}; }
};

inline EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y)
{
    return {x.a + y.a, x.b + y.b};
}

inline EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y)
{
    return {x.a - y.a, x.b - y.b};
}

inline EisensteinInt operator-(const EisensteinInt& x)
{
    return {-x.a, -x.b};
}

inline EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y)
{
    // (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w
    Int bd = x.b * y.b;
    return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
}

inline Int norm(const EisensteinInt& x)
{
    return x.a * x.a - x.a * x.b + x.b * x.b;
}

// Complex conjugate: a + b*omega^2 = (a - b) - b*omega.
inline EisensteinInt conj(const EisensteinInt& x)
{
    return {x.a - x.b, -x.b};
}

struct EisDivRem {
    EisensteinInt quot;
    EisensteinInt rem;
};

// Euclidean division by nearest-integer rounding of the exact quotient,
// guaranteeing norm(rem) <= (3/4) norm(den).  Halves round toward the
// quotient coordinate of smaller absolute value (ties toward zero).
EisDivRem divrem(const EisensteinInt& num, const EisensteinInt& den);

bool divides(const EisensteinInt& d, const EisensteinInt& x);

// Primary means = 2 (mod 3): 3 | a-2 and 3 | b.
bool is_primary(const EisensteinInt& x);

// Semi-primary: 3 | b and 3 does not divide a, i.e. x or -x is primary.
bool is_semi_primary(const EisensteinInt& x);

// The primary associate of x, defined for x coprime to 1-omega.
EisensteinInt primary_associate(const EisensteinInt& x);

/*
 * x = omega^omega_exp * (1-omega)^lambda_exp * primary, exactly, with
 * omega_exp in {0,1,2}, lambda_exp the (1-omega)-adic valuation, and
 * primary semi-primary (its sign-normalized associate is primary; the
 * sign rides on `primary` because -1 is invisible to cubic symbols).
 */
struct PrimaryDecomposition {
    int omega_exp;
    unsigned lambda_exp;
    EisensteinInt primary;
};

PrimaryDecomposition primary_decompose(const EisensteinInt& x);

// gcd normalized to (1-omega)^j * (primary associate of the coprime part);
// reduces to the primary associate itself when gcd is coprime to 1-omega.
EisensteinInt gcd(const EisensteinInt& x, const EisensteinInt& y);

std::string to_string(const EisensteinInt& x);

} // namespace cubicforms

#endif
