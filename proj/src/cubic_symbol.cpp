#include "cubicforms/cubic_symbol.hpp"

#include "cubicforms/modarith.hpp"

#include <cassert>
#include <stdexcept>

namespace cubicforms {

SymbolValue operator*(SymbolValue x, SymbolValue y)
{
    if (x == SymbolValue::Zero || y == SymbolValue::Zero)
        return SymbolValue::Zero;
    auto e = [](SymbolValue v) {
        return v == SymbolValue::One ? 0 : v == SymbolValue::Omega ? 1 : 2;
    };
    return omega_power(static_cast<unsigned>(e(x) + e(y)));
}

SymbolValue sym_pow(SymbolValue x, unsigned e)
{
    if (x == SymbolValue::Zero)
        return e == 0 ? SymbolValue::One : SymbolValue::Zero;
    unsigned k = x == SymbolValue::One ? 0 : x == SymbolValue::Omega ? 1 : 2;
    return omega_power(k * e);
}

SymbolValue sym_inv(SymbolValue x)
{
    if (x == SymbolValue::Zero)
        throw std::invalid_argument("inverse of zero symbol value");
    return sym_pow(x, 2);
}

SymbolValue omega_power(unsigned e)
{
    switch (e % 3) {
    case 0: return SymbolValue::One;
    case 1: return SymbolValue::Omega;
    default: return SymbolValue::OmegaSq;
    }
}

std::string to_string(SymbolValue v)
{
    switch (v) {
    case SymbolValue::Zero: return "0";
    case SymbolValue::One: return "1";
    case SymbolValue::Omega: return "w";
    default: return "w^2";
    }
}

namespace {

EisensteinInt flip_to_primary(const EisensteinInt& x)
{
    assert(is_semi_primary(x));
    return is_primary(x) ? x : -x;
}

// Exponent of (omega/beta) = omega^{(a+b+1)/3} for primary beta.
unsigned omega_rule_exp(const EisensteinInt& beta)
{
    Int e = beta.a + beta.b + 1;
    if (e % 3 != 0)
        throw std::logic_error("unit rule exponent not divisible by 3");
    return static_cast<unsigned>(mod3(e / 3));
}

// Exponent of ((1-omega)/beta) = omega^{2(a+1)/3} for primary beta.
unsigned lambda_rule_exp(const EisensteinInt& beta)
{
    Int e = beta.a + 1;
    if (e % 3 != 0)
        throw std::logic_error("unit rule exponent not divisible by 3");
    return static_cast<unsigned>(mod3(2 * (e / 3)));
}

} // namespace

SymbolValue cubic_jacobi(const EisensteinInt& alpha, const EisensteinInt& beta)
{
    if (beta.is_zero())
        throw std::invalid_argument("cubic Jacobi symbol: zero denominator");
    Int nb = norm(beta);
    if (nb % 3 == 0)
        throw std::invalid_argument(
            "cubic Jacobi symbol undefined: denominator divisible by 1-omega");
    if (nb == 1) {
        if (beta.b == 0) // beta = +-1
            return SymbolValue::One;
        throw std::invalid_argument(
            "cubic Jacobi symbol: denominator is a non-rational unit");
    }
    if (!is_semi_primary(beta))
        throw std::invalid_argument(
            "cubic Jacobi symbol: denominator not an admissible associate");

    EisensteinInt b = flip_to_primary(beta);
    EisensteinInt a = alpha;
    SymbolValue acc = SymbolValue::One;
    for (;;) {
        if (norm(b) == 1) // b = -1
            return acc;
        EisensteinInt r = divrem(a, b).rem;
        if (r.is_zero())
            return SymbolValue::Zero;
        PrimaryDecomposition d = primary_decompose(r);
        unsigned e = omega_rule_exp(b) * static_cast<unsigned>(d.omega_exp) +
                     lambda_rule_exp(b) * d.lambda_exp;
        acc = acc * omega_power(e);
        // (pi/b) = (b/pi) by general cubic reciprocity; the sign of the
        // semi-primary part is invisible since (-1/b) = 1.
        a = b;
        b = flip_to_primary(d.primary);
    }
}

SymbolValue residue_character_oracle(const EisensteinInt& alpha,
                                     const EisensteinInt& pi)
{
    if (!is_primary(pi))
        throw std::invalid_argument("oracle: pi must be primary");
    Int n = norm(pi);
    if (!fits_int64(n))
        throw std::invalid_argument("oracle: norm too large");
    std::uint64_t nu = n.convert_to<std::uint64_t>();
    if (pi.b == 0) {
        // inert rational prime q = 2 (mod 3); primary forces pi.a > 0
        if (pi.a <= 0 || !is_prime_u64(pi.a.convert_to<std::uint64_t>()) ||
            mod3(pi.a) != 2)
            throw std::invalid_argument("oracle: rational pi must be a prime = 2 (mod 3)");
    } else {
        if (!is_prime_u64(nu) || nu % 3 != 1)
            throw std::invalid_argument("oracle: norm must be a prime = 1 (mod 3)");
    }

    std::uint64_t e = (nu - 1) / 3;
    EisensteinInt base = divrem(alpha, pi).rem;
    EisensteinInt r{1, 0};
    while (e) {
        if (e & 1)
            r = divrem(r * base, pi).rem;
        base = divrem(base * base, pi).rem;
        e >>= 1;
    }
    if (r.is_zero())
        return SymbolValue::Zero;
    const EisensteinInt candidates[3] = {
        {1, 0}, EisensteinInt::omega(), EisensteinInt::omega_sq()};
    for (int i = 0; i < 3; ++i)
        if (divrem(r - candidates[i], pi).rem.is_zero())
            return omega_power(static_cast<unsigned>(i));
    throw std::logic_error("oracle: power is not a cube root of unity mod pi");
}

} // namespace cubicforms
