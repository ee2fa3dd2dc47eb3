#include "cubicforms/eisenstein.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace cubicforms {

namespace {

// Nearest integer to n/d for d > 0, halves toward zero.
Int round_nearest(const Int& n, const Int& d)
{
    Int q = floor_div(n, d);
    Int r = n - q * d; // 0 <= r < d
    Int twice = 2 * r;
    if (twice < d)
        return q;
    if (twice > d)
        return q + 1;
    return q >= 0 ? q : q + 1;
}

} // namespace

EisDivRem divrem(const EisensteinInt& num, const EisensteinInt& den)
{
    if (den.is_zero())
        throw std::invalid_argument("Eisenstein division by zero");
    Int n = norm(den);
    EisensteinInt t = num * conj(den); // exact quotient = t / n
    EisensteinInt q{round_nearest(t.a, n), round_nearest(t.b, n)};
    EisensteinInt r = num - q * den;
    assert(norm(r) < n);
    return {q, r};
}

bool divides(const EisensteinInt& d, const EisensteinInt& x)
{
    return divrem(x, d).rem.is_zero();
}

bool is_primary(const EisensteinInt& x)
{
    return mod3(x.a - 2) == 0 && mod3(x.b) == 0;
}

bool is_semi_primary(const EisensteinInt& x)
{
    return mod3(x.b) == 0 && mod3(x.a) != 0;
}

EisensteinInt primary_associate(const EisensteinInt& x)
{
    PrimaryDecomposition d = primary_decompose(x);
    if (d.lambda_exp != 0)
        throw std::invalid_argument("no primary associate: divisible by 1-omega");
    return is_primary(d.primary) ? d.primary : -d.primary;
}

PrimaryDecomposition primary_decompose(const EisensteinInt& x)
{
    if (x.is_zero())
        throw std::invalid_argument("primary decomposition of zero");
    EisensteinInt y = x;
    unsigned j = 0;
    const EisensteinInt lam = EisensteinInt::lambda();
    // norm drops by a factor 3 per extraction, so this terminates.
    for (;;) {
        EisDivRem d = divrem(y, lam);
        if (!d.rem.is_zero())
            break;
        y = d.quot;
        ++j;
    }
    // Exactly one of y, omega*y, omega^2*y is semi-primary.
    EisensteinInt cand = y;
    for (int k = 0; k < 3; ++k) {
        if (is_semi_primary(cand)) {
            int i = (3 - k) % 3;
            PrimaryDecomposition out{i, j, cand};
            // Reassembly must be exact.
            EisensteinInt check = cand;
            for (int s = 0; s < i; ++s)
                check = check * EisensteinInt::omega();
            for (unsigned s = 0; s < j; ++s)
                check = check * lam;
            assert(check == x);
            (void)check;
            return out;
        }
        cand = cand * EisensteinInt::omega();
    }
    throw std::logic_error("primary decomposition: no semi-primary associate");
}

EisensteinInt gcd(const EisensteinInt& x, const EisensteinInt& y)
{
    if (x.is_zero() && y.is_zero())
        throw std::invalid_argument("gcd(0, 0) undefined");
    EisensteinInt u = x, v = y;
    while (!v.is_zero()) {
        EisensteinInt r = divrem(u, v).rem;
        u = v;
        v = r;
    }
    PrimaryDecomposition d = primary_decompose(u);
    EisensteinInt g = is_primary(d.primary) ? d.primary : -d.primary;
    for (unsigned s = 0; s < d.lambda_exp; ++s)
        g = g * EisensteinInt::lambda();
    return g;
}

std::string to_string(const EisensteinInt& x)
{
    std::ostringstream os;
    os << x.a.str();
    if (x.b >= 0)
        os << "+" << x.b.str() << "w";
    else
        os << x.b.str() << "w";
    return os.str();
}

} // namespace cubicforms
