#include "cubicforms/quadform.hpp"

#include "cubicforms/modarith.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace cubicforms {

QuadForm::QuadForm(Int a_, Int bmid_, Int c_)
    : a(std::move(a_)), bmid(std::move(bmid_)), c(std::move(c_))
{
    if (bmid % 2 != 0)
        throw std::invalid_argument("form must have an even middle coefficient");
    if (quarter_disc() >= 0)
        throw std::invalid_argument("form must be definite (negative discriminant)");
    if (a <= 0 || c <= 0)
        throw std::invalid_argument("definite form must have positive outer coefficients");
    Int g = gcd_int(gcd_int(a, bmid), c);
    if (g != 1)
        throw std::invalid_argument("form must be primitive");
}

Int QuadForm::quarter_disc() const
{
    Int b = bmid / 2;
    return b * b - a * c;
}

Int QuadForm::eval(const Int& x, const Int& y) const
{
    return a * x * x + bmid * x * y + c * y * y;
}

bool FormClass::operator<(const FormClass& o) const
{
    // a ascending, |bmid| ascending, positive middle before negative,
    // matching the usual display order of reduced forms.
    auto key = [](const QuadForm& f) {
        return std::make_tuple(f.a, abs_int(f.bmid), -f.bmid, f.c);
    };
    return key(rep) < key(o.rep);
}

bool is_reduced(const QuadForm& f)
{
    if (!(-f.a < f.bmid && f.bmid <= f.a))
        return false;
    return f.a < f.c || (f.a == f.c && f.bmid >= 0);
}

FormClass reduce(QuadForm f)
{
    const Int D = f.quarter_disc();
    for (;;) {
        if (f.bmid > f.a || f.bmid <= -f.a) {
            // translate: (a, B, c) -> (a, B + 2ak, a k^2 + B k + c)
            // with k chosen so the new middle lies in (-a, a].
            Int k = floor_div(f.a - f.bmid, 2 * f.a);
            f.c += f.bmid * k + f.a * k * k;
            f.bmid += 2 * f.a * k;
            assert(f.quarter_disc() == D);
            continue;
        }
        if (f.a > f.c) {
            f = QuadForm(f.c, -f.bmid, f.a); // (a,b,c) ~ (c,-b,a)
            assert(f.quarter_disc() == D);
            continue;
        }
        if (f.a == f.c && f.bmid < 0) {
            f = QuadForm(f.c, -f.bmid, f.a);
            continue;
        }
        break;
    }
    assert(is_reduced(f));
    return FormClass{f};
}

const FormClass& ClassGroup::identity() const
{
    for (const auto& K : classes)
        if (K.rep.a == 1)
            return K;
    throw std::logic_error("class group without identity");
}

bool ClassGroup::contains(const FormClass& K) const
{
    return std::binary_search(classes.begin(), classes.end(), K);
}

std::size_t ClassGroup::index_of(const FormClass& K) const
{
    auto it = std::lower_bound(classes.begin(), classes.end(), K);
    if (it == classes.end() || !(*it == K))
        throw std::invalid_argument("class not in group");
    return static_cast<std::size_t>(it - classes.begin());
}

ClassGroup enumerate_class_group(const Int& D)
{
    if (D >= 0)
        throw std::invalid_argument("class group enumeration requires D < 0");
    ClassGroup G;
    G.D = D;
    Int amax = isqrt(4 * (-D) / 3);
    for (Int a = 1; a <= amax; ++a) {
        // -a < 2b <= a
        Int blo = floor_div(-a, 2) + 1;
        Int bhi = floor_div(a, 2);
        for (Int b = blo; b <= bhi; ++b) {
            Int num = b * b - D;
            if (num % a != 0)
                continue;
            Int c = num / a;
            if (c < a)
                continue;
            if ((2 * abs_int(b) == a || a == c) && b < 0)
                continue;
            if (gcd_int(gcd_int(a, 2 * b), c) != 1)
                continue;
            G.classes.push_back(FormClass{QuadForm(a, 2 * b, c)});
        }
    }
    std::sort(G.classes.begin(), G.classes.end());
    return G;
}

namespace {

FormClass compose_impl(const FormClass& K1, const FormClass& K2,
                       const Int& u, const Int& v, const Int& w, const Int& t)
{
    const Int D = K1.rep.quarter_disc();
    const Int A1 = K1.rep.a, B1 = K1.rep.bmid / 2;
    const Int A2 = K2.rep.a, B2 = K2.rep.bmid / 2, C2 = K2.rep.c;

    if (A1 * u + A2 * v + (B1 + B2) * w != t)
        throw std::invalid_argument("invalid Bezout triple for composition");
    if ((A1 * A2) % (t * t) != 0)
        throw std::logic_error("composition: t^2 does not divide A1*A2");
    Int A3 = (A1 * A2) / (t * t);
    Int B3 = B2 + (A2 / t) * ((B1 - B2) * v - C2 * w);
    Int num = B3 * B3 - D;
    if (num % A3 != 0)
        throw std::logic_error("composition: non-integral third coefficient");
    Int C3 = num / A3;
    return reduce(QuadForm(A3, 2 * B3, C3));
}

} // namespace

FormClass compose(const FormClass& K1, const FormClass& K2)
{
    if (K1.rep.quarter_disc() != K2.rep.quarter_disc())
        throw std::invalid_argument("composition of forms of different discriminant");
    const Int A1 = K1.rep.a, B1 = K1.rep.bmid / 2;
    const Int A2 = K2.rep.a, B2 = K2.rep.bmid / 2;
    Int u1, v1, s, w;
    Int g1 = ext_gcd(A1, A2, u1, v1);
    Int t = ext_gcd(g1, B1 + B2, s, w);
    return compose_impl(K1, K2, u1 * s, v1 * s, w, t);
}

FormClass inverse(const FormClass& K)
{
    return reduce(QuadForm(K.rep.a, -K.rep.bmid, K.rep.c));
}

QuadForm coprime_representative(const FormClass& K, const Int& M)
{
    const QuadForm& f = K.rep;
    if (M <= 0)
        throw std::invalid_argument("coprimality modulus must be positive");
    const Int D = f.quarter_disc();
    Int cap = 10 * M;
    for (Int R = 1; R <= cap; ++R) {
        for (Int x = -R; x <= R; ++x) {
            for (Int y = -R; y <= R; ++y) {
                if (std::max(abs_int(x), abs_int(y)) != R)
                    continue;
                if (gcd_int(x, y) != 1)
                    continue;
                Int val = f.eval(x, y);
                if (gcd_int(val, M) != 1)
                    continue;
                // complete (x, y) to a unimodular matrix [[x, u], [y, v]]
                Int s, t;
                Int g = ext_gcd(x, y, s, t);
                assert(g == 1);
                Int v = s, u = -t; // x*v - y*u = 1
                Int bnew = 2 * f.a * x * u + f.bmid * (x * v + u * y) +
                           2 * f.c * y * v;
                QuadForm out(val, bnew, f.eval(u, v));
                assert(out.quarter_disc() == D);
                assert(reduce(out) == K);
                return out;
            }
        }
    }
    throw std::runtime_error("coprime representative not found within radius cap");
}

FormClass class_of_prime(std::uint64_t p, const Int& D)
{
    if (p == 2 || !is_prime_u64(p))
        throw std::invalid_argument("class_of_prime requires an odd prime");
    if (D >= 0)
        throw std::invalid_argument("class_of_prime requires D < 0");
    if (mod_reduce(4 * D, p) == 0)
        throw std::invalid_argument("class_of_prime requires p not dividing 4D");
    if (legendre(D, p) != 1)
        throw std::invalid_argument("p not represented by discriminant 4D");
    Int b = sqrt_mod_p(D, p);
    Int num = b * b - D;
    assert(num % Int(p) == 0);
    return reduce(QuadForm(Int(p), 2 * b, num / Int(p)));
}

std::string to_string(const QuadForm& f)
{
    std::ostringstream os;
    os << "[" << f.a.str() << "," << f.bmid.str() << "," << f.c.str() << "]";
    return os.str();
}

std::string to_string(const FormClass& K)
{
    return to_string(K.rep);
}

namespace detail {

FormClass compose_with_bezout(const FormClass& K1, const FormClass& K2,
                              const Int& u, const Int& v, const Int& w)
{
    if (K1.rep.quarter_disc() != K2.rep.quarter_disc())
        throw std::invalid_argument("composition of forms of different discriminant");
    const Int A1 = K1.rep.a, B1 = K1.rep.bmid / 2;
    const Int A2 = K2.rep.a, B2 = K2.rep.bmid / 2;
    Int t = gcd_int(gcd_int(A1, A2), B1 + B2);
    return compose_impl(K1, K2, u, v, w, t);
}

} // namespace detail

} // namespace cubicforms
