#ifndef CUBICFORMS_QUADFORM_HPP
#define CUBICFORMS_QUADFORM_HPP

#include "cubicforms/integer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cubicforms {

/*
 * Integral binary quadratic form a x^2 + bmid x y + c y^2 with even
 * middle coefficient bmid = 2b, so that b^2 - ac = D and the form has
 * discriminant 4D.  Only positive definite forms are admitted (D < 0,
 * a > 0, c > 0) and they must be primitive: gcd(a, bmid, c) = 1.
 */
struct QuadForm {
    Int a;
    Int bmid;
    Int c;

    QuadForm(Int a_, Int bmid_, Int c_);

    // b^2 - ac where bmid = 2b.
    Int quarter_disc() const;

    Int eval(const Int& x, const Int& y) const;

    bool operator==(const QuadForm& o) const
    {
        return a == o.a && bmid == o.bmid && c == o.c;
    }
};

// Equivalence class, held by its unique reduced representative
// (|bmid| <= a <= c, with bmid >= 0 when |bmid| = a or a = c).
struct FormClass {
    QuadForm rep;

    bool operator==(const FormClass& o) const { return rep == o.rep; }
    bool operator!=(const FormClass& o) const { return !(*this == o); }
    bool operator<(const FormClass& o) const;
};

bool is_reduced(const QuadForm& f);

// Reduction by the generators (a,b,c) ~ (c,-b,a) and
// (a,b,c) ~ (a, 2ak+b, ak^2+bk+c).
FormClass reduce(QuadForm f);

struct ClassGroup {
    Int D;                          // discriminant is 4D
    std::vector<FormClass> classes; // sorted, deterministic order

    std::size_t h() const { return classes.size(); }
    const FormClass& identity() const;
    bool contains(const FormClass& K) const;
    std::size_t index_of(const FormClass& K) const; // throws if absent
};

// All reduced primitive forms of discriminant 4D, D < 0.
ClassGroup enumerate_class_group(const Int& D);

// Composition by the Bezout-coefficient formula on half middle
// coefficients: t = gcd(A1,A2,B1+B2) = A1 u + A2 v + (B1+B2) w,
// A3 = A1 A2 / t^2, B3 = B2 + (A2/t)((B1-B2)v - C2 w), C3 = (B3^2-D)/A3.
FormClass compose(const FormClass& K1, const FormClass& K2);

FormClass inverse(const FormClass& K);

// A form in K whose leading coefficient is coprime to M, found by
// scanning coprime (x,y) in boxes of growing radius and completing the
// winning pair to a unimodular matrix.
QuadForm coprime_representative(const FormClass& K, const Int& M);

// The class representing the odd prime p (requires Legendre(D,p) = 1):
// reduce (p, 2r, (r^2-D)/p) with r = sqrt_mod_p(D, p).
FormClass class_of_prime(std::uint64_t p, const Int& D);

std::string to_string(const QuadForm& f);
std::string to_string(const FormClass& K);

namespace detail {
// Composition with a caller-supplied Bezout triple; used to check that
// the resulting class does not depend on the choice.
FormClass compose_with_bezout(const FormClass& K1, const FormClass& K2,
                              const Int& u, const Int& v, const Int& w);
}

} // namespace cubicforms

#endif
