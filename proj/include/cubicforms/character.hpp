#ifndef CUBICFORMS_CHARACTER_HPP
#define CUBICFORMS_CHARACTER_HPP

#include "cubicforms/cubic_symbol.hpp"
#include "cubicforms/quadform.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace cubicforms {

/*
 * Invariants attached to x^3 + a1 x^2 + a2 x + a3:
 *   P0 = -2 a1^3 + 9 a1 a2 - 27 a3,  Q0 = (a1^2 - 3 a2)^3,
 *   D0 = -(P0^2 - 4 Q0)/27  (the discriminant of the cubic),
 * and the halved data (P1, Q1, D1) = (P0/2, Q0, D0/4) when P0 is even,
 * (P0, 4 Q0, D0) when odd, so that P1^2 + 27 D1 = Q1 = 2^q1 * q0^3.
 */
struct CubicData {
    Int a1, a2, a3;
    Int P0, Q0, D0;
    Int P1, Q1, D1;
    Int q0;
    int q1;
};

CubicData cubic_data(const Int& a1, const Int& a2, const Int& a3);

struct TwoCube {
    Int q0;
    int q1; // in {0, 1, 2}
};

// Q = 2^q1 * q0^3 with q1 in {0,1,2}; throws when Q has no such shape.
TwoCube two_cube_decompose(const Int& Q);

/*
 * The cubic character chi([a,2b,c]) = ((P - 3b(1+2w)) / a)_3 on H(4D),
 * evaluated through a representative with gcd(a, 3DQ) = 1.  Requires
 * 3 not dividing P or 27 | P, Q = P^2 + 27D of shape 2^q1 q0^3, DQ != 0.
 * Representatives are memoized per class.
 */
class CubicCharacter {
public:
    CubicCharacter(Int P, Int D);

    SymbolValue operator()(const FormClass& K) const;

    const Int& P() const { return P_; }
    const Int& D() const { return D_; }
    const Int& Q() const { return Q_; }
    const Int& modulus() const { return M_; }

private:
    Int P_, D_, Q_, M_;
    mutable std::map<FormClass, QuadForm> rep_cache_;
};

// One-shot evaluation of the character above.
SymbolValue chi(const Int& P, const Int& D, const FormClass& K);

struct Subgroup {
    ClassGroup ambient;
    std::vector<FormClass> members; // kernel of chi, sorted
    Int P;
    Int D;
    std::map<FormClass, SymbolValue> chi_table;

    std::size_t index() const { return ambient.h() / members.size(); }
    bool contains(const FormClass& K) const;
};

// Kernel of chi(P, D, .) over the full class group of discriminant 4D.
Subgroup subgroup_G(const Int& P, const Int& D);
Subgroup subgroup_G(const Int& P, const Int& D, ClassGroup ambient);

// G(a1,a2,a3): subgroup_G(P1, D1) from cubic_data; requires D1 < 0.
Subgroup subgroup_for_cubic(const Int& a1, const Int& a2, const Int& a3);

// Kernel subgroup for the depressed cubic x^3 + a2 x + a3 in the form
// native to u_p divisibility: same ambient group as
// subgroup_for_cubic(0, a2, a3), membership via
// ((b - 3*a3h*(1+2w)) / a)_3 = 1 where a3h = 2 a3 / (3 + (-1)^a3).
Subgroup subgroup_depressed(const Int& a2, const Int& a3);

// First odd prime p0 <= bound, p0 not dividing 3DPQ, for which
// D x^3 - Q x - 2Q = 0 (mod p0) has no root; certifies index 3.
std::optional<std::uint64_t> witness_index3(const Int& P, const Int& D,
                                            std::uint64_t bound);

} // namespace cubicforms

#endif
