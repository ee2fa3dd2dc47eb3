#ifndef CUBICFORMS_SEQUENCES_HPP
#define CUBICFORMS_SEQUENCES_HPP

#include "cubicforms/integer.hpp"

#include <cstdint>
#include <utility>

namespace cubicforms {

/*
 * Third-order recurrences attached to x^3 + a1 x^2 + a2 x + a3:
 *   u_{-2} = u_{-1} = 0, u_0 = 1,
 *   s_0 = 3, s_1 = -a1, s_2 = a1^2 - 2 a2,
 *   T_{n+3} + a1 T_{n+2} + a2 T_{n+1} + a3 T_n = 0,
 * and the Lucas sequences U_n(b,c), V_n(b,c) with
 *   U_0 = 0, U_1 = 1, V_0 = 2, V_1 = b, T_{n+1} = b T_n - c T_{n-1}.
 *
 * Modular evaluation is O(log n) by companion-matrix power (3x3) or
 * 2x2 matrix power; p must be an odd prime < 2^63.
 */

std::uint64_t u_mod(const Int& a1, const Int& a2, const Int& a3,
                    std::uint64_t n, std::uint64_t p);

std::uint64_t s_mod(const Int& a1, const Int& a2, const Int& a3,
                    std::uint64_t n, std::uint64_t p);

struct LucasPair {
    std::uint64_t u;
    std::uint64_t v;
};

LucasPair lucas_mod(const Int& b, const Int& c, std::uint64_t n,
                    std::uint64_t p);

// sum_{k=1}^{floor(p/3)} C(3k,k) * (P0^2/(27 Q0))^k mod p, binomials
// updated incrementally; requires p not dividing 27 Q0.
std::uint64_t binomial_sum(const Int& P0, const Int& Q0, std::uint64_t p);

// Exact-integer variants (iterative) for identity tests.
Int u_exact(const Int& a1, const Int& a2, const Int& a3, std::uint64_t n);
Int s_exact(const Int& a1, const Int& a2, const Int& a3, std::uint64_t n);
std::pair<Int, Int> lucas_exact(const Int& b, const Int& c, std::uint64_t n);

} // namespace cubicforms

#endif
