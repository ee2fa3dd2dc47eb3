#ifndef CUBICFORMS_CUBIC_SYMBOL_HPP
#define CUBICFORMS_CUBIC_SYMBOL_HPP

#include "cubicforms/eisenstein.hpp"

#include <string>

namespace cubicforms {

// Value of a cubic Jacobi symbol.  The nonzero values form the cyclic
// group {1, omega, omega^2} of order 3; Zero absorbs.
enum class SymbolValue { Zero, One, Omega, OmegaSq };

SymbolValue operator*(SymbolValue x, SymbolValue y);
SymbolValue sym_pow(SymbolValue x, unsigned e);
SymbolValue sym_inv(SymbolValue x);
SymbolValue omega_power(unsigned e);
std::string to_string(SymbolValue v);

/*
 * Cubic Jacobi symbol (alpha / beta)_3 computed without factoring beta:
 * beta is normalized to its primary associate, then a reciprocity loop
 * alternates Euclidean reduction, splitting the remainder into
 * omega^i (1-omega)^j * pi, peeling the unit contributions via the
 * closed forms (omega/beta) = omega^{(a+b+1)/3} and
 * ((1-omega)/beta) = omega^{2(a+1)/3}, and flipping (pi/beta) = (beta/pi)
 * by Eisenstein's general cubic reciprocity.
 *
 * Accepted denominators: beta semi-primary (covers rational integers not
 * divisible by 3) or beta = +-1 (symbol 1).  Denominators divisible by
 * 1-omega, or unit/associate shapes outside that list, are rejected.
 */
SymbolValue cubic_jacobi(const EisensteinInt& alpha, const EisensteinInt& beta);

/*
 * Independent test oracle: alpha^{(N(pi)-1)/3} mod pi by square and
 * multiply, matched against {0, 1, omega, omega^2}.  Requires pi primary
 * with N(pi) a rational prime = 1 (mod 3), or pi a positive rational
 * prime q = 2 (mod 3).
 */
SymbolValue residue_character_oracle(const EisensteinInt& alpha,
                                     const EisensteinInt& pi);

} // namespace cubicforms

#endif
