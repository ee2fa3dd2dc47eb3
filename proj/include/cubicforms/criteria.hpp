#ifndef CUBICFORMS_CRITERIA_HPP
#define CUBICFORMS_CRITERIA_HPP

#include "cubicforms/character.hpp"
#include "cubicforms/sequences.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace cubicforms {

// Distinct roots of x^3 + a1 x^2 + a2 x + a3 modulo p (brute force).
// When p does not divide D0, the count is checked against the
// Legendre(D0,p) trichotomy: +1 -> {0,3}, -1 -> {1}.
int count_roots(const Int& a1, const Int& a2, const Int& a3, std::uint64_t p);

// Labels of the equivalent statements.  "vii2" is the
// U_{2 floor(p/3)+1} variant coupled with the binomial sum.
inline constexpr std::array<const char*, 10> kStatementLabels = {
    "i", "ii", "iii", "iv", "v", "vi", "vii", "vii2", "viii", "ix"};

struct CriterionReport {
    std::uint64_t p = 0;
    Int a1, a2, a3;
    int legendre_D0 = 0;
    std::map<std::string, bool> verdicts;        // applicable statements
    std::map<std::string, std::string> skipped;  // label -> reason

    // All applicable verdicts must agree; disagreement means a bug,
    // never an expected outcome.
    bool consistent() const;
    std::optional<bool> consensus() const; // value when consistent
};

/*
 * Evaluator for one cubic over many primes: builds CubicData once and,
 * when D1 < 0, the subgroup of H(4 D1) once.  evaluate() is const and
 * safe to call concurrently.
 *
 * Per-statement gates (recorded in `skipped` when unmet):
 *   ii   D1 < 0
 *   iii, iv, vi, ix   p not dividing P0   (ix additionally a1 = 0)
 *   vii2, viii        p not dividing P0 (P0^2 - 3 Q0)
 */
class CriterionEvaluator {
public:
    CriterionEvaluator(Int a1, Int a2, Int a3);

    CriterionReport evaluate(std::uint64_t p) const;

    const CubicData& data() const { return data_; }
    const std::optional<Subgroup>& group() const { return group_; }

private:
    CubicData data_;
    std::optional<Subgroup> group_; // present iff D1 < 0
};

CriterionReport evaluate_statements(const Int& a1, const Int& a2,
                                    const Int& a3, std::uint64_t p);

// value^{(p-1)/3} = 1 (mod p); requires p = 1 (mod 3) and p not
// dividing value.
bool cubic_residue_test(std::uint64_t p, const Int& value);

// Whether Q(P + sqrt(P^2 - Q)) is a cubic residue mod p, Q = P^2 + 27D.
// The result is independent of the choice of square root (asserted).
bool surd_cubic_residue(const Int& P, const Int& D, std::uint64_t p);

// Executable form of the surd criterion: the residue test above must
// coincide with membership of p's class in the kernel subgroup.
bool surd_criterion_check(const Int& P, const Int& D, std::uint64_t p);
bool surd_criterion_check(const Subgroup& G, std::uint64_t p);

} // namespace cubicforms

#endif
