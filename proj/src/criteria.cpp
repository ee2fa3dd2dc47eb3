#include "cubicforms/criteria.hpp"

#include "cubicforms/modarith.hpp"

#include <cassert>
#include <stdexcept>

namespace cubicforms {

int count_roots(const Int& a1, const Int& a2, const Int& a3, std::uint64_t p)
{
    if (p <= 3 || !is_prime_u64(p))
        throw std::invalid_argument("count_roots requires a prime p > 3");
    std::uint64_t c1 = mod_reduce(a1, p);
    std::uint64_t c2 = mod_reduce(a2, p);
    std::uint64_t c3 = mod_reduce(a3, p);
    int count = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = addmod(mulmod(addmod(mulmod(addmod(x, c1, p), x, p),
                                               c2, p), x, p), c3, p);
        if (v == 0)
            ++count;
    }
    // Legendre trichotomy check (distinct-root counts; p | D0 excluded
    // because a repeated root then collapses the count).
    Int P0 = -2 * a1 * a1 * a1 + 9 * a1 * a2 - 27 * a3;
    Int e = a1 * a1 - 3 * a2;
    Int D0 = -(P0 * P0 - 4 * e * e * e) / 27;
    if (mod_reduce(D0, p) != 0) {
        int leg = legendre(D0, p);
        if (leg == 1 && count != 0 && count != 3)
            throw std::logic_error("root-count trichotomy violated (leg = 1)");
        if (leg == -1 && count != 1)
            throw std::logic_error("root-count trichotomy violated (leg = -1)");
    }
    return count;
}

bool CriterionReport::consistent() const
{
    bool first = true;
    bool ref = false;
    for (const auto& [label, value] : verdicts) {
        if (first) {
            ref = value;
            first = false;
        } else if (value != ref) {
            return false;
        }
    }
    return true;
}

std::optional<bool> CriterionReport::consensus() const
{
    if (verdicts.empty() || !consistent())
        return std::nullopt;
    return verdicts.begin()->second;
}

CriterionEvaluator::CriterionEvaluator(Int a1, Int a2, Int a3)
    : data_(cubic_data(a1, a2, a3))
{
    if (data_.D1 < 0)
        group_ = subgroup_G(data_.P1, data_.D1);
}

CriterionReport CriterionEvaluator::evaluate(std::uint64_t p) const
{
    if (p <= 3 || !is_prime_u64(p))
        throw std::invalid_argument("evaluate requires a prime p > 3");
    if (mod_reduce(data_.D0 * data_.Q0, p) == 0)
        throw std::invalid_argument("evaluate requires p not dividing D0*Q0");

    const Int& a1 = data_.a1;
    const Int& a2 = data_.a2;
    const Int& a3 = data_.a3;
    CriterionReport rep;
    rep.p = p;
    rep.a1 = a1; rep.a2 = a2; rep.a3 = a3;
    rep.legendre_D0 = legendre(data_.D0, p);

    bool p_div_P0 = mod_reduce(data_.P0, p) == 0;
    bool p_div_P0extra =
        p_div_P0 ||
        mod_reduce(data_.P0 * data_.P0 - 3 * data_.Q0, p) == 0;

    // (i) three roots, by brute force
    rep.verdicts["i"] = count_roots(a1, a2, a3, p) == 3;

    // (ii) p represented by some class in G(a1,a2,a3)
    if (data_.D1 >= 0) {
        rep.skipped["ii"] = "indefinite discriminant out of scope";
    } else if (rep.legendre_D0 != 1) {
        rep.verdicts["ii"] = false; // not represented by discriminant 4*D1
    } else {
        rep.verdicts["ii"] = group_->contains(class_of_prime(p, data_.D1));
    }

    // (iii) p | u_{p-2}(a1,a2,a3)
    if (p_div_P0)
        rep.skipped["iii"] = "p divides P0";
    else
        rep.verdicts["iii"] = u_mod(a1, a2, a3, p - 2, p) == 0;

    // (iv) p | u_p(0, -3(a1^2-3a2), 2a1^3-9a1a2+27a3)
    if (p_div_P0) {
        rep.skipped["iv"] = "p divides P0";
    } else {
        Int e = a1 * a1 - 3 * a2;
        rep.verdicts["iv"] = u_mod(0, -3 * e, -data_.P0, p, p) == 0;
    }

    // (v) s_{p+1}(a1,a2,a3) = a1^2 - 2a2
    rep.verdicts["v"] =
        s_mod(a1, a2, a3, p + 1, p) == mod_reduce(a1 * a1 - 2 * a2, p);

    std::uint64_t idx3 = (p % 3 == 1) ? (p - 1) / 3 : (p + 1) / 3;
    LucasPair uv = lucas_mod(data_.P0, data_.Q0, idx3, p);

    // (vi) p | U_{(p-(p|3))/3}(P0, Q0)
    if (p_div_P0)
        rep.skipped["vi"] = "p divides P0";
    else
        rep.verdicts["vi"] = uv.u == 0;

    // (vii) V_{(p-(p|3))/3}(P0, Q0) = 2(a1^2-3a2)^{(1-(p|3))/2}
    {
        Int e = a1 * a1 - 3 * a2;
        std::uint64_t rhs = (p % 3 == 1)
                                ? 2 % p
                                : mulmod(2 % p, mod_reduce(e, p), p);
        rep.verdicts["vii"] = uv.v == rhs;
    }

    // (vii2) U_{2 floor(p/3) + 1}(P0, Q0) = (-Q0)^{floor(p/3)}
    if (p_div_P0extra) {
        rep.skipped["vii2"] = "p divides P0*(P0^2-3Q0)";
    } else {
        std::uint64_t fl = p / 3;
        LucasPair uv2 = lucas_mod(data_.P0, data_.Q0, 2 * fl + 1, p);
        std::uint64_t rhs = powmod(mod_reduce(-data_.Q0, p), fl, p);
        rep.verdicts["vii2"] = uv2.u == rhs;
    }

    // (viii) sum_{k=1}^{floor(p/3)} C(3k,k) (P0^2/27Q0)^k = 0
    if (p_div_P0extra)
        rep.skipped["viii"] = "p divides P0*(P0^2-3Q0)";
    else
        rep.verdicts["viii"] = binomial_sum(data_.P0, data_.Q0, p) == 0;

    // (ix) p | u_p(0, a2, a3), only for depressed cubics
    if (a1 != 0)
        rep.skipped["ix"] = "a1 != 0";
    else if (p_div_P0)
        rep.skipped["ix"] = "p divides P0";
    else
        rep.verdicts["ix"] = u_mod(0, a2, a3, p, p) == 0;

    return rep;
}

CriterionReport evaluate_statements(const Int& a1, const Int& a2,
                                    const Int& a3, std::uint64_t p)
{
    return CriterionEvaluator(a1, a2, a3).evaluate(p);
}

bool cubic_residue_test(std::uint64_t p, const Int& value)
{
    if (!is_prime_u64(p) || p % 3 != 1)
        throw std::invalid_argument("cubic_residue_test requires a prime p = 1 (mod 3)");
    std::uint64_t v = mod_reduce(value, p);
    if (v == 0)
        throw std::invalid_argument("cubic_residue_test requires p not dividing value");
    return powmod(v, (p - 1) / 3, p) == 1;
}

bool surd_cubic_residue(const Int& P, const Int& D, std::uint64_t p)
{
    if (!is_prime_u64(p) || p % 3 != 1)
        throw std::invalid_argument("surd test requires a prime p = 1 (mod 3)");
    Int Q = P * P + 27 * D;
    if (mod_reduce(Q, p) == 0)
        throw std::invalid_argument("surd test requires p not dividing Q");
    if (legendre(P * P - Q, p) != 1)
        throw std::invalid_argument("surd test requires (P^2-Q/p) = 1");
    std::uint64_t r = sqrt_mod_p(P * P - Q, p);
    std::uint64_t qm = mod_reduce(Q, p);
    std::uint64_t pm = mod_reduce(P, p);
    bool res = cubic_residue_test(p, Int(mulmod(qm, addmod(pm, r, p), p)));
    // Root independence: the other square root must give the same answer.
    bool res2 =
        cubic_residue_test(p, Int(mulmod(qm, submod(pm, r, p), p)));
    if (res != res2)
        throw std::logic_error("surd residue depends on the square root choice");
    return res;
}

bool surd_criterion_check(const Subgroup& G, std::uint64_t p)
{
    bool lhs = surd_cubic_residue(G.P, G.D, p);
    bool rhs = G.contains(class_of_prime(p, G.D));
    return lhs == rhs;
}

bool surd_criterion_check(const Int& P, const Int& D, std::uint64_t p)
{
    if (D >= 0)
        throw std::invalid_argument("indefinite discriminant out of scope");
    return surd_criterion_check(subgroup_G(P, D), p);
}

} // namespace cubicforms
