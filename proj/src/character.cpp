#include "cubicforms/character.hpp"

#include "cubicforms/modarith.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cubicforms {

TwoCube two_cube_decompose(const Int& Q)
{
    if (Q == 0)
        throw std::invalid_argument("two_cube_decompose: Q must be nonzero");
    unsigned v = v2(Q);
    int q1 = static_cast<int>(v % 3);
    Int odd = Q / (Int(1) << v);
    auto root = cbrt_exact(odd);
    if (!root)
        throw std::invalid_argument("Q is not of the form 2^q1 * q0^3");
    Int q0 = (Int(1) << ((v - static_cast<unsigned>(q1)) / 3)) * *root;
    assert((Int(1) << static_cast<unsigned>(q1)) * q0 * q0 * q0 == Q);
    return {q0, q1};
}

CubicData cubic_data(const Int& a1, const Int& a2, const Int& a3)
{
    CubicData d;
    d.a1 = a1; d.a2 = a2; d.a3 = a3;
    d.P0 = -2 * a1 * a1 * a1 + 9 * a1 * a2 - 27 * a3;
    Int e = a1 * a1 - 3 * a2;
    d.Q0 = e * e * e;
    Int num = d.P0 * d.P0 - 4 * d.Q0;
    if (num % 27 != 0)
        throw std::logic_error("cubic data: 27 does not divide P0^2 - 4Q0");
    d.D0 = -num / 27;
    // cross-check against the expanded discriminant
    Int disc = a1 * a1 * a2 * a2 - 4 * a2 * a2 * a2 - 4 * a1 * a1 * a1 * a3 -
               27 * a3 * a3 + 18 * a1 * a2 * a3;
    if (disc != d.D0)
        throw std::logic_error("cubic data: discriminant mismatch");
    if (d.D0 == 0 || d.Q0 == 0)
        throw std::invalid_argument("degenerate cubic: D0*Q0 = 0");

    if (d.P0 % 2 == 0) {
        d.P1 = d.P0 / 2;
        d.Q1 = d.Q0;
        if (d.D0 % 4 != 0)
            throw std::logic_error("cubic data: 4 does not divide D0");
        d.D1 = d.D0 / 4;
    } else {
        d.P1 = d.P0;
        d.Q1 = 4 * d.Q0;
        d.D1 = d.D0;
    }
    if (d.P1 * d.P1 + 27 * d.D1 != d.Q1)
        throw std::logic_error("cubic data: P1^2 + 27 D1 != Q1");
    if (mod3(d.P1) == 0 && d.P1 % 27 != 0)
        throw std::logic_error("cubic data: P1 violates the 3-adic condition");
    TwoCube tc = two_cube_decompose(d.Q1);
    d.q0 = tc.q0;
    d.q1 = tc.q1;
    return d;
}

CubicCharacter::CubicCharacter(Int P, Int D) : P_(std::move(P)), D_(std::move(D))
{
    if (mod3(P_) == 0 && P_ % 27 != 0)
        throw std::invalid_argument("character requires P coprime to 3 or 27 | P");
    Q_ = P_ * P_ + 27 * D_;
    if (D_ == 0 || Q_ == 0)
        throw std::invalid_argument("character requires D*Q != 0");
    two_cube_decompose(Q_); // shape check
    M_ = abs_int(3 * D_ * Q_);
}

SymbolValue CubicCharacter::operator()(const FormClass& K) const
{
    auto it = rep_cache_.find(K);
    if (it == rep_cache_.end())
        it = rep_cache_.emplace(K, coprime_representative(K, M_)).first;
    const QuadForm& f = it->second;
    Int b = f.bmid / 2;
    // (P - 3b(1+2w)) = (P - 3b) - 6b*w
    EisensteinInt num{P_ - 3 * b, -6 * b};
    SymbolValue v = cubic_jacobi(num, EisensteinInt{f.a, 0});
    if (v == SymbolValue::Zero)
        throw std::logic_error("character value zero on a coprime representative");
    return v;
}

SymbolValue chi(const Int& P, const Int& D, const FormClass& K)
{
    return CubicCharacter(P, D)(K);
}

bool Subgroup::contains(const FormClass& K) const
{
    return std::binary_search(members.begin(), members.end(), K);
}

namespace {

template <typename Chi>
Subgroup build_kernel(ClassGroup ambient, Int P, Int D, Chi&& chi_fn)
{
    Subgroup G;
    G.P = std::move(P);
    G.D = std::move(D);
    for (const auto& K : ambient.classes) {
        SymbolValue v = chi_fn(K);
        G.chi_table.emplace(K, v);
        if (v == SymbolValue::One)
            G.members.push_back(K);
    }
    G.ambient = std::move(ambient);
    std::sort(G.members.begin(), G.members.end());
    if (G.chi_table.at(G.ambient.identity()) != SymbolValue::One)
        throw std::logic_error("character is not 1 on the identity class");
    std::size_t h = G.ambient.h(), k = G.members.size();
    if (k == 0 || h % k != 0 || (h / k != 1 && h / k != 3))
        throw std::logic_error("kernel index is not 1 or 3");
    return G;
}

} // namespace

Subgroup subgroup_G(const Int& P, const Int& D, ClassGroup ambient)
{
    if (ambient.D != D)
        throw std::invalid_argument("ambient group has wrong discriminant");
    CubicCharacter chi_fn(P, D);
    return build_kernel(std::move(ambient), P, D, chi_fn);
}

Subgroup subgroup_G(const Int& P, const Int& D)
{
    if (D >= 0)
        throw std::invalid_argument("indefinite discriminant out of scope");
    return subgroup_G(P, D, enumerate_class_group(D));
}

Subgroup subgroup_for_cubic(const Int& a1, const Int& a2, const Int& a3)
{
    CubicData d = cubic_data(a1, a2, a3);
    if (d.D1 >= 0)
        throw std::invalid_argument("indefinite discriminant out of scope");
    return subgroup_G(d.P1, d.D1);
}

Subgroup subgroup_depressed(const Int& a2, const Int& a3)
{
    Int s = 4 * a2 * a2 * a2 + 27 * a3 * a3;
    if (a2 == 0 || a3 == 0 || s == 0)
        throw std::invalid_argument("depressed subgroup: a2*a3*(4a2^3+27a3^2) = 0");
    if (s <= 0)
        throw std::invalid_argument("indefinite discriminant out of scope");

    // a3h = 2 a3 / (3 + (-1)^a3); equivalent standard data (P1, D1, Q1)
    // come from the cubic x^3 + a2 x + a3, and P1 = -27 a3h.
    CubicData d = cubic_data(Int(0), a2, a3);
    bool a3_even = a3 % 2 == 0;
    Int a3h = a3_even ? Int(a3 / 2) : a3;
    assert(d.P1 == -27 * a3h);
    assert(d.D1 == (a3_even ? Int(-s / 4) : Int(-s)));

    // Representatives are taken coprime to 3*D1*Q1 (as in the standard
    // character); the literal 3*a2*(4a2^3+27a3^2)/2^{1+(-1)^{a3}} modulus
    // misses the 2-part for odd a3, where the depressed symbol can vanish
    // on even leading coefficients.
    Int M = abs_int(3 * d.D1 * d.Q1);
    ClassGroup ambient = enumerate_class_group(d.D1);
    std::map<FormClass, QuadForm> cache;
    auto chi_dep = [&](const FormClass& K) {
        auto it = cache.find(K);
        if (it == cache.end())
            it = cache.emplace(K, coprime_representative(K, M)).first;
        const QuadForm& f = it->second;
        Int b = f.bmid / 2;
        EisensteinInt num{b - 3 * a3h, -6 * a3h};
        SymbolValue v = cubic_jacobi(num, EisensteinInt{f.a, 0});
        if (v == SymbolValue::Zero)
            throw std::logic_error("depressed character value zero");
        return v;
    };
    return build_kernel(std::move(ambient), d.P1, d.D1, chi_dep);
}

std::optional<std::uint64_t> witness_index3(const Int& P, const Int& D,
                                            std::uint64_t bound)
{
    Int Q = P * P + 27 * D;
    Int bad = 3 * D * P * Q;
    for (std::uint64_t p0 : primes_in_range(3, bound)) {
        if (mod_reduce(bad, p0) == 0)
            continue;
        std::uint64_t d = mod_reduce(D, p0);
        std::uint64_t q = mod_reduce(Q, p0);
        bool solvable = false;
        for (std::uint64_t x = 0; x < p0 && !solvable; ++x) {
            std::uint64_t lhs = submod(
                mulmod(d, powmod(x, 3, p0), p0),
                addmod(mulmod(q, x, p0), mulmod(2 % p0, q, p0), p0), p0);
            solvable = lhs == 0;
        }
        if (!solvable)
            return p0;
    }
    return std::nullopt;
}

} // namespace cubicforms
