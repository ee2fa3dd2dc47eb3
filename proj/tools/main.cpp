#include "cubicforms/criteria.hpp"
#include "cubicforms/jsonio.hpp"
#include "cubicforms/modarith.hpp"
#include "cubicforms/parallel.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace cubicforms;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

constexpr long long kCoeffBound = 1000000;

struct GlobalOpts {
    std::string format = "text";
    std::string cache_dir;
    unsigned threads = 0;
    long long seed = 0;
};

void check_coeff(long long v)
{
    if (v > kCoeffBound || v < -kCoeffBound)
        throw CLI::ValidationError("coefficients must satisfy |a_i| <= 10^6");
}

void check_prime_range(std::uint64_t pmin, std::uint64_t pmax)
{
    if (pmin < 5 || pmax < pmin)
        throw CLI::ValidationError("prime range must satisfy pmax >= pmin >= 5");
}

ClassGroup cached_class_group(const GlobalOpts& g, const Int& D)
{
    if (g.cache_dir.empty())
        return enumerate_class_group(D);
    std::filesystem::path dir(g.cache_dir);
    std::filesystem::create_directories(dir);
    std::filesystem::path file = dir / ("H_" + Int(4 * D).str() + ".json");
    if (std::filesystem::exists(file)) {
        std::ifstream in(file);
        json j;
        in >> j;
        ClassGroup G = classgroup_from_cache_json(j);
        if (G.D == D)
            return G;
    }
    ClassGroup G = enumerate_class_group(D);
    std::ofstream out(file);
    out << classgroup_to_cache_json(G).dump(2) << "\n";
    return G;
}

void emit_json(const GlobalOpts& g, const std::string& command,
               json params, const json& results)
{
    params["seed"] = g.seed;
    json j{{"command", command}, {"params", params}, {"results", results}};
    std::cout << j.dump(2) << "\n";
}

int run_classgroup(const GlobalOpts& g, long long D)
{
    if (D >= 0)
        throw CLI::ValidationError("-D must be negative");
    ClassGroup G = cached_class_group(g, Int(D));
    ClassGroupReport rep = make_classgroup_report(G);
    if (g.format == "json") {
        emit_json(g, "classgroup", json{{"D", D}}, json(rep));
        return kExitOk;
    }
    std::cout << "discriminant 4D = " << 4 * D << "  (D = " << D << ")\n";
    std::cout << "h = " << G.h() << "\n";
    for (const auto& K : G.classes)
        std::cout << to_string(K) << "\n";
    return kExitOk;
}

int run_subgroup(const GlobalOpts& g, long long a1, long long a2, long long a3)
{
    CubicData d = cubic_data(Int(a1), Int(a2), Int(a3));
    if (d.D1 >= 0)
        throw std::invalid_argument("indefinite discriminant out of scope");
    Subgroup G = subgroup_G(d.P1, d.D1, cached_class_group(g, d.D1));
    auto witness = witness_index3(d.P1, d.D1, 1000);
    SubgroupReport rep = make_subgroup_report(d, G, witness);
    if (g.format == "json") {
        emit_json(g, "subgroup",
                  json{{"a1", a1}, {"a2", a2}, {"a3", a3}}, json(rep));
        return kExitOk;
    }
    std::cout << "cubic: x^3 + (" << a1 << ")x^2 + (" << a2 << ")x + (" << a3
              << ")\n";
    std::cout << "P0 = " << d.P0 << ", Q0 = " << d.Q0 << ", D0 = " << d.D0
              << "\n";
    std::cout << "P1 = " << d.P1 << ", Q1 = " << d.Q1 << ", D1 = " << d.D1
              << ", q1 = " << d.q1 << ", q0 = " << d.q0 << "\n";
    std::cout << "h(4*D1) = " << G.ambient.h() << "\n";
    std::cout << "members (" << G.members.size() << "):\n";
    for (const auto& K : G.members)
        std::cout << to_string(K) << "\n";
    std::cout << "index = " << G.index() << "\n";
    if (witness)
        std::cout << "witness prime = " << *witness << "\n";
    else
        std::cout << "witness prime = none found (index in {1,3})\n";
    return kExitOk;
}

int run_report(const GlobalOpts& g, long long a1, long long a2, long long a3,
               std::uint64_t p)
{
    CriterionReport r = evaluate_statements(Int(a1), Int(a2), Int(a3), p);
    StatementReport rep = make_statement_report(r);
    if (g.format == "json") {
        emit_json(g, "report",
                  json{{"a1", a1}, {"a2", a2}, {"a3", a3}, {"p", p}},
                  json(rep));
        return r.consistent() ? kExitOk : kExitMismatch;
    }
    std::cout << "p = " << p << "  legendre(D0|p) = " << r.legendre_D0 << "\n";
    for (const char* label : kStatementLabels) {
        auto v = r.verdicts.find(label);
        if (v != r.verdicts.end()) {
            std::cout << "  (" << label << ") "
                      << (v->second ? "true" : "false") << "\n";
        } else {
            auto s = r.skipped.find(label);
            if (s != r.skipped.end())
                std::cout << "  (" << label << ") skipped: " << s->second
                          << "\n";
        }
    }
    if (auto c = r.consensus())
        std::cout << "consensus: " << (*c ? "three roots" : "not three roots")
                  << "\n";
    else
        std::cout << "consensus: DISAGREEMENT (this is a bug)\n";
    return r.consistent() ? kExitOk : kExitMismatch;
}

int run_scan(const GlobalOpts& g, long long a1, long long a2, long long a3,
             std::uint64_t pmin, std::uint64_t pmax)
{
    CriterionEvaluator ev{Int(a1), Int(a2), Int(a3)};
    const CubicData& d = ev.data();

    std::vector<std::uint64_t> primes;
    std::vector<std::uint64_t> gated;
    for (std::uint64_t p : primes_in_range(std::max<std::uint64_t>(pmin, 5), pmax)) {
        if (mod_reduce(d.D0 * d.Q0, p) == 0)
            gated.push_back(p);
        else
            primes.push_back(p);
    }

    struct Row {
        std::uint64_t p;
        bool consistent;
        bool three;
    };
    std::vector<Row> rows = ordered_parallel_map<Row>(
        primes,
        [&](std::uint64_t p) -> Row {
            CriterionReport r = ev.evaluate(p);
            bool ok = r.consistent();
            bool three = ok && r.consensus().value_or(false);
            return {p, ok, three};
        },
        g.threads);

    ScanReport rep;
    rep.a1 = std::to_string(a1);
    rep.a2 = std::to_string(a2);
    rep.a3 = std::to_string(a3);
    rep.pmin = pmin;
    rep.pmax = pmax;
    rep.primes_scanned = rows.size();
    rep.skipped_primes = gated;
    for (const Row& r : rows) {
        if (!r.consistent)
            ++rep.mismatches;
        if (r.three)
            rep.three_root_primes.push_back(r.p);
    }

    if (g.format == "json") {
        emit_json(g, "scan",
                  json{{"a1", a1}, {"a2", a2}, {"a3", a3},
                       {"pmin", pmin}, {"pmax", pmax}},
                  json(rep));
    } else {
        std::cout << "scan x^3 + (" << a1 << ")x^2 + (" << a2 << ")x + (" << a3
                  << "), primes in [" << pmin << ", " << pmax << "]\n";
        std::cout << "primes scanned: " << rep.primes_scanned
                  << "  (gated out: " << gated.size() << ")\n";
        std::cout << "three-root primes (" << rep.three_root_primes.size()
                  << "):";
        for (std::uint64_t p : rep.three_root_primes)
            std::cout << " " << p;
        std::cout << "\n";
        std::cout << rep.mismatches << " mismatches\n";
    }
    return rep.mismatches == 0 ? kExitOk : kExitMismatch;
}

int run_cubres(const GlobalOpts& g, long long P, long long D,
               std::uint64_t pmin, std::uint64_t pmax)
{
    if (D >= 0)
        throw std::invalid_argument("indefinite discriminant out of scope");
    Subgroup G = subgroup_G(Int(P), Int(D), cached_class_group(g, Int(D)));
    Int Q = Int(P) * P + 27 * Int(D);

    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : primes_in_range(std::max<std::uint64_t>(pmin, 5), pmax)) {
        if (p % 3 != 1 || mod_reduce(Q, p) == 0)
            continue;
        if (legendre(Int(P) * P - Q, p) != 1)
            continue;
        primes.push_back(p);
    }

    std::vector<CubresEntry> entries = ordered_parallel_map<CubresEntry>(
        primes,
        [&](std::uint64_t p) -> CubresEntry {
            bool lhs = surd_cubic_residue(G.P, G.D, p);
            bool rhs = G.contains(class_of_prime(p, G.D));
            return {p, lhs, rhs};
        },
        g.threads);

    CubresReport rep;
    rep.P = std::to_string(P);
    rep.D = std::to_string(D);
    rep.pmin = pmin;
    rep.pmax = pmax;
    rep.entries = entries;
    rep.all_agree = true;
    for (const auto& e : entries)
        if (e.surd_is_cubic_residue != e.in_kernel)
            rep.all_agree = false;

    if (g.format == "json") {
        emit_json(g, "cubres",
                  json{{"P", P}, {"D", D}, {"pmin", pmin}, {"pmax", pmax}},
                  json(rep));
    } else {
        std::cout << "cubres P = " << P << ", D = " << D << ", Q = " << Q
                  << ", primes in [" << pmin << ", " << pmax << "]\n";
        for (const auto& e : entries)
            std::cout << "p = " << e.p << "  residue = "
                      << (e.surd_is_cubic_residue ? "true" : "false")
                      << "  kernel = " << (e.in_kernel ? "true" : "false")
                      << (e.surd_is_cubic_residue == e.in_kernel
                              ? ""
                              : "  MISMATCH")
                      << "\n";
        std::cout << "checked " << entries.size() << " primes, "
                  << (rep.all_agree ? "all agree" : "MISMATCHES FOUND") << "\n";
    }
    return rep.all_agree ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cubic congruences via binary quadratic forms"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--cache", g.cache_dir,
                   "directory for persisted class-group enumerations");
    app.add_option("--threads", g.threads,
                   "worker threads for scans (0 = hardware)");
    app.add_option("--seed", g.seed, "seed recorded with the output");

    long long D = 0, P = 0;
    long long a1 = 0, a2 = 0, a3 = 0;
    std::uint64_t p = 0, pmin = 5, pmax = 1000;

    auto* cg = app.add_subcommand("classgroup",
                                  "enumerate H(4D) for negative D");
    cg->add_option("-D", D, "quarter discriminant (negative)")->required();

    auto* sg = app.add_subcommand(
        "subgroup", "kernel subgroup attached to x^3+a1x^2+a2x+a3");
    sg->add_option("a1", a1)->required();
    sg->add_option("a2", a2)->required();
    sg->add_option("a3", a3)->required();

    auto* rp = app.add_subcommand("report",
                                  "per-prime equivalence report");
    rp->add_option("a1", a1)->required();
    rp->add_option("a2", a2)->required();
    rp->add_option("a3", a3)->required();
    rp->add_option("-p,--prime", p, "prime > 3")->required();

    auto* sc = app.add_subcommand(
        "scan", "audit the equivalences over a prime range");
    sc->add_option("a1", a1)->required();
    sc->add_option("a2", a2)->required();
    sc->add_option("a3", a3)->required();
    sc->add_option("--pmin", pmin)->capture_default_str();
    sc->add_option("--pmax", pmax)->capture_default_str();

    auto* cr = app.add_subcommand(
        "cubres", "surd cubic-residue criterion over a prime range");
    cr->add_option("P", P)->required();
    cr->add_option("D", D, "negative quarter discriminant")->required();
    cr->add_option("--pmin", pmin)->capture_default_str();
    cr->add_option("--pmax", pmax)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cg->parsed())
            return run_classgroup(g, D);
        if (sg->parsed()) {
            check_coeff(a1); check_coeff(a2); check_coeff(a3);
            return run_subgroup(g, a1, a2, a3);
        }
        if (rp->parsed()) {
            check_coeff(a1); check_coeff(a2); check_coeff(a3);
            return run_report(g, a1, a2, a3, p);
        }
        if (sc->parsed()) {
            check_coeff(a1); check_coeff(a2); check_coeff(a3);
            check_prime_range(pmin, pmax);
            return run_scan(g, a1, a2, a3, pmin, pmax);
        }
        if (cr->parsed()) {
            check_coeff(P); check_coeff(D);
            check_prime_range(pmin, pmax);
            return run_cubres(g, P, D, pmin, pmax);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
