#include "cubicforms/jsonio.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubicforms {

using nlohmann::json;

ClassTriple to_triple(const FormClass& K)
{
    return {to_int64(K.rep.a), to_int64(K.rep.bmid), to_int64(K.rep.c)};
}

ClassGroupReport make_classgroup_report(const ClassGroup& G)
{
    ClassGroupReport r;
    r.D = G.D.str();
    r.disc = Int(4 * G.D).str();
    for (const auto& K : G.classes)
        r.classes.push_back(to_triple(K));
    return r;
}

SubgroupReport make_subgroup_report(const CubicData& d, const Subgroup& G,
                                    std::optional<std::uint64_t> witness)
{
    SubgroupReport r;
    r.a1 = d.a1.str(); r.a2 = d.a2.str(); r.a3 = d.a3.str();
    r.P0 = d.P0.str(); r.Q0 = d.Q0.str(); r.D0 = d.D0.str();
    r.P1 = d.P1.str(); r.Q1 = d.Q1.str(); r.D1 = d.D1.str();
    r.q0 = d.q0.str(); r.q1 = d.q1;
    r.h = G.ambient.h();
    for (const auto& K : G.members)
        r.members.push_back(to_triple(K));
    r.index = G.index();
    r.witness = witness;
    return r;
}

StatementReport make_statement_report(const CriterionReport& r)
{
    StatementReport s;
    s.p = r.p;
    s.a1 = r.a1.str(); s.a2 = r.a2.str(); s.a3 = r.a3.str();
    s.legendre_D0 = r.legendre_D0;
    s.verdicts = r.verdicts;
    s.skipped = r.skipped;
    s.consensus = r.consensus();
    return s;
}

void to_json(json& j, const ClassTriple& x)
{
    j = json::array({x.a, x.bmid, x.c});
}

void from_json(const json& j, ClassTriple& x)
{
    x.a = j.at(0).get<long long>();
    x.bmid = j.at(1).get<long long>();
    x.c = j.at(2).get<long long>();
}

void to_json(json& j, const ClassGroupReport& x)
{
    j = json{{"D", x.D}, {"disc", x.disc}, {"h", x.classes.size()},
             {"classes", x.classes}};
}

void from_json(const json& j, ClassGroupReport& x)
{
    j.at("D").get_to(x.D);
    j.at("disc").get_to(x.disc);
    j.at("classes").get_to(x.classes);
}

void to_json(json& j, const SubgroupReport& x)
{
    j = json{{"a1", x.a1}, {"a2", x.a2}, {"a3", x.a3},
             {"P0", x.P0}, {"Q0", x.Q0}, {"D0", x.D0},
             {"P1", x.P1}, {"Q1", x.Q1}, {"D1", x.D1},
             {"q0", x.q0}, {"q1", x.q1},
             {"h", x.h}, {"members", x.members}, {"index", x.index}};
    if (x.witness)
        j["witness"] = *x.witness;
    else
        j["witness"] = nullptr;
}

void from_json(const json& j, SubgroupReport& x)
{
    j.at("a1").get_to(x.a1); j.at("a2").get_to(x.a2); j.at("a3").get_to(x.a3);
    j.at("P0").get_to(x.P0); j.at("Q0").get_to(x.Q0); j.at("D0").get_to(x.D0);
    j.at("P1").get_to(x.P1); j.at("Q1").get_to(x.Q1); j.at("D1").get_to(x.D1);
    j.at("q0").get_to(x.q0); j.at("q1").get_to(x.q1);
    j.at("h").get_to(x.h);
    j.at("members").get_to(x.members);
    j.at("index").get_to(x.index);
    if (j.at("witness").is_null())
        x.witness = std::nullopt;
    else
        x.witness = j.at("witness").get<std::uint64_t>();
}

void to_json(json& j, const StatementReport& x)
{
    j = json{{"p", x.p}, {"a1", x.a1}, {"a2", x.a2}, {"a3", x.a3},
             {"legendre_D0", x.legendre_D0},
             {"verdicts", x.verdicts}, {"skipped", x.skipped}};
    if (x.consensus)
        j["consensus"] = *x.consensus;
    else
        j["consensus"] = nullptr;
}

void from_json(const json& j, StatementReport& x)
{
    j.at("p").get_to(x.p);
    j.at("a1").get_to(x.a1); j.at("a2").get_to(x.a2); j.at("a3").get_to(x.a3);
    j.at("legendre_D0").get_to(x.legendre_D0);
    j.at("verdicts").get_to(x.verdicts);
    j.at("skipped").get_to(x.skipped);
    if (j.at("consensus").is_null())
        x.consensus = std::nullopt;
    else
        x.consensus = j.at("consensus").get<bool>();
}

void to_json(json& j, const ScanReport& x)
{
    j = json{{"a1", x.a1}, {"a2", x.a2}, {"a3", x.a3},
             {"pmin", x.pmin}, {"pmax", x.pmax},
             {"primes_scanned", x.primes_scanned},
             {"skipped_primes", x.skipped_primes},
             {"mismatches", x.mismatches},
             {"three_root_primes", x.three_root_primes}};
}

void from_json(const json& j, ScanReport& x)
{
    j.at("a1").get_to(x.a1); j.at("a2").get_to(x.a2); j.at("a3").get_to(x.a3);
    j.at("pmin").get_to(x.pmin); j.at("pmax").get_to(x.pmax);
    j.at("primes_scanned").get_to(x.primes_scanned);
    j.at("skipped_primes").get_to(x.skipped_primes);
    j.at("mismatches").get_to(x.mismatches);
    j.at("three_root_primes").get_to(x.three_root_primes);
}

void to_json(json& j, const CubresEntry& x)
{
    j = json{{"p", x.p},
             {"surd_is_cubic_residue", x.surd_is_cubic_residue},
             {"in_kernel", x.in_kernel}};
}

void from_json(const json& j, CubresEntry& x)
{
    j.at("p").get_to(x.p);
    j.at("surd_is_cubic_residue").get_to(x.surd_is_cubic_residue);
    j.at("in_kernel").get_to(x.in_kernel);
}

void to_json(json& j, const CubresReport& x)
{
    j = json{{"P", x.P}, {"D", x.D}, {"pmin", x.pmin}, {"pmax", x.pmax},
             {"entries", x.entries}, {"all_agree", x.all_agree}};
}

void from_json(const json& j, CubresReport& x)
{
    j.at("P").get_to(x.P);
    j.at("D").get_to(x.D);
    j.at("pmin").get_to(x.pmin);
    j.at("pmax").get_to(x.pmax);
    j.at("entries").get_to(x.entries);
    j.at("all_agree").get_to(x.all_agree);
}

json classgroup_to_cache_json(const ClassGroup& G)
{
    json classes = json::array();
    for (const auto& K : G.classes)
        classes.push_back(json::array(
            {K.rep.a.str(), K.rep.bmid.str(), K.rep.c.str()}));
    return json{{"D", G.D.str()}, {"classes", classes}};
}

ClassGroup classgroup_from_cache_json(const json& j)
{
    ClassGroup G;
    G.D = Int(j.at("D").get<std::string>());
    for (const auto& e : j.at("classes")) {
        QuadForm f(Int(e.at(0).get<std::string>()),
                   Int(e.at(1).get<std::string>()),
                   Int(e.at(2).get<std::string>()));
        if (!is_reduced(f))
            throw std::invalid_argument("cache entry is not a reduced form");
        if (f.quarter_disc() != G.D)
            throw std::invalid_argument("cache entry has wrong discriminant");
        G.classes.push_back(FormClass{f});
    }
    std::sort(G.classes.begin(), G.classes.end());
    return G;
}

} // namespace cubicforms
