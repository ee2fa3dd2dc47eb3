#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubicforms/jsonio.hpp"

using namespace cubicforms;
using nlohmann::json;

namespace {

template <typename T>
void check_roundtrip(const T& x)
{
    json j = x;
    std::string printed = j.dump();
    json parsed = json::parse(printed);
    CHECK(parsed == j);
    T back = parsed.get<T>();
    CHECK(back == x);
}

} // namespace

TEST_CASE("class group report round-trips")
{
    ClassGroup G = enumerate_class_group(Int(-26));
    ClassGroupReport r = make_classgroup_report(G);
    CHECK(r.classes.size() == 6);
    CHECK(r.disc == "-104");
    check_roundtrip(r);
}

TEST_CASE("subgroup report round-trips")
{
    CubicData d = cubic_data(Int(0), Int(-1), Int(2));
    Subgroup G = subgroup_for_cubic(Int(0), Int(-1), Int(2));
    auto w = witness_index3(d.P1, d.D1, 100);
    SubgroupReport r = make_subgroup_report(d, G, w);
    CHECK(r.members.size() == 2);
    CHECK(r.index == 3);
    CHECK(r.witness.has_value());
    check_roundtrip(r);

    SubgroupReport no_witness = make_subgroup_report(d, G, std::nullopt);
    check_roundtrip(no_witness);
}

TEST_CASE("statement report round-trips")
{
    StatementReport r =
        make_statement_report(evaluate_statements(Int(0), Int(-1), Int(2), 31));
    CHECK(r.consensus.has_value());
    CHECK(*r.consensus);
    check_roundtrip(r);

    StatementReport gated =
        make_statement_report(evaluate_statements(Int(2), Int(1), Int(3), 79));
    CHECK(!gated.skipped.empty());
    check_roundtrip(gated);
}

TEST_CASE("scan and cubres reports round-trip")
{
    ScanReport s;
    s.a1 = "0"; s.a2 = "-1"; s.a3 = "2";
    s.pmin = 5; s.pmax = 2000;
    s.primes_scanned = 299;
    s.skipped_primes = {13};
    s.mismatches = 0;
    s.three_root_primes = {31, 79, 139};
    check_roundtrip(s);

    CubresReport c;
    c.P = "28"; c.D = "-29";
    c.pmin = 5; c.pmax = 1000;
    c.entries = {{13, false, false}, {277, true, true}};
    c.all_agree = true;
    check_roundtrip(c);
}

TEST_CASE("class group cache json reconstructs the group")
{
    ClassGroup G = enumerate_class_group(Int(-231));
    json j = classgroup_to_cache_json(G);
    ClassGroup back = classgroup_from_cache_json(j);
    CHECK(back.D == G.D);
    REQUIRE(back.h() == G.h());
    for (std::size_t i = 0; i < G.h(); ++i)
        CHECK(back.classes[i] == G.classes[i]);

    json bad = j;
    bad["classes"][0][0] = "7";
    CHECK_THROWS(classgroup_from_cache_json(bad));
}
