#ifndef CUBICFORMS_JSONIO_HPP
#define CUBICFORMS_JSONIO_HPP

#include "cubicforms/character.hpp"
#include "cubicforms/criteria.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cubicforms {

/*
 * Report types behind the CLI, with lossless JSON round-trips.
 * Unbounded integers travel as decimal strings, small ones as numbers.
 */

struct ClassTriple {
    long long a = 0, bmid = 0, c = 0;
    bool operator==(const ClassTriple&) const = default;
};

ClassTriple to_triple(const FormClass& K);

struct ClassGroupReport {
    std::string D;   // discriminant is 4D
    std::string disc;
    std::vector<ClassTriple> classes;
    bool operator==(const ClassGroupReport&) const = default;
};

struct SubgroupReport {
    std::string a1, a2, a3;
    std::string P0, Q0, D0, P1, Q1, D1, q0;
    int q1 = 0;
    std::uint64_t h = 0;
    std::vector<ClassTriple> members;
    std::uint64_t index = 0;
    std::optional<std::uint64_t> witness;
    bool operator==(const SubgroupReport&) const = default;
};

struct StatementReport {
    std::uint64_t p = 0;
    std::string a1, a2, a3;
    int legendre_D0 = 0;
    std::map<std::string, bool> verdicts;
    std::map<std::string, std::string> skipped;
    std::optional<bool> consensus;
    bool operator==(const StatementReport&) const = default;
};

struct ScanReport {
    std::string a1, a2, a3;
    std::uint64_t pmin = 0, pmax = 0;
    std::uint64_t primes_scanned = 0;
    std::vector<std::uint64_t> skipped_primes; // failed the D0*Q0 gate
    std::uint64_t mismatches = 0;
    std::vector<std::uint64_t> three_root_primes;
    bool operator==(const ScanReport&) const = default;
};

struct CubresEntry {
    std::uint64_t p = 0;
    bool surd_is_cubic_residue = false;
    bool in_kernel = false;
    bool operator==(const CubresEntry&) const = default;
};

struct CubresReport {
    std::string P, D;
    std::uint64_t pmin = 0, pmax = 0;
    std::vector<CubresEntry> entries;
    bool all_agree = false;
    bool operator==(const CubresReport&) const = default;
};

ClassGroupReport make_classgroup_report(const ClassGroup& G);
SubgroupReport make_subgroup_report(const CubicData& d, const Subgroup& G,
                                    std::optional<std::uint64_t> witness);
StatementReport make_statement_report(const CriterionReport& r);

void to_json(nlohmann::json& j, const ClassTriple& x);
void from_json(const nlohmann::json& j, ClassTriple& x);
void to_json(nlohmann::json& j, const ClassGroupReport& x);
void from_json(const nlohmann::json& j, ClassGroupReport& x);
void to_json(nlohmann::json& j, const SubgroupReport& x);
void from_json(const nlohmann::json& j, SubgroupReport& x);
void to_json(nlohmann::json& j, const StatementReport& x);
void from_json(const nlohmann::json& j, StatementReport& x);
void to_json(nlohmann::json& j, const ScanReport& x);
void from_json(const nlohmann::json& j, ScanReport& x);
void to_json(nlohmann::json& j, const CubresEntry& x);
void from_json(const nlohmann::json& j, CubresEntry& x);
void to_json(nlohmann::json& j, const CubresReport& x);
void from_json(const nlohmann::json& j, CubresReport& x);

// Class-group cache files: {"D": "...", "classes": [[a,2b,c], ...]},
// keyed by discriminant.
nlohmann::json classgroup_to_cache_json(const ClassGroup& G);
ClassGroup classgroup_from_cache_json(const nlohmann::json& j);

} // namespace cubicforms

#endif
