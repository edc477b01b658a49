#pragma once

#include "nda/laws.hpp"
#include "nda/verdict.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nda {

/// One rendered operation table: cell (a, b) = op(a, b) for a, b <= bound.
struct OpTable {
    std::string gen;
    std::string op;  // "add" | "mul"
    Nat bound;
    std::vector<std::vector<Nat>> cells;

    bool operator==(const OpTable&) const = default;
};

OpTable make_op_table(const ProjectiveArithmetic& A, const std::string& op, const Nat& bound);

// JSON carries every Nat as a decimal string so values of any magnitude
// round-trip exactly. to/from pairs are inverses; the round trip is the
// stability contract for report files.
nlohmann::json to_json(const LawVerdict& v);
LawVerdict verdict_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OpTable& t);
OpTable table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MachineInfinityReport& r);
MachineInfinityReport mi_from_json(const nlohmann::json& j);

std::string render_markdown(const OpTable& t);
std::string render_csv(const OpTable& t);

std::string render_markdown(const std::vector<LawVerdict>& vs);
std::string render_csv(const std::vector<LawVerdict>& vs);

/// Members compressed into runs: "1..4, 7, 9..12" (empty set -> "(empty)").
std::string render_members(const std::vector<Nat>& members);

}  // namespace nda
