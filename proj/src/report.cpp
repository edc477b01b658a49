#include "nda/report.hpp"

#include <sstream>

namespace nda {

namespace {

nlohmann::json nats_to_json(const std::vector<Nat>& xs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Nat& x : xs) arr.push_back(x.to_decimal());
    return arr;
}

std::vector<Nat> nats_from_json(const nlohmann::json& arr) {
    std::vector<Nat> out;
    for (const auto& e : arr) out.push_back(Nat::from_decimal(e.get<std::string>()));
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string witness_text(const std::vector<Nat>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += " ";
        out += xs[i].to_decimal();
    }
    return out;
}

}  // namespace

OpTable make_op_table(const ProjectiveArithmetic& A, const std::string& op, const Nat& bound) {
    if (op != "add" && op != "mul") throw std::invalid_argument("op must be add or mul");
    if (!bound.fits_ulong() || bound.to_ulong() > 2000)
        throw std::invalid_argument("table bound too large to render");
    unsigned long B = bound.to_ulong();
    OpTable t;
    t.gen = A.spec_text();
    t.op = op;
    t.bound = bound;
    t.cells.resize(B + 1);
    for (unsigned long a = 0; a <= B; ++a) {
        t.cells[a].reserve(B + 1);
        for (unsigned long b = 0; b <= B; ++b)
            t.cells[a].push_back(op == "add" ? A.add(Nat(a), Nat(b)) : A.mul(Nat(a), Nat(b)));
    }
    return t;
}

nlohmann::json to_json(const LawVerdict& v) {
    return nlohmann::json{{"law_id", std::string(law_name(v.law_id))},
                          {"gen", v.subject},
                          {"bound", v.bound.to_decimal()},
                          {"arity", v.arity},
                          {"holds", v.holds},
                          {"witness", nats_to_json(v.witness)},
                          {"notes", v.notes}};
}

LawVerdict verdict_from_json(const nlohmann::json& j) {
    LawVerdict v;
    v.law_id = law_from_name(j.at("law_id").get<std::string>());
    v.subject = j.at("gen").get<std::string>();
    v.bound = Nat::from_decimal(j.at("bound").get<std::string>());
    v.arity = j.at("arity").get<int>();
    v.holds = j.at("holds").get<bool>();
    v.witness = nats_from_json(j.at("witness"));
    v.notes = j.at("notes").get<std::string>();
    return v;
}

nlohmann::json to_json(const OpTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.cells) rows.push_back(nats_to_json(row));
    return nlohmann::json{
        {"gen", t.gen}, {"op", t.op}, {"bound", t.bound.to_decimal()}, {"cells", rows}};
}

OpTable table_from_json(const nlohmann::json& j) {
    OpTable t;
    t.gen = j.at("gen").get<std::string>();
    t.op = j.at("op").get<std::string>();
    t.bound = Nat::from_decimal(j.at("bound").get<std::string>());
    for (const auto& row : j.at("cells")) t.cells.push_back(nats_from_json(row));
    return t;
}

nlohmann::json to_json(const MachineInfinityReport& r) {
    return nlohmann::json{
        {"gen", r.subject}, {"bound", r.bound.to_decimal()}, {"members", nats_to_json(r.members)}};
}

MachineInfinityReport mi_from_json(const nlohmann::json& j) {
    MachineInfinityReport r;
    r.subject = j.at("gen").get<std::string>();
    r.bound = Nat::from_decimal(j.at("bound").get<std::string>());
    r.members = nats_from_json(j.at("members"));
    return r;
}

std::string render_markdown(const OpTable& t) {
    std::ostringstream os;
    os << "Operation `" << t.op << "` in the arithmetic generated by `" << t.gen << "`\n\n";
    os << "| " << (t.op == "add" ? "+" : "*") << " |";
    for (std::size_t b = 0; b < t.cells.size(); ++b) os << " " << b << " |";
    os << "\n|---|";
    for (std::size_t b = 0; b < t.cells.size(); ++b) os << "---|";
    os << "\n";
    for (std::size_t a = 0; a < t.cells.size(); ++a) {
        os << "| **" << a << "** |";
        for (const Nat& cell : t.cells[a]) os << " " << cell << " |";
        os << "\n";
    }
    return os.str();
}

std::string render_csv(const OpTable& t) {
    std::ostringstream os;
    os << t.op;
    for (std::size_t b = 0; b < t.cells.size(); ++b) os << "," << b;
    os << "\n";
    for (std::size_t a = 0; a < t.cells.size(); ++a) {
        os << a;
        for (const Nat& cell : t.cells[a]) os << "," << cell;
        os << "\n";
    }
    return os.str();
}

std::string render_markdown(const std::vector<LawVerdict>& vs) {
    std::ostringstream os;
    os << "| law | gen | bound | holds | witness | notes |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& v : vs) {
        os << "| " << law_name(v.law_id) << " | `" << v.subject << "` | " << v.bound << " | "
           << (v.holds ? "yes" : "**no**") << " | " << witness_text(v.witness) << " | "
           << v.notes << " |\n";
    }
    return os.str();
}

std::string render_csv(const std::vector<LawVerdict>& vs) {
    std::ostringstream os;
    os << "law_id,gen,bound,arity,holds,witness,notes\n";
    for (const auto& v : vs) {
        os << law_name(v.law_id) << "," << csv_escape(v.subject) << "," << v.bound << ","
           << v.arity << "," << (v.holds ? "true" : "false") << "," << witness_text(v.witness)
           << "," << csv_escape(v.notes) << "\n";
    }
    return os.str();
}

std::string render_members(const std::vector<Nat>& members) {
    if (members.empty()) return "(empty)";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < members.size()) {
        std::size_t j = i;
        while (j + 1 < members.size() && members[j + 1] == members[j] + Nat(1u)) ++j;
        if (!first) os << ", ";
        first = false;
        if (j > i + 1)
            os << members[i] << ".." << members[j];
        else if (j == i + 1)
            os << members[i] << ", " << members[j];
        else
            os << members[i];
        i = j + 1;
    }
    return os.str();
}

}  // namespace nda
