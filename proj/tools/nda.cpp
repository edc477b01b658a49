// nda — non-Diophantine projective arithmetic toolkit.
//
// Subcommands: table, eval, laws, relations, demo. Exit codes are a stable
// contract: 0 success / all laws hold, 1 law failure, 2 usage or parse error.

#include <CLI11.hpp>

#include "nda/errors.hpp"
#include "nda/expr.hpp"
#include "nda/report.hpp"

#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nda::Nat;
using nda::ProjectiveArithmetic;

ProjectiveArithmetic load_arithmetic(const std::string& gen_text) {
    return ProjectiveArithmetic::make(nda::parse_generator_spec(gen_text), Nat(1000u));
}

int run_table(const std::string& gen, const std::string& op, unsigned long bound,
              const std::string& format) {
    auto A = load_arithmetic(gen);
    auto t = nda::make_op_table(A, op, Nat(bound));
    if (format == "json")
        std::cout << nda::to_json(t).dump(2) << "\n";
    else if (format == "csv")
        std::cout << nda::render_csv(t);
    else
        std::cout << nda::render_markdown(t);
    return 0;
}

int run_eval(const std::string& gen, const std::string& expr_text, bool unicode, bool nary) {
    auto A = load_arithmetic(gen);
    auto expr = nda::parse_expression(expr_text);
    Nat result = nary ? nda::evaluate_nary(*expr, A) : nda::evaluate(*expr, A);
    std::cout << nda::format_element(result, unicode) << "\n";
    return 0;
}

int run_laws(const std::string& gen, const std::string& law, int nary, unsigned long bound,
             const std::string& format) {
    auto A = load_arithmetic(gen);
    std::vector<nda::LawRequest> requests;
    if (law == "all") {
        requests = nda::standard_law_suite();
        for (auto& r : requests) r.arity = nary;
    } else {
        requests.push_back({.id = nda::law_from_name(law), .arity = nary});
    }
    std::vector<nda::LawVerdict> verdicts;
    verdicts.reserve(requests.size());
    for (const auto& r : requests) verdicts.push_back(nda::run_law(A, r, Nat(bound)));

    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : verdicts) arr.push_back(nda::to_json(v));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << nda::render_csv(verdicts);
    } else {
        std::cout << nda::render_markdown(verdicts);
    }
    for (const auto& v : verdicts)
        if (!v.holds) return 1;
    return 0;
}

int run_relations(const std::string& gen, const std::string& relation, unsigned long bound,
                  const std::string& format) {
    auto A = load_arithmetic(gen);
    bool ml = relation == "ml";
    std::vector<std::pair<unsigned long, unsigned long>> pairs;
    for (unsigned long a = 0; a <= bound; ++a)
        for (unsigned long b = 0; b <= bound; ++b) {
            bool rel = ml ? A.much_less(Nat(a), Nat(b)) : A.much_much_less(Nat(a), Nat(b));
            if (rel) pairs.emplace_back(a, b);
        }

    // Maximal ascending chains: follow strictly increasing related pairs
    // from elements without a predecessor; capped to keep output sane.
    std::vector<std::vector<unsigned long>> nexts(bound + 1);
    std::vector<bool> has_pred(bound + 1, false);
    for (auto [a, b] : pairs)
        if (a < b) {
            nexts[a].push_back(b);
            has_pred[b] = true;
        }
    std::vector<std::vector<unsigned long>> chains;
    const std::size_t chain_cap = 1000;
    std::vector<unsigned long> path;
    std::function<void()> dfs = [&] {
        if (chains.size() >= chain_cap) return;
        const auto& ns = nexts[path.back()];
        if (ns.empty()) {
            if (path.size() > 1) chains.push_back(path);
            return;
        }
        for (unsigned long b : ns) {
            if (chains.size() >= chain_cap) return;
            path.push_back(b);
            dfs();
            path.pop_back();
        }
    };
    for (unsigned long a = 0; a <= bound; ++a)
        if (!has_pred[a] && !nexts[a].empty()) {
            path = {a};
            dfs();
        }

    const char* sym = ml ? "<<" : "<<<";
    if (format == "json") {
        nlohmann::json jp = nlohmann::json::array();
        for (auto [a, b] : pairs) jp.push_back({std::to_string(a), std::to_string(b)});
        nlohmann::json jc = nlohmann::json::array();
        for (const auto& ch : chains) {
            nlohmann::json row = nlohmann::json::array();
            for (auto x : ch) row.push_back(std::to_string(x));
            jc.push_back(row);
        }
        std::cout << nlohmann::json{{"gen", A.spec_text()},
                                    {"relation", ml ? "ml" : "mml"},
                                    {"bound", std::to_string(bound)},
                                    {"pairs", jp},
                                    {"chains", jc}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    if (format == "csv") {
        std::cout << "a,b\n";
        for (auto [a, b] : pairs) std::cout << a << "," << b << "\n";
        return 0;
    }
    std::cout << "Relation " << sym << " in the arithmetic generated by `" << A.spec_text()
              << "` up to " << bound << "\n\n";
    std::cout << "Related pairs (" << pairs.size() << "):\n";
    for (auto [a, b] : pairs) std::cout << "  " << a << " " << sym << " " << b << "\n";
    std::cout << "\nMaximal ascending chains" << (chains.size() >= chain_cap ? " (truncated)" : "")
              << ":\n";
    for (const auto& ch : chains) {
        std::cout << "  ";
        for (std::size_t i = 0; i < ch.size(); ++i) {
            if (i) std::cout << " " << sym << " ";
            std::cout << ch[i];
        }
        std::cout << "\n";
    }
    return 0;
}

int run_demo(const std::string& gen, unsigned long bound, const std::string& format) {
    auto A = load_arithmetic(gen);
    auto rep = nda::machine_infinity_demo(A, Nat(bound));
    if (format == "json") {
        std::cout << nda::to_json(rep).dump(2) << "\n";
        return 0;
    }
    if (format == "csv") {
        std::cout << "member\n";
        for (const auto& m : rep.members) std::cout << m << "\n";
        return 0;
    }
    std::cout << "Machine-infinity demo for `" << rep.subject << "` up to " << bound << "\n\n";
    std::cout << "Elements M with M + 1 = M: " << nda::render_members(rep.members) << "\n\n";
    if (rep.members.empty())
        std::cout << "No element absorbs a unit here; the fixed-point axiom would "
                     "contradict this arithmetic.\n";
    else
        std::cout << "Within this arithmetic M + 1 = M is an ordinary truth (1 is "
                     "negligible against M), not a contradiction.\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-Diophantine projective arithmetic toolkit"};
    app.require_subcommand(1);

    std::string gen, op = "add", format = "markdown", law = "all", relation = "ml";
    std::string expr_text;
    unsigned long bound = 0;
    int nary = 3;
    bool unicode = false;

    auto add_common = [&](CLI::App* cmd, unsigned long default_bound) {
        cmd->add_option("--gen", gen, "generator spec (e.g. power:2, linear:10, dblexp)")
            ->required();
        cmd->add_option("--bound", bound, "inclusive range bound")
            ->default_val(default_bound);
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"markdown", "csv", "json"}));
    };

    auto* table = app.add_subcommand("table", "print an operation table");
    add_common(table, 10);
    table->add_option("--op", op, "which operation")->check(CLI::IsMember({"add", "mul"}));

    auto* eval = app.add_subcommand("eval", "evaluate an expression in the arithmetic");
    bool eval_nary = false;
    eval->add_option("--gen", gen, "generator spec")->required();
    eval->add_option("expression", expr_text,
                     "expression over naturals with + * and parentheses; both operators "
                     "associate to the LEFT and grouping changes results when addition "
                     "is non-associative")
        ->required();
    eval->add_flag("--unicode", unicode, "render the subscript marker as _μ instead of _u");
    eval->add_flag("--nary", eval_nary,
                   "collapse each +/* chain into one n-ary operation (a single "
                   "coprojection of the conventional sum/product of projections) "
                   "instead of folding the binary operation");

    auto* laws = app.add_subcommand("laws", "run law checks; exit 1 when any fails");
    add_common(laws, 40);
    laws->add_option("--law", law, "one law id or 'all'")
        ->check(CLI::IsMember({"all", "zero-neutral", "zero-absorbing", "associativity",
                               "nary-vs-fold", "much-less-order", "successor-absorption", "ml-leq-compat",
                               "mml-left-compat", "units-propagation"}));
    laws->add_option("--nary", nary, "tuple length for the n-ary laws")
        ->check(CLI::Range(2, 8));

    auto* relations = app.add_subcommand("relations", "list related pairs and maximal chains");
    add_common(relations, 12);
    relations->add_option("--relation", relation, "which relation")
        ->check(CLI::IsMember({"ml", "mml"}));

    auto* demo = app.add_subcommand("demo", "machine-infinity demo: all M with M + 1 = M");
    add_common(demo, 1000);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (table->parsed()) return run_table(gen, op, bound, format);
        if (eval->parsed()) return run_eval(gen, expr_text, unicode, eval_nary);
        if (laws->parsed()) return run_laws(gen, law, nary, bound, format);
        if (relations->parsed()) return run_relations(gen, relation, bound, format);
        if (demo->parsed()) return run_demo(gen, bound, format);
    } catch (const nda::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
