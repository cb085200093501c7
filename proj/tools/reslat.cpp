#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "reslat/claims.hpp"
#include "reslat/classify.hpp"
#include "reslat/corpus.hpp"
#include "reslat/enumerate.hpp"
#include "reslat/filters.hpp"
#include "reslat/quotient.hpp"
#include "reslat/regular.hpp"

namespace {

using nlohmann::ordered_json;
using namespace reslat;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitClaim = 2;
constexpr int kExitUsage = 3;

ResiduatedLattice open_algebra(const std::string& path, const std::string& builtin_key) {
    if (!builtin_key.empty()) return builtin_algebra(builtin_key);
    return ResiduatedLattice::validate(load(path));
}

std::string element_set(const ResiduatedLattice& l, const std::vector<int>& xs) {
    std::string s = "{";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += l.name_of(xs[i]);
    }
    return s + "}";
}

std::vector<std::string> set_names(const ResiduatedLattice& l, const std::vector<int>& xs) {
    std::vector<std::string> out;
    for (int x : xs) out.push_back(l.name_of(x));
    return out;
}

ordered_json report_json(const ResiduatedLattice& l, const ClassificationReport& r) {
    ordered_json j;
    j["name"] = r.name;
    j["n"] = r.n;
    ordered_json verdicts;
    for (const auto& [cls, v] : r.verdicts) verdicts[cls] = to_string(v);
    j["verdicts"] = verdicts;
    ordered_json witnesses;
    for (const auto& [cls, w] : r.witnesses) {
        ordered_json jw;
        jw["tuple"] = set_names(l, w.tuple);
        jw["violation"] = w.description;
        witnesses[cls] = jw;
    }
    j["witnesses"] = witnesses;
    j["filters"] = r.filter_count;
    j["spec_size"] = r.spec_count;
    j["max_size"] = r.max_count;
    j["ds"] = set_names(l, r.dense);
    j["rad"] = set_names(l, r.rad);
    j["center"] = set_names(l, r.center);
    j["d_set"] = set_names(l, r.d_set);
    ordered_json filters = ordered_json::array();
    for (const Filter& f : all_filters(l)) {
        ordered_json jf;
        jf["members"] = set_names(l, f.elements(l.size()));
        jf["proper"] = f.proper;
        jf["prime"] = f.prime;
        jf["maximal"] = f.maximal;
        jf["primary"] = f.primary;
        jf["quasi_primary"] = f.quasi_primary;
        filters.push_back(jf);
    }
    j["filter_list"] = filters;
    return j;
}

void print_human_report(const ResiduatedLattice& l, const ClassificationReport& r) {
    std::cout << "algebra " << r.name << " (n = " << r.n << ")\n";
    for (const auto& [cls, v] : r.verdicts) {
        std::cout << "  " << cls << ": " << to_string(v);
        auto it = r.witnesses.find(cls);
        if (it != r.witnesses.end()) std::cout << "  [" << it->second.description << "]";
        std::cout << "\n";
    }
    std::cout << "  |filters| = " << r.filter_count << ", |Spec| = " << r.spec_count
              << ", |Max| = " << r.max_count << "\n";
    std::cout << "  Ds(A) = " << element_set(l, r.dense) << "\n";
    std::cout << "  Rad(A) = " << element_set(l, r.rad) << "\n";
    std::cout << "  B(A) = " << element_set(l, r.center) << "\n";
    std::cout << "  D(A) = " << element_set(l, r.d_set) << "\n";
    std::cout << "  filters:\n";
    for (const Filter& f : all_filters(l)) {
        std::cout << "    " << element_set(l, f.elements(l.size()));
        if (!f.proper) std::cout << " (improper)";
        if (f.prime) std::cout << " prime";
        if (f.maximal) std::cout << " maximal";
        if (f.primary) std::cout << " primary";
        if (f.quasi_primary) std::cout << " quasi-primary";
        std::cout << "\n";
    }
}

int cmd_analyze(const std::string& path, const std::string& builtin_key,
                const std::string& format) {
    ResiduatedLattice l = open_algebra(path, builtin_key);
    ClassificationReport r = classification_report(l);
    if (format == "structured")
        std::cout << report_json(l, r).dump(2) << "\n";
    else
        print_human_report(l, r);
    return kExitOk;
}

int cmd_check_claims(const std::string& path, const std::string& builtin_key) {
    ResiduatedLattice l = open_algebra(path, builtin_key);
    const std::vector<ClaimResult> results = check_claims(l);
    for (const ClaimResult& c : results) {
        std::cout << to_string(c.status) << " " << c.id << " " << c.title;
        if (!c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << "\n";
    }
    return any_failed(results) ? kExitClaim : kExitOk;
}

int cmd_quotient(const std::string& path, const std::string& builtin_key,
                 const std::vector<std::string>& filter_names, const std::string& format) {
    ResiduatedLattice l = open_algebra(path, builtin_key);
    std::vector<int> generators;
    for (const auto& name : filter_names) {
        try {
            generators.push_back(l.index_of(name));
        } catch (const NameError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    }
    const Filter f = generated_filter(l, generators);
    Quotient q = quotient(l, f);
    if (format == "structured") {
        ordered_json j;
        j["name"] = q.algebra.label();
        j["filter"] = set_names(l, f.elements(l.size()));
        ordered_json classes = ordered_json::array();
        for (const auto& cls : q.congruence.classes) classes.push_back(set_names(l, cls));
        j["classes"] = classes;
        j["tables"] = format_spec(q.algebra.to_spec());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "quotient of " << l.label() << " by F = "
                  << element_set(l, f.elements(l.size())) << "\n";
        std::cout << "classes:\n";
        for (const auto& cls : q.congruence.classes)
            std::cout << "  " << l.name_of(cls[0]) << "/F = " << element_set(l, cls) << "\n";
        std::cout << format_spec(q.algebra.to_spec());
    }
    return kExitOk;
}

int cmd_dot(const std::string& path, const std::string& builtin_key, const std::string& out) {
    ResiduatedLattice l = open_algebra(path, builtin_key);
    if (out.empty())
        std::cout << hasse_dot(l);
    else
        export_hasse(l, out);
    return kExitOk;
}

int cmd_enum(int size, const std::string& hunt_spec) {
    EnumerationOptions opts = enumeration_options_from_env();
    if (hunt_spec.empty()) {
        const auto algebras = enumerate_residuated(size, opts);
        std::cout << algebras.size() << (algebras.size() == 1 ? " algebra" : " algebras")
                  << "\n";
        return kExitOk;
    }
    const auto arrow = hunt_spec.find("=>");
    if (arrow == std::string::npos) {
        std::cerr << "error: --hunt expects 'antecedent,antecedent=>consequent'\n";
        return kExitUsage;
    }
    std::vector<std::string> antecedents;
    std::istringstream pre(hunt_spec.substr(0, arrow));
    std::string tok;
    while (std::getline(pre, tok, ','))
        if (!tok.empty()) antecedents.push_back(tok);
    const std::string consequent = hunt_spec.substr(arrow + 2);

    HuntResult result;
    try {
        result = hunt(antecedents, consequent, size, opts);
    } catch (const NameError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (result.found) {
        std::cout << "counterexample found:\n"
                  << format_spec(result.counterexample->to_spec());
        return kExitClaim; // machine-detectable success
    }
    std::cout << "exhausted up to size " << result.last_size_searched << "\n";
    return kExitOk;
}

int cmd_corpus_list() {
    for (const auto& key : corpus_keys()) {
        const CorpusEntry& e = builtin(key);
        std::cout << key << "  (" << e.spec.elements.size() << " elements)  " << e.provenance
                  << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite residuated lattice toolkit"};
    app.require_subcommand(1);

    std::string path, builtin_key, format = "human", hunt_spec, dot_out;
    std::vector<std::string> filter_names;
    int size = 2;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("source", path, "algebra file");
        cmd->add_option("--builtin", builtin_key, "built-in corpus key");
        cmd->add_option("--format", format, "human or structured")
            ->check(CLI::IsMember({"human", "structured"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "classify an algebra and show derived data");
    add_source(analyze);
    CLI::App* claims = app.add_subcommand("check-claims", "verify every applicable structural claim");
    add_source(claims);
    CLI::App* quot = app.add_subcommand("quotient", "quotient by the filter generated by elements");
    add_source(quot);
    quot->add_option("--filter", filter_names, "generator element names");
    CLI::App* dot = app.add_subcommand("dot", "export the Hasse diagram in DOT syntax");
    add_source(dot);
    dot->add_option("-o,--output", dot_out, "output path (default stdout)");
    CLI::App* enum_cmd = app.add_subcommand("enum", "enumerate small algebras or hunt");
    enum_cmd->add_option("--size", size, "carrier size (hunt: maximum size)")->required();
    enum_cmd->add_option("--hunt", hunt_spec, "predicates 'a,b=>c'");
    CLI::App* list_cmd = app.add_subcommand("corpus-list", "list built-in algebras");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) {
            if (path.empty() && builtin_key.empty()) {
                std::cerr << "error: need a file or --builtin KEY\n";
                return kExitUsage;
            }
            return cmd_analyze(path, builtin_key, format);
        }
        if (claims->parsed()) {
            if (path.empty() && builtin_key.empty()) {
                std::cerr << "error: need a file or --builtin KEY\n";
                return kExitUsage;
            }
            return cmd_check_claims(path, builtin_key);
        }
        if (quot->parsed()) return cmd_quotient(path, builtin_key, filter_names, format);
        if (dot->parsed()) return cmd_dot(path, builtin_key, dot_out);
        if (enum_cmd->parsed()) return cmd_enum(size, hunt_spec);
        if (list_cmd->parsed()) return cmd_corpus_list();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownKey& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
