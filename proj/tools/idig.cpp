// Command-line front end. Vertices are 0-based everywhere; edge-list
// files start with `digraph <n>` (or `graph <n>` for the undirected
// variant) followed by `<u> <v>` lines, `#` comments allowed.
//
// Exit codes: 0 success / positive answer, 1 mathematically negative
// answer (no IDS, statement falsified), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "idig/edgelist.hpp"
#include "idig/harness.hpp"
#include "idig/idomatic.hpp"
#include "idig/oracle.hpp"
#include "idig/orientations.hpp"
#include "idig/solvers.hpp"
#include "idig/verify.hpp"

using json = nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw idig::error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

idig::VertexSet parse_set(int n, const std::string& csv) {
    idig::VertexSet S(n);
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int v;
        try {
            v = std::stoi(tok);
        } catch (const std::exception&) {
            throw idig::error("bad vertex id `" + tok + "` in --set");
        }
        if (v < 0 || v >= n) throw idig::vertex_range_error("set vertex out of range");
        S.insert(v);
    }
    return S;
}

json set_to_json(const idig::VertexSet& S) { return json(S.to_vector()); }

std::string ids_line(const idig::VertexSet& S) {
    std::string out;
    for (int v : S.to_vector()) {
        if (!out.empty()) out += " ";
        out += std::to_string(v);
    }
    return out;
}

struct Output {
    int exit_code = 0;
    std::string text;
    json result;
    json witness;
};

void emit(const Output& o, const std::string& verb, const std::string& digest, bool as_json) {
    if (as_json) {
        json j;
        j["verb"] = verb;
        j["input_digest"] = digest;
        j["result"] = o.result;
        j["witness"] = o.witness;
        j["elapsed_ms"] = 0; // kept zero so identical inputs give identical bytes
        std::cout << j.dump() << "\n";
    } else {
        std::cout << o.text;
    }
}

idig::SolveOutcome solve_family(const idig::Digraph& D, const std::string& family) {
    using idig::SolveOutcome;
    if (family == "auto") return idig::solve_dispatch(D);
    if (family == "tournament") return idig::solve_tournament(D);
    if (family == "path") {
        idig::FamilyTags t = idig::classify(D);
        if (t.directed_path) return idig::solve_directed_path(D);
        if (t.oriented_path) return idig::solve_dag_greedy(D);
        return SolveOutcome::not_in_family("not an oriented path");
    }
    if (family == "tree") return idig::solve_oriented_tree(D);
    if (family == "dag") return idig::solve_dag_greedy(D);
    if (family == "cycle") return idig::solve_oriented_cycle(D);
    if (family == "bipartite") return idig::solve_bipartite(D);
    throw idig::error("unknown family " + family);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independent dominating sets in directed graphs"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one structured JSON object");

    std::string input = "-";
    std::string set_csv;
    std::string family = "auto";
    std::size_t cap = idig::kOracleDefaultCap;
    std::string mode = "away";
    std::string kind;
    int gen_n = 0, gen_m = 0;
    std::uint64_t gen_index = 0;
    bool gen_directed = false;
    std::string statement;
    int bound = 0;
    int samples = -1;
    std::string profile_name = "quick";
    std::uint64_t seed = 0;
    bool seed_set = false, timings = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "edge-list file, or - for stdin");
    };

    CLI::App* c_check = app.add_subcommand("check", "verify a vertex set against a digraph");
    add_input(c_check);
    c_check->add_option("--set", set_csv, "comma-separated vertex ids")->required();

    CLI::App* c_solve = app.add_subcommand("solve", "construct an IDS");
    add_input(c_solve);
    c_solve->add_option("--family", family, "auto|tournament|path|tree|dag|cycle|bipartite")
        ->check(CLI::IsMember({"auto", "tournament", "path", "tree", "dag", "cycle", "bipartite"}));

    CLI::App* c_enum = app.add_subcommand("enumerate", "list every IDS (oracle, n <= 32)");
    add_input(c_enum);
    c_enum->add_option("--cap", cap, "maximum number of sets to emit");

    CLI::App* c_idom = app.add_subcommand("idomatic", "idomatic number with witness");
    add_input(c_idom);

    CLI::App* c_classify = app.add_subcommand("classify", "structural family tags");
    add_input(c_classify);

    CLI::App* c_verify = app.add_subcommand("verify", "run theorem verification");
    c_verify->add_option("statement", statement, "statement id or `all`")->required();
    c_verify->add_option("--bound", bound, "size bound override");
    c_verify->add_option("--samples", samples, "random sample count override");
    c_verify->add_option("--profile", profile_name, "quick|full")
        ->check(CLI::IsMember({"quick", "full"}));
    c_verify->add_option("--seed", seed, "random seed")->each([&](const std::string&) { seed_set = true; });
    c_verify->add_flag("--timings", timings, "include measured elapsed_ms in the report");

    CLI::App* c_orient = app.add_subcommand("orient", "orient a graph around an undirected IDS");
    add_input(c_orient);
    c_orient->add_option("--set", set_csv, "comma-separated vertex ids")->required();
    c_orient->add_option("--mode", mode, "away|toward")->check(CLI::IsMember({"away", "toward"}));

    CLI::App* c_gen = app.add_subcommand("gen", "generate a base graph or directed path/cycle");
    c_gen->add_option("--kind", kind, "path|cycle|complete|complete-bipartite|tree")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "complete", "complete-bipartite", "tree"}));
    c_gen->add_option("--n", gen_n, "vertex count (first part size for complete-bipartite)")->required();
    c_gen->add_option("--m", gen_m, "second part size for complete-bipartite");
    c_gen->add_option("--index", gen_index, "Prufer index for tree");
    c_gen->add_flag("--directed", gen_directed, "emit the canonical directed path/cycle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Output out;
        std::string verb, digest;

        if (c_check->parsed()) {
            verb = "check";
            std::string data = read_input(input);
            digest = fnv1a_hex(data);
            std::istringstream ss(data);
            idig::Digraph D = idig::parse_digraph(ss);
            idig::IdsCertificate cert = idig::check_ids(D, parse_set(D.n(), set_csv));
            auto yn = [](bool b) { return b ? "yes" : "no"; };
            out.text = std::string("independent ") + yn(cert.independent) + "\n" +
                       "dominating " + yn(cert.dominating) + "\n" + "ids " + yn(cert.is_ids()) + "\n";
            out.result = {{"independent", cert.independent},
                          {"dominating", cert.dominating},
                          {"ids", cert.is_ids()}};
            out.witness = json::array({set_to_json(cert.set)});
            out.exit_code = cert.is_ids() ? 0 : 1;
        } else if (c_solve->parsed()) {
            verb = "solve";
            std::string data = read_input(input);
            digest = fnv1a_hex(data);
            std::istringstream ss(data);
            idig::Digraph D = idig::parse_digraph(ss);
            idig::SolveOutcome s = solve_family(D, family);
            if (s.status == idig::SolveStatus::NotInFamily)
                throw idig::error("not in family: " + s.reason);
            if (s.status == idig::SolveStatus::Found) {
                out.text = "found " + ids_line(s.set) + "\n";
                out.result = "found";
                out.witness = json::array({set_to_json(s.set)});
                out.exit_code = 0;
            } else {
                out.text = "none " + s.reason + "\n";
                out.result = "none " + s.reason;
                out.witness = nullptr;
                out.exit_code = 1;
            }
        } else if (c_enum->parsed()) {
            verb = "enumerate";
            std::string data = read_input(input);
            digest = fnv1a_hex(data);
            std::istringstream ss(data);
            idig::Digraph D = idig::parse_digraph(ss);
            idig::IdsEnumeration e = idig::enumerate_ids(D, cap);
            out.witness = json::array();
            for (const idig::VertexSet& S : e.sets) {
                out.text += ids_line(S) + "\n";
                out.witness.push_back(set_to_json(S));
            }
            if (!e.exhaustive) std::cerr << "warning: enumeration truncated at cap\n";
            out.result = {{"count", e.sets.size()}, {"exhaustive", e.exhaustive}};
            out.exit_code = e.sets.empty() ? 1 : 0;
        } else if (c_idom->parsed()) {
            verb = "idomatic";
            std::string data = read_input(input);
            digest = fnv1a_hex(data);
            std::istringstream ss(data);
            idig::Digraph D = idig::parse_digraph(ss);
            auto res = idig::idomatic_closed_form(D);
            idig::IdomaticResult r = res ? *res : idig::idomatic_exact(D);
            out.text = "idomatic " + std::to_string(r.value) + "\n";
            out.text += std::string("method ") +
                        (r.method == idig::IdomaticMethod::closed_form ? "closed_form" : "exact_packing") +
                        "\n";
            out.witness = json::array();
            for (const idig::VertexSet& w : r.witness) {
                out.text += "witness " + ids_line(w) + "\n";
                out.witness.push_back(set_to_json(w));
            }
            out.result = r.value;
            out.exit_code = r.value >= 1 ? 0 : 1;
        } else if (c_classify->parsed()) {
            verb = "classify";
            std::string data = read_input(input);
            digest = fnv1a_hex(data);
            std::istringstream ss(data);
            idig::Digraph D = idig::parse_digraph(ss);
            auto names = idig::classify(D).names();
            for (std::size_t i = 0; i < names.size(); ++i)
                out.text += names[i] + (i + 1 < names.size() ? " " : "");
            out.text += "\n";
            out.result = json(names);
            out.witness = nullptr;
            out.exit_code = 0;
        } else if (c_verify->parsed()) {
            verb = "verify";
            idig::Profile p = profile_name == "full" ? idig::full_profile() : idig::quick_profile();
            if (seed_set) p.seed = seed;
            if (samples >= 0) {
                p.samples = samples;
                p.graph_samples = samples;
            }
            digest = fnv1a_hex(statement + "/" + profile_name + "/" + std::to_string(bound) + "/" +
                               std::to_string(p.seed));
            std::vector<idig::HarnessReport> reports;
            if (statement == "all") {
                reports = idig::verify_all(p);
            } else {
                auto id = idig::statement_from_string(statement);
                if (!id) throw idig::error("unknown statement " + statement);
                reports.push_back(idig::verify(*id, p, bound));
            }
            out.text = idig::format_reports(reports, timings);
            bool all_pass = true;
            out.result = json::array();
            for (const auto& r : reports) {
                all_pass = all_pass && r.passed();
                out.result.push_back({{"statement", idig::to_string(r.statement)},
                                      {"instances", r.instances},
                                      {"failures", r.failures.size()},
                                      {"bound", r.bound}});
            }
            out.witness = nullptr;
            out.exit_code = all_pass ? 0 : 1;
        } else if (c_orient->parsed()) {
            verb = "orient";
            std::string data = read_input(input);
            digest = fnv1a_hex(data);
            std::istringstream ss(data);
            idig::UGraph G = idig::parse_ugraph(ss);
            idig::VertexSet S = parse_set(G.n(), set_csv);
            idig::Digraph D = mode == "away" ? idig::orient_away(G, S) : idig::orient_toward(G, S);
            out.text = idig::to_edge_list(D);
            out.result = idig::to_compact_string(D);
            out.witness = json::array({set_to_json(S)});
            out.exit_code = 0;
        } else if (c_gen->parsed()) {
            verb = "gen";
            digest = fnv1a_hex(kind + "/" + std::to_string(gen_n) + "/" + std::to_string(gen_m) +
                               "/" + std::to_string(gen_index) + "/" + (gen_directed ? "d" : "u"));
            if (gen_directed) {
                if (kind != "path" && kind != "cycle")
                    throw idig::error("--directed applies to path and cycle only");
                idig::Digraph D =
                    kind == "path" ? idig::gen_directed_path(gen_n) : idig::gen_directed_cycle(gen_n);
                out.text = idig::to_edge_list(D);
                out.result = idig::to_compact_string(D);
            } else {
                idig::GeneratorSpec spec;
                spec.n = gen_n;
                spec.m = gen_m;
                spec.index = gen_index;
                if (kind == "path") spec.kind = idig::GeneratorSpec::Kind::path;
                else if (kind == "cycle") spec.kind = idig::GeneratorSpec::Kind::cycle;
                else if (kind == "complete") spec.kind = idig::GeneratorSpec::Kind::complete;
                else if (kind == "complete-bipartite") spec.kind = idig::GeneratorSpec::Kind::complete_bipartite;
                else spec.kind = idig::GeneratorSpec::Kind::labeled_tree;
                idig::UGraph G = idig::gen_base(spec);
                std::ostringstream es;
                idig::write_edge_list(es, G);
                out.text = es.str();
                out.result = "graph " + std::to_string(G.n());
            }
            out.witness = nullptr;
            out.exit_code = 0;
        }

        emit(out, verb, digest, as_json);
        return out.exit_code;
    } catch (const idig::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
