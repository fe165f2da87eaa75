#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "minorlab/claims.hpp"
#include "minorlab/embed.hpp"
#include "minorlab/families.hpp"
#include "minorlab/graph6.hpp"
#include "minorlab/kuratowski.hpp"
#include "minorlab/named.hpp"
#include "minorlab/packing.hpp"
#include "minorlab/surface_alg.hpp"

using namespace minorlab;

namespace {

uint64_t default_budget() {
    if (const char* env = std::getenv("MINORLAB_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (...) {
        }
    }
    return kDefaultMinorBudget;
}

// a graph argument: named token, graph6 code, or a file containing one
Graph load_graph(const std::string& arg) {
    if (auto g = parse_graph_token(arg)) return *g;
    std::ifstream in(arg);
    if (in) {
        std::string line;
        std::getline(in, line);
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
            line.pop_back();
        if (auto g = parse_graph_token(line)) return *g;
        throw std::runtime_error("cannot parse graph from file: " + arg);
    }
    throw std::runtime_error("cannot parse graph argument: " + arg);
}

std::vector<Graph> load_antichain(const std::string& csv) {
    std::vector<Graph> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(load_graph(tok));
    return out;
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

Surface parse_surface(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::runtime_error("surface must be given as h,c");
    return normalize(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
}

void emit_graph(const GeneratedGraph& gen, const std::string& fmt, bool tags) {
    if (fmt == "g6")
        std::cout << graph6_encode(gen.graph) << "\n";
    else if (fmt == "dot")
        std::cout << to_dot(gen.graph);
    else
        std::cout << to_edge_list(gen.graph);
    if (tags) {
        std::cout << "{\n  \"degenerate\": " << (gen.degenerate ? "true" : "false");
        for (const auto& [name, vs] : gen.vertex_tags) {
            std::cout << ",\n  \"" << name << "\": [";
            for (size_t i = 0; i < vs.size(); ++i)
                std::cout << (i ? "," : "") << vs[i];
            std::cout << "]";
        }
        for (const auto& [name, es] : gen.edge_tags) {
            std::cout << ",\n  \"" << name << "\": [";
            for (size_t i = 0; i < es.size(); ++i)
                std::cout << (i ? "," : "") << "[" << es[i].first << "," << es[i].second
                          << "]";
            std::cout << "]";
        }
        std::cout << "\n}\n";
    }
}

std::string verdict_str(MinorVerdict v) {
    switch (v) {
        case MinorVerdict::Found: return "found";
        case MinorVerdict::Absent: return "absent";
        case MinorVerdict::Refused: return "refused";
    }
    return "?";
}

void print_model(const MinorModel& m) {
    std::cout << "{\"branch_sets\": [";
    for (size_t p = 0; p < m.branch.size(); ++p) {
        std::cout << (p ? "," : "") << "[";
        for (size_t i = 0; i < m.branch[p].size(); ++i)
            std::cout << (i ? "," : "") << m.branch[p][i];
        std::cout << "]";
    }
    std::cout << "]}\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact desk-scale laboratory for graph minors, surfaces, and "
                 "packing/covering duality"};
    app.require_subcommand(1);
    uint64_t budget = default_budget();

    // ---- gen ----
    auto* gen_cmd = app.add_subcommand("gen", "generate a parametric family member");
    std::string family = "dyck";
    int gk = 1, gh = 0, gc = 0, grows = 2, gcols = 8, gindex = 0;
    std::string emit = "g6", base_arg = "k4", cycle_arg = "0,1,2";
    bool tags = false;
    gen_cmd->add_option("--family", family,
                        "dyck|annulus|cyl|grid|handle|crosscap|wall|dyckwall|vortex|"
                        "ringblowup|mobius|complete|bipartite|petersenfam|j");
    gen_cmd->add_option("--k", gk);
    gen_cmd->add_option("--h", gh);
    gen_cmd->add_option("--c", gc);
    gen_cmd->add_option("--rows", grows);
    gen_cmd->add_option("--cols", gcols);
    gen_cmd->add_option("--index", gindex);
    gen_cmd->add_option("--base", base_arg, "base graph for ring blowups");
    gen_cmd->add_option("--cycle", cycle_arg, "facial cycle for ring blowups");
    gen_cmd->add_option("--emit", emit, "g6|dot|edges");
    gen_cmd->add_flag("--tags", tags, "emit substructure tags as JSON");

    // ---- genus / embeds / disk ----
    auto* genus_cmd = app.add_subcommand("genus", "exact Euler genus");
    std::string in_arg;
    genus_cmd->add_option("--in", in_arg)->required();
    auto* embeds_cmd = app.add_subcommand("embeds", "exact surface embeddability");
    std::string surf_arg = "0,0";
    embeds_cmd->add_option("--in", in_arg)->required();
    embeds_cmd->add_option("--surface", surf_arg, "h,c");
    auto* disk_cmd = app.add_subcommand("disk", "disk embeddability with X on the rim");
    std::string x_arg;
    disk_cmd->add_option("--in", in_arg)->required();
    disk_cmd->add_option("--x", x_arg, "comma-separated boundary vertices");

    // ---- kc / core ----
    auto* kc_cmd = app.add_subcommand("kc", "Kuratowski connectivity");
    kc_cmd->add_option("--in", in_arg)->required();
    auto* core_cmd = app.add_subcommand("core", "core component of a separation");
    std::string a_arg, b_arg;
    core_cmd->add_option("--in", in_arg)->required();
    core_cmd->add_option("--a", a_arg)->required();
    core_cmd->add_option("--b", b_arg)->required();

    // ---- sobs ----
    auto* sobs_cmd = app.add_subcommand("sobs", "surface obstructions for an antichain");
    std::string z_arg = "k5";
    sobs_cmd->add_option("--z", z_arg, "comma-separated graphs");

    // ---- minor / pack / cover / ep ----
    auto* minor_cmd = app.add_subcommand("minor", "exact minor containment");
    std::string pattern_arg, host_arg;
    minor_cmd->add_option("--pattern", pattern_arg)->required();
    minor_cmd->add_option("--host", host_arg)->required();
    minor_cmd->add_option("--budget", budget);
    auto* pack_cmd = app.add_subcommand("pack", "packing search");
    int pk = 2;
    bool half = false, mixed = false;
    pack_cmd->add_option("--z", z_arg)->required();
    pack_cmd->add_option("--host", host_arg)->required();
    pack_cmd->add_option("--k", pk);
    pack_cmd->add_flag("--half", half, "half-integral (vertices shared twice)");
    pack_cmd->add_flag("--mixed", mixed, "patterns drawn from the whole antichain");
    pack_cmd->add_option("--budget", budget);
    auto* cover_cmd = app.add_subcommand("cover", "minimum cover search");
    int cap = 4;
    cover_cmd->add_option("--z", z_arg)->required();
    cover_cmd->add_option("--host", host_arg)->required();
    cover_cmd->add_option("--cap", cap);
    cover_cmd->add_option("--budget", budget);
    auto* ep_cmd = app.add_subcommand("ep", "EP parameter over the Dyck family");
    int kmax = 3;
    ep_cmd->add_option("--z", z_arg)->required();
    ep_cmd->add_option("--host", host_arg)->required();
    ep_cmd->add_option("--kmax", kmax);
    ep_cmd->add_option("--budget", budget);

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run a claim suite");
    std::string suite = "smoke", verify_emit = "text", out_file;
    bool dump_claims = false;
    verify_cmd->add_option("--suite", suite, "paper|smoke|full|c1..c10");
    verify_cmd->add_option("--emit", verify_emit, "text|json|csv");
    verify_cmd->add_option("--out", out_file, "also write the report to a file");
    verify_cmd->add_flag("--dump-claims", dump_claims, "print the claim registry");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_cmd->parsed()) {
            FamilySpec spec = [&]() {
                if (family == "dyck") return FamilySpec::dyck_grid(gk, gh, gc);
                if (family == "annulus") return FamilySpec::annulus(gk);
                if (family == "cyl") return FamilySpec::cyl_grid(gcols, grows);
                if (family == "grid") return FamilySpec::grid(grows, gcols);
                if (family == "handle") return FamilySpec::handle_grid(gk);
                if (family == "crosscap") return FamilySpec::crosscap_grid(gk);
                if (family == "wall") return FamilySpec::wall(gk);
                if (family == "dyckwall") return FamilySpec::dyck_wall(gk, gh, gc);
                if (family == "vortex") return FamilySpec::shallow_vortex_grid(gk);
                if (family == "ringblowup")
                    return FamilySpec::ring_blowup(load_graph(base_arg),
                                                   parse_ints(cycle_arg));
                if (family == "mobius") return FamilySpec::mobius_ladder(gk);
                if (family == "complete") return FamilySpec::complete(gk);
                if (family == "bipartite")
                    return FamilySpec::complete_bipartite(grows, gcols);
                if (family == "petersenfam") return FamilySpec::petersen_family(gindex);
                if (family == "j") return FamilySpec::graph_j();
                throw std::runtime_error("unknown family: " + family);
            }();
            emit_graph(generate(spec), emit, tags);
            return 0;
        }
        if (genus_cmd->parsed()) {
            GenusResult r = euler_genus(load_graph(in_arg));
            if (r.verdict == Verdict::Refused) {
                std::cout << "{\"refused\": true, \"block_edges\": "
                          << r.refused_block_edges << "}\n";
                return 2;
            }
            std::cout << "{\"eg\": " << r.eg << ", \"orientable_genus\": "
                      << *r.orientable_genus << ", \"nonorientable_genus\": "
                      << *r.nonorientable_genus << "}\n";
            return 0;
        }
        if (embeds_cmd->parsed()) {
            Surface s = parse_surface(surf_arg);
            EmbedResult r = embeds(load_graph(in_arg), s);
            if (r.verdict == Verdict::Refused) {
                std::cout << "{\"refused\": true, \"block_edges\": "
                          << r.refused_block_edges << "}\n";
                return 2;
            }
            std::cout << "{\"embeds\": "
                      << (r.verdict == Verdict::Yes ? "true" : "false") << "}\n";
            return 0;
        }
        if (disk_cmd->parsed()) {
            Graph g = load_graph(in_arg);
            std::vector<int> x = x_arg.empty() ? std::vector<int>{} : parse_ints(x_arg);
            std::cout << "{\"disk_embeddable\": "
                      << (disk_embeddable(g, x) ? "true" : "false") << "}\n";
            return 0;
        }
        if (kc_cmd->parsed()) {
            auto r = is_kuratowski_connected(load_graph(in_arg));
            std::cout << "{\"kuratowski_connected\": " << (r.connected ? "true" : "false");
            if (!r.connected) {
                std::cout << ", \"violating_separator\": [";
                auto sep = r.violation->separation.separator();
                for (size_t i = 0; i < sep.size(); ++i)
                    std::cout << (i ? "," : "") << sep[i];
                std::cout << "]";
            }
            std::cout << "}\n";
            return 0;
        }
        if (core_cmd->parsed()) {
            Graph g = load_graph(in_arg);
            Separation sep{parse_ints(a_arg), parse_ints(b_arg)};
            std::sort(sep.a.begin(), sep.a.end());
            std::sort(sep.b.begin(), sep.b.end());
            CoreResult r = core_component(g, sep);
            std::cout << "{\"status\": \""
                      << (r.status == CoreResult::Status::Found ? "found" : "none")
                      << "\", \"core\": [";
            for (size_t i = 0; i < r.core.size(); ++i)
                std::cout << (i ? "," : "") << r.core[i];
            std::cout << "], \"sigma_trace_size\": " << r.sigma_trace.size();
            if (!r.diagnostic.empty()) std::cout << ", \"diagnostic\": \"" << r.diagnostic << "\"";
            std::cout << "}\n";
            return 0;
        }
        if (sobs_cmd->parsed()) {
            auto s = surfaces_excluding(load_antichain(z_arg));
            std::cout << "{\"sobs\": [";
            for (size_t i = 0; i < s.sobs().size(); ++i) {
                const Surface& sigma = s.sobs()[i];
                std::cout << (i ? "," : "") << "{\"h\": " << sigma.h
                          << ", \"c\": " << sigma.c << "}";
            }
            std::cout << "]}\n";
            return 0;
        }
        if (minor_cmd->parsed()) {
            MinorResult r = is_minor(load_graph(pattern_arg), load_graph(host_arg), budget);
            std::cout << "{\"verdict\": \"" << verdict_str(r.verdict)
                      << "\", \"nodes\": " << r.stats.nodes << "}\n";
            if (r.model) print_model(*r.model);
            return r.verdict == MinorVerdict::Refused ? 2 : 0;
        }
        if (pack_cmd->parsed()) {
            PackResult r = pack(load_antichain(z_arg), load_graph(host_arg), pk,
                                half ? 2 : 1, mixed ? PackKind::Mixed : PackKind::Single,
                                budget);
            std::cout << "{\"verdict\": \"" << verdict_str(r.verdict)
                      << "\", \"nodes\": " << r.stats.nodes << "}\n";
            if (r.cert)
                for (const auto& [p, m] : r.cert->hosts) print_model(m);
            return r.verdict == MinorVerdict::Refused ? 2 : 0;
        }
        if (cover_cmd->parsed()) {
            CoverResult r = cover(load_antichain(z_arg), load_graph(host_arg), cap, budget);
            std::cout << "{\"verdict\": \"" << verdict_str(r.verdict) << "\"";
            if (r.cert) {
                std::cout << ", \"cover\": [";
                for (size_t i = 0; i < r.cert->vertices.size(); ++i)
                    std::cout << (i ? "," : "") << r.cert->vertices[i];
                std::cout << "], \"size\": " << r.cert->vertices.size();
            }
            std::cout << "}\n";
            return r.verdict == MinorVerdict::Refused ? 2 : 0;
        }
        if (ep_cmd->parsed()) {
            EpResult r = ep_parameter(load_antichain(z_arg), load_graph(host_arg), kmax,
                                      budget);
            std::cout << "{\"verdict\": \"" << verdict_str(r.verdict)
                      << "\", \"ep\": " << r.value << ", \"degenerate_indices\": "
                      << (r.degenerate_indices ? "true" : "false") << "}\n";
            return r.verdict == MinorVerdict::Refused ? 2 : 0;
        }
        if (verify_cmd->parsed()) {
            if (dump_claims) {
                std::cout << registry_to_json();
                return 0;
            }
            std::vector<Report> reports = verify_suite(suite);
            std::string payload = verify_emit == "json"  ? reports_to_json(reports)
                                  : verify_emit == "csv" ? reports_to_csv(reports)
                                                         : "";
            if (verify_emit == "text") {
                for (const auto& r : reports) {
                    const char* tag = r.status == ClaimStatus::Pass      ? "PASS"
                                      : r.status == ClaimStatus::Refused ? "REFUSED"
                                                                         : "FAIL";
                    std::cout << tag << "  " << r.claim_id << "  computed=" << r.computed
                              << "  expected=" << r.expected << "  (" << r.runtime_ms
                              << " ms)\n";
                }
            } else {
                std::cout << payload;
            }
            if (!out_file.empty()) {
                std::ofstream out(out_file);
                out << (payload.empty() ? reports_to_json(reports) : payload);
            }
            return exit_code_for(reports);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
