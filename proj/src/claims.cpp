#include "minorlab/claims.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "minorlab/embed.hpp"
#include "minorlab/families.hpp"
#include "minorlab/graph6.hpp"
#include "minorlab/iso.hpp"
#include "minorlab/kuratowski.hpp"
#include "minorlab/named.hpp"
#include "minorlab/packing.hpp"
#include "minorlab/surface_alg.hpp"

namespace minorlab {

namespace {

std::string surfaces_str(const std::vector<Surface>& ss) {
    std::string out = "{";
    for (size_t i = 0; i < ss.size(); ++i) {
        if (i) out += ",";
        out += ss[i].to_string();
    }
    return out + "}";
}

ClaimOutcome expect_eq(const std::string& computed, const std::string& expected) {
    ClaimOutcome o;
    o.computed = computed;
    o.expected = expected;
    o.status = computed == expected ? ClaimStatus::Pass : ClaimStatus::Fail;
    return o;
}

ClaimOutcome expect_true(bool cond, const std::string& computed,
                         const std::string& expected) {
    ClaimOutcome o;
    o.computed = computed;
    o.expected = expected;
    o.status = cond ? ClaimStatus::Pass : ClaimStatus::Fail;
    return o;
}

// ---- builders per acceptance criterion ----

ClaimSpec sobs_member_claim(const std::string& id, std::vector<Surface> members,
                            const std::string& expected) {
    return {id, "c1", "paper", "sobs of a literal surface set = " + expected, 0,
            [members, expected](uint64_t) {
                auto s = ClosedSurfaceSet::from_members(members);
                return expect_eq(surfaces_str(s.sobs()), expected);
            }};
}

ClaimSpec sobs_exclusion_claim(const std::string& id, std::vector<Graph> z,
                               const std::string& what, const std::string& expected) {
    return {id, "c1", "paper", "surface obstructions excluding " + what + " = " + expected,
            0, [z, expected](uint64_t) {
                auto s = surfaces_excluding(z);
                return expect_eq(surfaces_str(s.sobs()), expected);
            }};
}

ClaimSpec kc_claim(const std::string& id, Graph g, const std::string& what,
                   bool expected) {
    return {id, "c2", "paper",
            what + (expected ? " is" : " is not") + " Kuratowski-connected", 0,
            [g = std::move(g), expected](uint64_t) {
                bool kc = is_kuratowski_connected(g).connected;
                return expect_true(kc == expected, kc ? "true" : "false",
                                   expected ? "true" : "false");
            }};
}

ClaimSpec iso_claim(const std::string& id, const std::string& suite, Graph a, Graph b,
                    const std::string& what) {
    return {id, "c3", suite, what, 0, [a = std::move(a), b = std::move(b)](uint64_t) {
                bool eq = isomorphic(a, b);
                return expect_true(eq, eq ? "isomorphic" : "not isomorphic",
                                   "isomorphic");
            }};
}

ClaimSpec count_claim(const std::string& id, const std::string& suite, FamilySpec spec,
                      int nv, int ne) {
    std::ostringstream what;
    what << spec.name() << " has " << nv << " vertices and " << ne << " edges";
    return {id, "c3", suite, what.str(), 0, [spec, nv, ne](uint64_t) {
                GeneratedGraph g = generate(spec);
                std::ostringstream got;
                got << g.graph.vertex_count() << "v," << g.graph.edge_count() << "e";
                std::ostringstream want;
                want << nv << "v," << ne << "e";
                return expect_eq(got.str(), want.str());
            }};
}

ClaimOutcome pack_absence_outcome(const Graph& h, const Graph& host, int copies,
                                  uint64_t budget) {
    MinorResult mr = find_packing(h, copies, host, 1, budget);
    ClaimOutcome o;
    o.nodes = mr.stats.nodes;
    o.expected = "no packing of size " + std::to_string(copies);
    switch (mr.verdict) {
        case MinorVerdict::Absent:
            o.computed = "absence proved";
            o.status = ClaimStatus::Pass;
            break;
        case MinorVerdict::Found:
            o.computed = "packing found";
            o.status = ClaimStatus::Fail;
            break;
        case MinorVerdict::Refused:
            o.computed = "search refused (budget)";
            o.status = ClaimStatus::Refused;
            o.refusals = 1;
            break;
    }
    return o;
}

// Lemma 6.2 instance: pack_H(D_k^Sigma) <= 1 + eg(Sigma) - eg(H), the bound
// recomputed from the embedder. Checked by exhaustive absence of c+1 copies.
ClaimSpec pack_bound_claim(const std::string& id, Graph h, const std::string& hname,
                           int k, int hh, int cc, uint64_t budget,
                           int extra_tightening = 0) {
    std::ostringstream what;
    what << "pack_" << hname << " of dyck(" << k << "," << hh << "," << cc
         << ") is at most 1 + eg(surface) - eg(" << hname << ")"
         << (extra_tightening ? " minus a further sharpening" : "");
    return {id, "c5", "paper", what.str(), budget,
            [h = std::move(h), k, hh, cc, extra_tightening](uint64_t b) {
                GenusResult gr = euler_genus(h);
                if (gr.verdict != Verdict::Yes) {
                    ClaimOutcome o;
                    o.status = ClaimStatus::Refused;
                    o.computed = "embedder refused the pattern";
                    return o;
                }
                int bound = 1 + (2 * hh + cc) - gr.eg - extra_tightening;
                GeneratedGraph host = generate(FamilySpec::dyck_grid(k, hh, cc));
                return pack_absence_outcome(h, host.graph, bound + 1, b);
            }};
}

std::vector<ClaimSpec> build_registry() {
    std::vector<ClaimSpec> r;
    Surface s_empty = Surface::make_empty();
    Surface sphere = Surface::sphere();
    Surface torus{false, 1, 0};
    Surface proj{false, 0, 1};
    Surface klein{false, 0, 2};

    // ---- criterion 1: the sobs registry ----
    r.push_back(sobs_member_claim("sobs-none", {}, "{S0}"));
    r.push_back(sobs_member_claim("sobs-empty-only", {s_empty}, "{S(0,0)}"));
    r.push_back(sobs_member_claim("sobs-sphere", {s_empty, sphere}, "{S(1,0),S(0,1)}"));
    r.push_back(sobs_member_claim("sobs-up-to-klein", {s_empty, sphere, proj, klein},
                                  "{S(1,0)}"));
    r.push_back(sobs_exclusion_claim("sz-k5", {complete(5)}, "K5", "{S(1,0),S(0,1)}"));
    r.push_back(sobs_exclusion_claim("sz-k6", {complete(6)}, "K6", "{S(1,0),S(0,1)}"));
    r.push_back(sobs_exclusion_claim("sz-k5-k33", {complete(5), complete_bipartite(3, 3)},
                                     "K5+K33", "{S(1,0),S(0,1)}"));
    r.push_back(sobs_exclusion_claim("sz-m8", {mobius_ladder(8)}, "M8",
                                     "{S(1,0),S(0,1)}"));
    r.push_back(sobs_exclusion_claim("sz-k44", {complete_bipartite(4, 4)}, "K44",
                                     "{S(1,0),S(0,2)}"));
    r.push_back(sobs_exclusion_claim("sz-k7", {complete(7)}, "K7", "{S(1,0)}"));

    // ---- criterion 2: Kuratowski connectivity ----
    r.push_back(kc_claim("kc-k5", complete(5), "K5", true));
    r.push_back(kc_claim("kc-k33", complete_bipartite(3, 3), "K33", true));
    r.push_back(kc_claim("kc-k6", complete(6), "K6", true));
    r.push_back(kc_claim("kc-k7", complete(7), "K7", true));
    r.push_back(kc_claim("kc-petersen", petersen(), "the Petersen graph", true));
    {
        GeneratedGraph rb = generate(FamilySpec::ring_blowup(complete(4), {0, 1, 2}));
        r.push_back(kc_claim("kc-ring-blowup-k4", rb.graph, "ring blowup of (K4,C3)",
                             true));
    }
    r.push_back(kc_claim("kc-j", graph_j(), "the glued graph J", false));

    // ---- criterion 3: construction identities ----
    {
        GeneratedGraph rb = generate(FamilySpec::ring_blowup(complete(4), {0, 1, 2}));
        r.push_back(iso_claim("iso-ring-blowup-k7", "paper", rb.graph, complete(7),
                              "ring blowup of (K4, triangle) is K7"));
    }
    r.push_back(iso_claim("iso-m6-k33", "paper", mobius_ladder(6),
                          complete_bipartite(3, 3), "the 6-rung ladder is K33"));
    {
        GeneratedGraph v1 = generate(FamilySpec::shallow_vortex_grid(1));
        r.push_back(iso_claim("iso-v1-k4", "paper", v1.graph, complete(4),
                              "the order-1 shallow-vortex grid is K4"));
    }
    for (int k = 1; k <= 3; ++k)
        for (auto [hh, cc] : {std::pair{0, 0}, {1, 0}, {0, 1}, {0, 2}, {1, 1}}) {
            std::ostringstream id;
            id << "count-dyck-" << k << "-" << hh << "-" << cc;
            int m = 4 * k * (1 + hh + cc);
            r.push_back(count_claim(id.str(), "smoke", FamilySpec::dyck_grid(k, hh, cc),
                                    k * m, (2 * k - 1) * m + 2 * k * (hh + cc)));
        }
    for (int k = 1; k <= 4; ++k)
        r.push_back(count_claim("count-vortex-" + std::to_string(k), "smoke",
                                FamilySpec::shallow_vortex_grid(k), 4 * k * k,
                                (2 * k - 1) * 4 * k + 2 * k));

    // ---- criterion 4: the shallow-vortex layer ----
    r.push_back({"minor-v2-v6", "c4", "paper",
                 "the order-2 shallow-vortex grid is a minor of the order-6 one",
                 10ull * 1000 * 1000, [](uint64_t b) {
                     GeneratedGraph v2 = generate(FamilySpec::shallow_vortex_grid(2));
                     GeneratedGraph v6 = generate(FamilySpec::shallow_vortex_grid(6));
                     MinorResult mr = is_minor(v2.graph, v6.graph, b);
                     ClaimOutcome o;
                     o.nodes = mr.stats.nodes;
                     o.expected = "model found";
                     o.computed = mr.verdict == MinorVerdict::Found ? "model found"
                                  : mr.verdict == MinorVerdict::Absent
                                      ? "absence proved"
                                      : "search refused";
                     o.status = mr.verdict == MinorVerdict::Found ? ClaimStatus::Pass
                                : mr.verdict == MinorVerdict::Refused
                                    ? ClaimStatus::Refused
                                    : ClaimStatus::Fail;
                     return o;
                 }});
    r.push_back({"pack-v1-in-v6", "c4", "paper",
                 "two disjoint copies of the order-1 shallow-vortex grid pack into the "
                 "order-6 one",
                 10ull * 1000 * 1000, [](uint64_t b) {
                     GeneratedGraph v1 = generate(FamilySpec::shallow_vortex_grid(1));
                     GeneratedGraph v6 = generate(FamilySpec::shallow_vortex_grid(6));
                     PackResult pr =
                         pack({v1.graph}, v6.graph, 2, 1, PackKind::Single, b);
                     ClaimOutcome o;
                     o.nodes = pr.stats.nodes;
                     o.expected = "packing of size 2";
                     o.computed = pr.verdict == MinorVerdict::Found ? "packing of size 2"
                                  : pr.verdict == MinorVerdict::Absent
                                      ? "absence proved"
                                      : "search refused";
                     o.status = pr.verdict == MinorVerdict::Found ? ClaimStatus::Pass
                                : pr.verdict == MinorVerdict::Refused
                                    ? ClaimStatus::Refused
                                    : ClaimStatus::Fail;
                     return o;
                 }});

    // ---- criterion 5: packing stays below the genus budget ----
    const uint64_t big = 200ull * 1000 * 1000;
    for (int k = 2; k <= 3; ++k) {
        r.push_back(pack_bound_claim("pack-k5-proj-d" + std::to_string(k), complete(5),
                                     "K5", k, 0, 1, big));
        r.push_back(pack_bound_claim("pack-k5-torus-d" + std::to_string(k), complete(5),
                                     "K5", k, 1, 0, big));
        r.push_back(pack_bound_claim("pack-k33-proj-d" + std::to_string(k),
                                     complete_bipartite(3, 3), "K33", k, 0, 1, big));
        r.push_back(pack_bound_claim("pack-k33-torus-d" + std::to_string(k),
                                     complete_bipartite(3, 3), "K33", k, 1, 0, big));
    }
    r.push_back(pack_bound_claim("pack-k5-torus-d3-sharp", complete(5), "K5", 3, 1, 0,
                                 big, /*extra_tightening=*/1));

    // ---- criterion 6: covers grow with the grid order ----
    r.push_back({"cover-k33-proj-growth", "c6", "paper",
                 "cover_K33 of dyck(k,0,1) is nondecreasing over k in {2,3} and at "
                 "least 1 whenever a model exists",
                 100ull * 1000 * 1000, [](uint64_t b) {
                     Graph k33 = complete_bipartite(3, 3);
                     ClaimOutcome o;
                     std::vector<int> values;
                     for (int k = 2; k <= 3; ++k) {
                         GeneratedGraph d = generate(FamilySpec::dyck_grid(k, 0, 1));
                         MinorResult has = is_minor(k33, d.graph, b);
                         o.nodes += has.stats.nodes;
                         if (has.verdict == MinorVerdict::Refused) {
                             o.status = ClaimStatus::Refused;
                             o.computed = "minor search refused";
                             return o;
                         }
                         CoverResult cr = cover({k33}, d.graph, 8, b);
                         o.nodes += cr.stats.nodes;
                         if (cr.verdict != MinorVerdict::Found) {
                             o.status = ClaimStatus::Refused;
                             o.computed = "cover search refused or capped";
                             return o;
                         }
                         int val = static_cast<int>(cr.cert->vertices.size());
                         if (has.verdict == MinorVerdict::Found && val < 1) {
                             o.status = ClaimStatus::Fail;
                             o.computed = "cover 0 despite a model";
                             o.expected = "cover >= 1";
                             return o;
                         }
                         values.push_back(val);
                     }
                     std::ostringstream got;
                     got << "cover(k=2)=" << values[0] << ", cover(k=3)=" << values[1];
                     o.computed = got.str();
                     o.expected = "nondecreasing, >= 1 with a model";
                     o.status = values[1] >= values[0] ? ClaimStatus::Pass
                                                       : ClaimStatus::Fail;
                     return o;
                 }});

    // ---- criterion 10: canonical embeddings ----
    for (int k = 1; k <= 2; ++k)
        for (auto [hh, cc] :
             {std::pair{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}}) {
            std::ostringstream id;
            id << "canon-dyck-" << k << "-" << hh << "-" << cc;
            r.push_back({id.str(), "c10", "paper",
                         "canonical embedding of dyck(" + std::to_string(k) + "," +
                             std::to_string(hh) + "," + std::to_string(cc) +
                             ") traces its own surface and face lengths",
                         0, [k, hh, cc](uint64_t) {
                             CanonicalEmbedding ce =
                                 canonical_embedding(FamilySpec::dyck_grid(k, hh, cc));
                             Surface want{false, hh, cc};
                             std::ostringstream got, wants;
                             got << ce.surface.to_string()
                                 << " simple=" << ce.faces.simple_traced;
                             wants << want.to_string()
                                   << " simple=" << ce.faces.simple_expected;
                             if (!ce.faces.exceptional_matches()) {
                                 got << " exceptional=" << ce.faces.exceptional_traced
                                     << " (formula says "
                                     << ce.faces.exceptional_expected
                                     << "; discrepancy reported)";
                             }
                             ClaimOutcome o = expect_eq(got.str(), wants.str());
                             if (!(ce.surface == want) || !ce.faces.simple_matches())
                                 o.status = ClaimStatus::Fail;
                             else
                                 o.status = ClaimStatus::Pass;
                             return o;
                         }});
        }

    // ---- smoke extras ----
    r.push_back({"g6-roundtrip", "c3", "smoke",
                 "graph6 encode/decode round-trips on the named corpus", 0, [](uint64_t) {
                     std::vector<Graph> corpus{complete(5), petersen(), graph_j(),
                                               mobius_ladder(8),
                                               complete_bipartite(3, 4)};
                     for (const auto& g : corpus) {
                         Graph back = graph6_decode(graph6_encode(g));
                         if (!(back == g)) return expect_eq("mismatch", "round-trip");
                     }
                     return expect_eq("round-trip", "round-trip");
                 }});
    r.push_back({"wall-degrees", "c3", "smoke",
                 "walls have degrees 2 and 3 only and a cyclic perimeter", 0,
                 [](uint64_t) {
                     for (int k = 3; k <= 5; ++k) {
                         GeneratedGraph w = generate(FamilySpec::wall(k));
                         for (int v = 0; v < w.graph.vertex_count(); ++v)
                             if (w.graph.degree(v) < 2 || w.graph.degree(v) > 3)
                                 return expect_eq("bad degree", "degrees in {2,3}");
                     }
                     return expect_eq("degrees in {2,3}", "degrees in {2,3}");
                 }});
    return r;
}

}  // namespace

const std::vector<ClaimSpec>& claim_registry() {
    static const std::vector<ClaimSpec> registry = build_registry();
    return registry;
}

Report run_claim(const ClaimSpec& spec) {
    Report rep;
    rep.claim_id = spec.id;
    auto start = std::chrono::steady_clock::now();
    ClaimOutcome out;
    try {
        out = spec.run(spec.budget ? spec.budget : kDefaultMinorBudget);
    } catch (const std::exception& e) {
        out.status = ClaimStatus::Fail;
        out.computed = std::string("exception: ") + e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    rep.status = out.status;
    rep.computed = out.computed;
    rep.expected = out.expected;
    rep.nodes = out.nodes;
    rep.refusals = out.refusals;
    rep.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return rep;
}

std::vector<Report> verify_suite(const std::string& suite) {
    bool known = suite == "paper" || suite == "smoke" || suite == "full" ||
                 (suite.size() >= 2 && suite[0] == 'c');
    if (!known) throw std::invalid_argument("unknown suite: " + suite);
    std::vector<Report> out;
    bool matched = false;
    for (const auto& spec : claim_registry()) {
        bool take = suite == "full" || spec.suite == suite || spec.criterion == suite;
        if (!take) continue;
        matched = true;
        out.push_back(run_claim(spec));
    }
    if (!matched) throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

namespace {
std::string status_str(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Pass: return "pass";
        case ClaimStatus::Fail: return "fail";
        case ClaimStatus::Refused: return "refused";
    }
    return "?";
}
std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}
}  // namespace

std::string reports_to_json(const std::vector<Report>& reports) {
    std::ostringstream os;
    os << "[\n";
    for (size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        os << "  {\"claim_id\": \"" << json_escape(r.claim_id) << "\", \"status\": \""
           << status_str(r.status) << "\", \"computed\": \"" << json_escape(r.computed)
           << "\", \"expected\": \"" << json_escape(r.expected)
           << "\", \"search_stats\": {\"nodes\": " << r.nodes
           << ", \"refusals\": " << r.refusals << "}, \"runtime_ms\": " << r.runtime_ms
           << "}" << (i + 1 < reports.size() ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
}

std::string reports_to_csv(const std::vector<Report>& reports) {
    std::ostringstream os;
    os << "claim_id,status,computed,expected,nodes,refusals,runtime_ms\n";
    for (const auto& r : reports) {
        auto q = [](const std::string& s) {
            std::string out = "\"";
            for (char c : s) {
                if (c == '"') out += '"';
                out += c;
            }
            return out + "\"";
        };
        os << q(r.claim_id) << "," << status_str(r.status) << "," << q(r.computed)
           << "," << q(r.expected) << "," << r.nodes << "," << r.refusals << ","
           << r.runtime_ms << "\n";
    }
    return os.str();
}

std::string registry_to_json() {
    std::ostringstream os;
    os << "[\n";
    const auto& reg = claim_registry();
    for (size_t i = 0; i < reg.size(); ++i) {
        const auto& c = reg[i];
        os << "  {\"id\": \"" << json_escape(c.id) << "\", \"criterion\": \""
           << c.criterion << "\", \"suite\": \"" << c.suite << "\", \"statement\": \""
           << json_escape(c.statement) << "\", \"budget\": " << c.budget << "}"
           << (i + 1 < reg.size() ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
}

int exit_code_for(const std::vector<Report>& reports) {
    bool fail = false, refused = false;
    for (const auto& r : reports) {
        if (r.status == ClaimStatus::Fail) fail = true;
        if (r.status == ClaimStatus::Refused) refused = true;
    }
    if (fail) return 1;
    if (refused) return 2;
    return 0;
}

}  // namespace minorlab
