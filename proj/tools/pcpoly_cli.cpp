#include "pcpoly/clique.hpp"
#include "pcpoly/extremal.hpp"
#include "pcpoly/matching.hpp"
#include "pcpoly/monoid.hpp"
#include "pcpoly/random_graph.hpp"
#include "pcpoly/survey.hpp"
#include "pcpoly/transforms.hpp"
#include "pcpoly/weighted.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace pcpoly;
using Json = nlohmann::ordered_json;

namespace {

struct Globals {
    std::string width = "1e-12";
    std::string format = "text";
    int threads = 0;
    Rat w() const { return rat_from_decimal(width); }
} opt;

// number of invariant violations found; the exit status is nonzero iff > 0
long violations = 0;

std::string rat_str(const Rat& r) { return r.get_str(); }

Json enclosure_json(const RootEnclosure& r, int digits = 15) {
    Json j;
    j["lo"] = rat_str(r.lo);
    j["hi"] = rat_str(r.hi);
    j["approx"] = decimal_string(r.midpoint(), digits);
    j["multiplicity"] = r.multiplicity;
    j["exact"] = r.exact();
    return j;
}

Json beta_value_json(const BetaValue& b) {
    Json j = enclosure_json(b.root);
    if (b.closed) j["closed_form"] = b.closed->to_string();
    j["polynomial"] = to_string(b.poly);
    return j;
}

Json coeffs_json(const IntPoly& p) {
    Json a = Json::array();
    for (auto& c : p.c) a.push_back(c.get_str());
    return a;
}

std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + scalar(v[i]);
        return s;
    }
    if (v.is_object()) return v.dump();
    return v.dump();
}

// flattens nested objects into dotted keys for text and csv
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) flatten(*it, key, out);
        else out.emplace_back(key, scalar(*it));
    }
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

// A result is an object, or an array of objects (one csv row each).
void emit(const Json& result) {
    if (opt.format == "json") {
        std::cout << result.dump(2) << "\n";
        return;
    }
    std::vector<Json> rows;
    if (result.is_array()) rows.assign(result.begin(), result.end());
    else rows.push_back(result);
    if (opt.format == "csv") {
        bool header = true;
        for (auto& r : rows) {
            std::vector<std::pair<std::string, std::string>> kv;
            flatten(r, "", kv);
            if (header) {
                for (std::size_t i = 0; i < kv.size(); ++i) std::cout << (i ? "," : "") << csv_cell(kv[i].first);
                std::cout << "\n";
                header = false;
            }
            for (std::size_t i = 0; i < kv.size(); ++i) std::cout << (i ? "," : "") << csv_cell(kv[i].second);
            std::cout << "\n";
        }
        return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) std::cout << "\n";
        std::vector<std::pair<std::string, std::string>> kv;
        flatten(rows[i], "", kv);
        for (auto& [k, v] : kv) std::cout << k << ": " << v << "\n";
    }
}

Graph read_graph(const std::string& s) { return parse_graph_auto(s); }

Json graph_json(const Graph& g) {
    Json j;
    j["graph6"] = to_graph6(g);
    j["n"] = g.n;
    j["edges"] = g.num_edges();
    return j;
}

std::vector<Rat> parse_rats(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) out.push_back(rat_from_decimal(tok));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"clique-type graph polynomials with certified roots"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--width", opt.width, "root enclosure width, e.g. 1e-12 or 1/1000")->capture_default_str();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "worker threads for surveys (0: PCPOLY_THREADS or all cores)");

    // poly
    std::string graph_arg, kind = "pc";
    auto* poly = app.add_subcommand("poly", "clique-type polynomial of a graph");
    poly->add_option("graph", graph_arg, "graph6, an edge list like \"4; 0 1; 1 2\", or a name: K5, Kbar4, K2,3, P4, C5, star4, thr0101, Petersen")->required();
    poly->add_option("--kind", kind)->check(CLI::IsMember({"pc", "dependence", "clique", "independence"}));
    poly->callback([&] {
        Graph g = read_graph(graph_arg);
        PolyKind k = kind == "pc" ? PolyKind::pc
                     : kind == "dependence" ? PolyKind::dependence
                     : kind == "clique" ? PolyKind::clique
                                        : PolyKind::independence;
        IntPoly p = clique_type_polynomial(g, k);
        Json j;
        j["graph"] = graph_json(g);
        j["kind"] = kind;
        j["polynomial"] = to_string(p);
        j["coefficients"] = coeffs_json(p);
        emit(j);
    });

    auto* beta_cmd = app.add_subcommand("beta", "certified dominant root of PC(G,x)");
    beta_cmd->add_option("graph", graph_arg)->required();
    beta_cmd->callback([&] {
        Graph g = read_graph(graph_arg);
        Json j;
        j["graph"] = graph_json(g);
        j["beta"] = enclosure_json(beta(g, opt.w()));
        emit(j);
    });

    auto* profile = app.add_subcommand("profile", "clique counts by size");
    profile->add_option("graph", graph_arg)->required();
    profile->callback([&] {
        Graph g = read_graph(graph_arg);
        CliqueProfile p = clique_profile(g);
        Json j;
        j["graph"] = graph_json(g);
        j["omega"] = p.omega();
        j["counts"] = p.counts;
        emit(j);
    });

    int length = 8;
    std::string order_arg;
    auto* monoid = app.add_subcommand("monoid", "normal-form counts m_t and Lie dimensions");
    monoid->add_option("graph", graph_arg)->required();
    monoid->add_option("--length", length, "largest word length")->check(CLI::Range(0, 200));
    monoid->add_option("--order", order_arg, "vertex order as a comma list, largest first");
    monoid->callback([&] {
        Graph g = read_graph(graph_arg);
        VertexOrder ord = VertexOrder::standard(g.n);
        if (!order_arg.empty()) {
            std::vector<int> perm;
            std::stringstream ss(order_arg);
            for (std::string t; std::getline(ss, t, ',');) perm.push_back(std::stoi(t));
            ord = VertexOrder::from_perm(perm);
        }
        auto m = m_sequence(g, length);
        Json rows = Json::array();
        LieDims lie = lie_dimensions(g, std::max(length, 1));
        for (int t = 0; t <= length; ++t) {
            Int counted = count_normal_forms(g, ord, t, CountMode::automaton);
            if (counted != m[t]) ++violations;
            Json r;
            r["t"] = t;
            r["m_t"] = m[t].get_str();
            r["normal_forms"] = counted.get_str();
            r["lie_dim"] = t >= 1 ? lie.dims[t - 1].get_str() : std::string("");
            rows.push_back(r);
        }
        emit(rows);
    });

    int u = 0, v = 1;
    std::string transform_kind = "kelmans";
    auto* transform = app.add_subcommand("transform", "Kelmans transformation or reduction to a threshold graph");
    transform->add_option("kind", transform_kind)->check(CLI::IsMember({"kelmans", "threshold"}))->required();
    transform->add_option("graph", graph_arg)->required();
    transform->add_option("-u", u, "target vertex");
    transform->add_option("-v", v, "source vertex");
    transform->callback([&] {
        Graph g = read_graph(graph_arg);
        Json j;
        j["input"] = graph_json(g);
        RootEnclosure before = beta(g, opt.w());
        Graph out;
        if (transform_kind == "kelmans") {
            out = kelmans(g, u, v);
            j["nontrivial"] = is_nontrivial_kelmans(g, u, v);
        } else {
            ThresholdReduction r = reduce_to_threshold(g);
            out = r.result;
            j["threshold_bits"] = r.vector.bits;
            j["steps"] = static_cast<int>(r.steps.size());
        }
        RootEnclosure after = beta(out, opt.w());
        j["output"] = graph_json(out);
        j["beta_before"] = enclosure_json(before);
        j["beta_after"] = enclosure_json(after);
        // a Kelmans step never lowers beta
        if (after.hi < before.lo) ++violations;
        emit(j);
    });

    int n_arg = 5;
    long k_arg = 0;
    std::string which = "max";
    auto* extremal = app.add_subcommand("extremal", "extremal constructions and bounds over G(n,k)");
    extremal->add_option("which", which)->check(CLI::IsMember({"max", "min", "bounds"}))->required();
    extremal->add_option("n", n_arg)->required();
    extremal->add_option("k", k_arg)->required();
    extremal->callback([&] {
        Json j;
        j["n"] = n_arg;
        j["k"] = k_arg;
        if (which == "bounds") {
            BetaBounds b = beta_bounds(n_arg, k_arg);
            j["w"] = b.w;
            j["fisher_lower"] = rat_str(b.fisher_lower);
            j["fisher_nonis_lower"] = b.fisher_nonis_lower.to_string();
            j["samuelson_upper_if_real_rooted"] = rat_str(b.samuelson_upper);
            j["sqrt_upper"] = b.sqrt_upper.to_string();
            j["min_window_lower"] = b.window_lower.to_string();
            j["min_window_upper"] = b.window_upper.to_string();
        } else {
            ExtremalResult r = which == "max" ? max_beta_graph(n_arg, k_arg) : min_beta_graph(n_arg, k_arg);
            j["graph"] = graph_json(r.graph);
            j["beta"] = beta_value_json(r.predicted_beta);
            j["conditional"] = r.conditional;
            if (r.formula) j["closed_form"] = r.formula->to_string();
        }
        emit(j);
    });

    auto* planar_cmd = app.add_subcommand("planar", "planar extremes over Pl(n,k)");
    planar_cmd->add_option("n", n_arg)->required();
    planar_cmd->add_option("k", k_arg)->required();
    planar_cmd->callback([&] {
        PlanarExtremes pe = planar_extremes(n_arg, k_arg);
        Json j;
        j["n"] = n_arg;
        j["k"] = k_arg;
        j["lambda_minus"] = beta_value_json(pe.lambda_minus);
        j["g_minus"] = graph_json(pe.g_minus);
        j["lambda_plus"] = beta_value_json(pe.lambda_plus);
        j["g_plus"] = graph_json(pe.g_plus);
        emit(j);
    });

    std::string random_kind = "beta", p_arg = "1/2";
    int r_arg = 1, t_arg = 40, steps = 10;
    auto* random = app.add_subcommand("random", "expected PC polynomial of G(n,p), root ladder and beta0");
    random->add_option("kind", random_kind)->check(CLI::IsMember({"beta", "ladder", "limit", "beta0", "csv"}))->required();
    random->add_option("-n", n_arg, "vertex count");
    random->add_option("-p", p_arg, "edge probability");
    random->add_option("-r", r_arg, "root index, largest first");
    random->add_option("-t", t_arg, "ladder polynomial degree");
    random->add_option("--steps", steps, "p grid steps for csv");
    random->callback([&] {
        Rat p = rat_from_decimal(p_arg);
        Json j;
        if (random_kind == "beta") {
            RandomBeta b = beta_random(n_arg, p, opt.w());
            j["n"] = n_arg;
            j["p"] = rat_str(p);
            j["polynomial"] = to_string(pc_random(n_arg, p).poly);
            j["beta"] = enclosure_json(b.root);
            if (b.closed_form) {
                std::ostringstream s;
                s << std::setprecision(30) << *b.closed_form;
                j["closed_form"] = s.str();
            }
        } else if (random_kind == "ladder") {
            j["n"] = n_arg;
            j["p"] = rat_str(p);
            j["r"] = r_arg;
            j["root"] = enclosure_json(random_root_ladder(n_arg, p, r_arg, opt.w()));
        } else if (random_kind == "limit") {
            j["p"] = rat_str(p);
            j["r"] = r_arg;
            j["t"] = t_arg;
            j["root"] = enclosure_json(ladder_limit_roots(r_arg, p, t_arg, opt.w()));
        } else if (random_kind == "beta0") {
            Beta0 b = beta0_constant(opt.w() < Rat(1, 1000000) ? Rat(1, 1000000000) : opt.w());
            j["value"] = enclosure_json(b.value, 13);
            j["ladder"] = enclosure_json(b.ladder, 13);
            j["series"] = enclosure_json(b.series, 13);
        } else {
            std::cout << ladder_csv(r_arg, steps, t_arg);
            return;
        }
        emit(j);
    });

    std::string lll_kind = "threshold", probs;
    auto* lll = app.add_subcommand("lll", "local lemma threshold and feasibility of a dependency graph");
    lll->add_option("kind", lll_kind)->check(CLI::IsMember({"threshold", "check"}))->required();
    lll->add_option("graph", graph_arg)->required();
    lll->add_option("--probs", probs, "comma-separated event probabilities for check");
    lll->callback([&] {
        Graph g = read_graph(graph_arg);
        Json j;
        j["graph"] = graph_json(g);
        if (lll_kind == "threshold") {
            j["threshold"] = enclosure_json(lll_threshold(g, opt.w()));
        } else {
            std::vector<Rat> ps = parse_rats(probs);
            if (ps.size() == 1) ps.assign(g.n, ps[0]);
            LLLResult r = lll_check(g, ps);
            j["feasible"] = r.feasible;
            if (r.feasible) j["bound"] = rat_str(r.bound);
            if (r.witness) j["smallest_root"] = enclosure_json(*r.witness);
            j["polynomial"] = to_string(lll_polynomial(g, ps), "t");
        }
        emit(j);
    });

    auto* matching = app.add_subcommand("matching", "matching polynomial and its largest root");
    matching->add_option("graph", graph_arg)->required();
    matching->callback([&] {
        Graph g = read_graph(graph_arg);
        MatchingPair mp = matching_polynomials(g);
        Json j;
        j["graph"] = graph_json(g);
        j["mu"] = to_string(mp.mu);
        j["generating"] = to_string(mp.M);
        if (count_nonreal_roots(mp.mu) != 0) ++violations;
        if (g.num_edges() > 0) j["t"] = enclosure_json(t_largest(g, opt.w()));
        emit(j);
    });

    auto* adjoint = app.add_subcommand("adjoint", "adjoint polynomial and its largest root");
    adjoint->add_option("graph", graph_arg)->required();
    adjoint->callback([&] {
        Graph g = read_graph(graph_arg);
        IntPoly h = adjoint_polynomial(g);
        Json j;
        j["graph"] = graph_json(g);
        j["adjoint"] = to_string(h);
        j["partitions"] = Json::array();
        for (auto& a : clique_partition_counts(g)) j["partitions"].push_back(a.get_str());
        j["hat_graph"] = graph_json(hat_graph(g));
        j["largest_root"] = enclosure_json(adjoint_root(g, opt.w()));
        emit(j);
    });

    std::string survey_kind = "census";
    std::vector<int> ns;
    auto* survey = app.add_subcommand("survey", "exhaustive surveys over labelled graphs");
    survey->add_option("kind", survey_kind)->check(CLI::IsMember({"census", "bounds", "average"}))->required();
    survey->add_option("-n", ns, "vertex counts")->required();
    survey->callback([&] {
        if (survey_kind == "census") {
            std::vector<CensusRow> rows;
            for (int n : ns) rows.push_back(survey_nonreal(n, opt.threads));
            if (opt.format == "csv") {
                std::cout << census_csv(rows);
                return;
            }
            Json out = Json::array();
            for (auto& r : rows)
                out.push_back({{"n", r.n},
                               {"graphs_total", r.graphs_total},
                               {"polys_with_nonreal", r.polys_with_nonreal},
                               {"roots_total", r.roots_total},
                               {"roots_nonreal", r.roots_nonreal}});
            emit(out);
        } else if (survey_kind == "bounds") {
            Json out = Json::array();
            for (int n : ns) {
                BoundsReport r = survey_bounds(n, opt.threads);
                violations += static_cast<long>(r.violations.size());
                Json v = Json::array();
                for (auto& x : r.violations) v.push_back(x.check + " @ " + x.graph6);
                out.push_back({{"n", r.n},
                               {"graphs", r.graphs},
                               {"violations", static_cast<long>(r.violations.size())},
                               {"e_min", r.e_min},
                               {"e_max", r.e_max},
                               {"fisher_equality", r.fisher_equality},
                               {"real_rooted", r.real_rooted},
                               {"witnesses", v}});
            }
            emit(out);
        } else {
            Json out = Json::array();
            for (int n : ns) {
                Interval a = average_beta(n, opt.w(), opt.threads);
                out.push_back({{"n", n}, {"lo", rat_str(a.lo)}, {"hi", rat_str(a.hi)}, {"approx", a.approx()},
                               {"per_vertex", a.approx() / n}});
            }
            emit(out);
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (violations) std::cerr << violations << " invariant violation(s)\n";
    return violations ? 1 : 0;
}
