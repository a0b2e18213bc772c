// zlab: bipartite recurrent quivers, their classification, and T-system
// dynamics from the command line.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zlab/catalog.hpp"
#include "zlab/dynamics.hpp"
#include "zlab/dynkin.hpp"
#include "zlab/quiver.hpp"
#include "zlab/spectral.hpp"
#include "zlab/twist.hpp"

using namespace zlab;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out.good()) throw std::runtime_error("cannot write " + out_path);
        out << text << "\n";
    }
}

json kac_quadruple_json(const Bigraph& g) {
    KacQuadruple kq = kac_quadruple(g);
    return {{"s_g", kq.s_g},
            {"descr_g", kq.descr_g},
            {"s_gstar", kq.s_gstar},
            {"descr_gstar", kq.descr_gstar}};
}

std::vector<long long> parse_params(const std::string& csv) {
    std::vector<long long> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoll(tok));
    }
    return out;
}

DynkinType parse_type(const std::string& name) {
    // affine types only, accepts A3 / A_3 / hA_3 / D4 / E6 spellings
    std::string s = name;
    if (s.rfind("h", 0) == 0) s = s.substr(1);
    if (s.empty()) throw std::runtime_error("empty type name");
    size_t i = 1;
    if (i < s.size() && s[i] == '_') ++i;
    int idx = std::stoi(s.substr(i));
    switch (s[0]) {
        case 'A': return {DynkinKind::AffA, idx};
        case 'D': return {DynkinKind::AffD, idx};
        case 'E':
            if (idx == 6) return {DynkinKind::AffE6, 6};
            if (idx == 7) return {DynkinKind::AffE7, 7};
            if (idx == 8) return {DynkinKind::AffE8, 8};
            break;
    }
    throw std::runtime_error("unknown affine type " + name);
}

std::string series_csv(const std::vector<std::vector<std::pair<long long, std::string>>>& rows) {
    std::ostringstream os;
    os << "t,vertex,value\n";
    size_t max_len = 0;
    for (auto& r : rows) max_len = std::max(max_len, r.size());
    for (size_t k = 0; k < max_len; ++k)
        for (size_t v = 0; v < rows.size(); ++v)
            if (k < rows[v].size())
                os << rows[v][k].first << "," << v << "," << rows[v][k].second << "\n";
    return os.str();
}

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"bipartite recurrent quivers: classification and T-system dynamics"};
    app.require_subcommand(1);
    int jobs = 1;

    auto* catalog = app.add_subcommand("catalog", "build or list classification instances");
    catalog->require_subcommand(1);
    auto* cat_build = catalog->add_subcommand("build", "construct one instance");
    int family_id = 0;
    std::string params_csv, out_path, in_path, in2_path;
    cat_build->add_option("--family", family_id, "item number 1..53")->required();
    cat_build->add_option("--params", params_csv, "comma-separated parameters");
    cat_build->add_option("--out", out_path, "output path (default stdout)");
    auto* cat_list = catalog->add_subcommand("list", "manifest of instances up to a size bound");
    int max_vertices = 22;
    cat_list->add_option("--max-vertices", max_vertices, "vertex bound")->required();
    cat_list->add_option("--jobs", jobs, "worker threads for the manifest sweep");
    cat_list->add_option("--out", out_path, "output path (default stdout)");

    auto* classify = app.add_subcommand("classify", "labeling regime and Kac quadruple");
    classify->add_option("--in", in_path, "bigraph JSON")->required();
    classify->add_option("--out", out_path, "output path");

    auto* evolve = app.add_subcommand("evolve", "run a T-system engine");
    std::string mode = "numeric", init_spec = "ones", dump_path;
    int steps = 16;
    double tol = 1e-12;
    evolve->add_option("--in", in_path, "bigraph JSON")->required();
    evolve->add_option("--mode", mode, "symbolic | tropical | numeric");
    evolve->add_option("--steps", steps, "number of time steps");
    evolve->add_option("--init", init_spec, "ones | perron | <file with a JSON array>");
    evolve->add_option("--out", out_path, "CSV output path");
    evolve->add_option("--dump", dump_path, "symbolic term dump (JSON)");
    evolve->add_option("--tol", tol, "Perron iteration tolerance");

    auto* growth = app.add_subcommand("growth", "classify a time series");
    bool values_are_log = true;
    double bounded_tol = 1e-6, sd_tol = 0.02;
    growth->add_option("--in", in_path, "CSV from evolve")->required();
    growth->add_flag("--values-are-log,!--values-are-plain", values_are_log,
                     "input column holds log values (default)");
    growth->add_option("--bounded-tol", bounded_tol, "state revisit tolerance");
    growth->add_option("--sd-tol", sd_tol, "stabilization threshold");
    growth->add_option("--out", out_path, "output path");

    auto* dual_cmd = app.add_subcommand("dual", "swap red and blue");
    dual_cmd->add_option("--in", in_path, "bigraph JSON")->required();
    dual_cmd->add_option("--out", out_path, "output path");
    auto* iso = app.add_subcommand("isocheck", "bigraph isomorphism");
    iso->add_option("--in", in_path, "bigraph JSON")->required();
    iso->add_option("--with", in2_path, "bigraph JSON")->required();
    iso->add_option("--out", out_path, "output path");

    auto* twist = app.add_subcommand("twist", "reflection-game verifications");
    twist->require_subcommand(1);
    auto* tw_verify = twist->add_subcommand("verify", "factorization of tau values");
    std::string seq_csv, type_name = "D4";
    tw_verify->add_option("--quiver", in_path, "quiver JSON")->required();
    tw_verify->add_option("--seq", seq_csv, "comma-separated vertex sequence")->required();
    tw_verify->add_option("--out", out_path, "output path");
    auto* tw_devron = twist->add_subcommand("devron", "forward singularity at t0 = 2");
    tw_devron->add_option("--quiver", in_path, "quiver JSON")->required();
    tw_devron->add_option("--out", out_path, "output path");
    auto* tw_cons = twist->add_subcommand("conserved", "time-dependent conserved quantities");
    int trials = 20;
    unsigned seed = 12345;
    double cons_tol = 1e-8;
    tw_cons->add_option("--type", type_name, "affine type, e.g. A3, D4, E6")->required();
    tw_cons->add_option("--trials", trials, "random seeds to test");
    tw_cons->add_option("--seed", seed, "RNG seed");
    tw_cons->add_option("--tol", cons_tol, "relative tolerance");
    tw_cons->add_option("--out", out_path, "output path");

    CLI11_PARSE(app, argc, argv);

    if (cat_build->parsed()) {
        FamilyId f{family_id, parse_params(params_csv)};
        emit(to_json(build_family(f)), out_path);
        return 0;
    }
    if (cat_list->parsed()) {
        auto cat = enumerate_catalog(max_vertices);
        std::vector<json> entries(cat.size());
        auto work = [&](size_t lo, size_t hi) {
            for (size_t i = lo; i < hi; ++i) {
                auto& [f, g] = cat[i];
                entries[i] = {{"family", f.id},
                              {"name", family_name(f.id)},
                              {"params", f.params},
                              {"vertices", g.n},
                              {"kac_quadruple", kac_quadruple_json(g)}};
            }
        };
        if (jobs > 1) {
            std::vector<std::future<void>> fs;
            size_t chunk = (cat.size() + jobs - 1) / jobs;
            for (size_t lo = 0; lo < cat.size(); lo += chunk)
                fs.push_back(std::async(std::launch::async, work, lo,
                                        std::min(cat.size(), lo + chunk)));
            for (auto& f : fs) f.get();
        } else {
            work(0, cat.size());
        }
        json j = json::array();
        for (auto& e : entries) j.push_back(e);
        emit(j.dump(), out_path);
        return 0;
    }
    if (classify->parsed()) {
        Bigraph g = bigraph_from_json(slurp(in_path));
        Regime r = labeling_regime(g);
        json j;
        j["n"] = g.n;
        switch (r.tag) {
            case RegimeTag::FiniteFinite: j["regime"] = "FiniteFinite"; break;
            case RegimeTag::AffineFinite: j["regime"] = "AffineFinite"; break;
            case RegimeTag::AffineAffine: j["regime"] = "AffineAffine"; break;
            case RegimeTag::None: j["regime"] = "None"; break;
        }
        if (r.tag == RegimeTag::AffineAffine || r.tag == RegimeTag::AffineFinite) {
            // the Cartan matrix sits over the affine side
            Bigraph h = g;
            if (r.tag == RegimeTag::AffineFinite) {
                auto comps = components(g.n, g.red);
                Bigraph sub = induced(g, comps[0]);
                DynkinType t = recognize(Graph::make(sub.n, sub.red)).type;
                if (!t.is_affine()) h = dual(g);
            }
            WeakGCM a = cartan_of(h);
            json rows = json::array();
            for (int i = 0; i < a.n; ++i) {
                json row = json::array();
                for (int k = 0; k < a.n; ++k) row.push_back(a.at(i, k));
                rows.push_back(row);
            }
            j["cartan_matrix"] = rows;
            KacClass kc = kac_type(a);
            json kj;
            kj["type"] = kc.trichotomy == KacTri::Fin   ? "Fin"
                         : kc.trichotomy == KacTri::Aff ? "Aff"
                                                        : "Ind";
            kj["name"] = kc.diagram_name;
            kj["delta"] = kc.delta;
            j["kac"] = kj;
        }
        if (r.tag == RegimeTag::AffineAffine) {
            j["kac_quadruple"] = kac_quadruple_json(g);
            if (r.additive) {
                std::vector<std::string> lam;
                for (auto& x : *r.additive) lam.push_back(x.to_string());
                j["additive"] = lam;
            }
        }
        emit(j.dump(), out_path);
        return 0;
    }
    if (evolve->parsed()) {
        Bigraph g = bigraph_from_json(slurp(in_path));
        std::vector<std::vector<std::pair<long long, std::string>>> rows(g.n);
        auto time_of = [&](int v, size_t k) { return (long long)g.color[v] + 2 * (long long)k; };
        if (mode == "symbolic") {
            TermBudget budget;
            if (const char* env = std::getenv("ZLAB_BUDGET_TERMS")) budget.limit = std::stoull(env);
            auto series = symbolic_evolve(g, steps, budget);
            json dump = json::array();
            for (int v = 0; v < g.n; ++v)
                for (size_t k = 0; k < series[v].size(); ++k) {
                    rows[v].push_back({time_of(v, k), "\"" + series[v][k].to_string() + "\""});
                    json terms = json::array();
                    for (const auto& [e, c] : series[v][k].terms())
                        terms.push_back({{"coef", c.to_string()}, {"exp", e}});
                    dump.push_back({{"vertex", v}, {"t", time_of(v, k)}, {"terms", terms}});
                }
            if (!dump_path.empty()) emit(dump.dump(), dump_path);
        } else if (mode == "tropical") {
            std::vector<Rational> lam(g.n, Rational(1));
            if (init_spec != "ones") {
                json init = json::parse(slurp(init_spec));
                for (int v = 0; v < g.n; ++v)
                    lam[v] = Rational::from_string(init.at(v).get<std::string>());
            }
            auto series = tropical_evolve(g, lam, steps);
            for (int v = 0; v < g.n; ++v)
                for (size_t k = 0; k < series[v].size(); ++k)
                    rows[v].push_back({time_of(v, k), series[v][k].to_string()});
        } else if (mode == "numeric") {
            std::vector<double> init(g.n, 1.0);
            if (init_spec == "perron") {
                init = perron(g, tol).eigenvector;
            } else if (init_spec != "ones") {
                json j = json::parse(slurp(init_spec));
                for (int v = 0; v < g.n; ++v) init[v] = j.at(v).get<double>();
            }
            auto series = numeric_evolve(g, init, steps);
            for (int v = 0; v < g.n; ++v)
                for (size_t k = 0; k < series[v].size(); ++k)
                    rows[v].push_back({time_of(v, k), fmt_double(series[v][k])});
        } else {
            throw std::runtime_error("unknown mode " + mode);
        }
        emit(series_csv(rows), out_path);
        return 0;
    }
    if (growth->parsed()) {
        std::ifstream in(in_path);
        if (!in.good()) throw std::runtime_error("cannot open " + in_path);
        std::string line;
        std::getline(in, line);  // header
        std::map<int, std::vector<double>> per_vertex;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::stringstream ss(line);
            std::string t, v, val;
            std::getline(ss, t, ',');
            std::getline(ss, v, ',');
            std::getline(ss, val, ',');
            double x = std::stod(val);
            per_vertex[std::stoi(v)].push_back(values_are_log ? x : std::log(x));
        }
        ParitySeries<double> series;
        for (auto& [v, s] : per_vertex) series.push_back(std::move(s));
        json j;
        try {
            GrowthVerdict verdict = growth_classify(series, {bounded_tol, sd_tol});
            j["tag"] = growth_tag_name(verdict.tag);
            j["rate"] = verdict.rate;
            j["period"] = verdict.period;
            j["diagnostics"] = {{"statistic", verdict.statistic},
                                {"rel_sd", verdict.rel_sd},
                                {"window", {verdict.window_lo, verdict.window_hi}},
                                {"bounded_tol", bounded_tol},
                                {"sd_tol", sd_tol}};
        } catch (const InconclusiveGrowth& e) {
            j["tag"] = "Inconclusive";
            j["message"] = e.what();
            emit(j.dump(), out_path);
            return 3;
        }
        emit(j.dump(), out_path);
        return 0;
    }
    if (dual_cmd->parsed()) {
        emit(to_json(dual(bigraph_from_json(slurp(in_path)))), out_path);
        return 0;
    }
    if (iso->parsed()) {
        Bigraph a = bigraph_from_json(slurp(in_path));
        Bigraph b = bigraph_from_json(slurp(in2_path));
        json j;
        j["isomorphic"] = is_isomorphic(a, b);
        emit(j.dump(), out_path);
        return 0;
    }
    if (tw_verify->parsed()) {
        Quiver q = quiver_from_json(slurp(in_path));
        std::vector<int> seq;
        for (long long x : parse_params(seq_csv)) seq.push_back((int)x);
        TermBudget budget;
        if (const char* env = std::getenv("ZLAB_BUDGET_TERMS")) budget.limit = std::stoull(env);
        std::vector<Edge> es;
        for (const Arrow& x : q.arrows) es.push_back({x.from, x.to, x.mult});
        json j;
        j["factorization_holds"] = factorization_check(q, seq, budget);
        j["sequence"] = seq;
        j["exponents"] = exponent_matrix(Graph::make(q.n, es), seq);
        emit(j.dump(), out_path);
        return 0;
    }
    if (tw_devron->parsed()) {
        Quiver q = quiver_from_json(slurp(in_path));
        json j;
        j["devron_t0_2"] = devron_check(q);
        emit(j.dump(), out_path);
        return 0;
    }
    if (tw_cons->parsed()) {
        DynkinType t = parse_type(type_name);
        ConservedReport rep = conserved_check(t, trials, seed, cons_tol);
        json j;
        j["type"] = t.name();
        j["affine_coxeter_number"] = rep.m;
        j["coxeter_mckay_ratio"] = rep.ratio;
        j["trials"] = rep.trials;
        j["seed"] = seed;
        j["sign"] = rep.sign;
        j["worst_b_residual"] = rep.worst_b;
        j["worst_a_residual"] = rep.worst_a;
        j["ok"] = rep.ok;
        emit(j.dump(), out_path);
        return rep.ok ? 0 : 4;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        json j;
        j["status"] = "error";
        j["message"] = e.what();
        std::cout << j.dump() << "\n";
        return 2;
    }
}
