// curvecx: command line front end for the curve workbench.
// Every subcommand is a thin adapter over the core library; output is
// byte-deterministic for fixed inputs.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "curvecx/ball.hpp"
#include "curvecx/cover.hpp"
#include "curvecx/curves.hpp"
#include "curvecx/lab.hpp"
#include "curvecx/parallel.hpp"
#include "curvecx/resolution.hpp"
#include "curvecx/slope.hpp"
#include "json.hpp"

using namespace ccx;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "curvecx 0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerificationFailure = 2;
constexpr int kExitBudget = 3;

struct Options {
    std::string surface = "1,1";
    int max_len = 4;
    int jobs = 0;
    std::uint64_t budget = 200'000'000;
    std::string format = "json";
    std::string out;
    bool deterministic = true;  // documented contract; there is no other mode
};

std::pair<int, int> parse_surface(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) fail(Err::Usage, "--surface expects g,n");
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::logic_error&) {
        fail(Err::Usage, "--surface expects integers g,n");
    }
}

RibbonSurface surface_of(const Options& opt) {
    auto [g, n] = parse_surface(opt.surface);
    return build_surface(g, n);
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) fail(Err::Usage, "cannot open output file " + opt.out);
    f << text << "\n";
}

int report_exit(const VerificationReport& rep) {
    return rep.ok() ? kExitOk : kExitVerificationFailure;
}

// flags-first configuration: the optional JSON config file only fills in
// values the command line leaves at their defaults
void merge_config(Options& opt, const std::string& path, const CLI::App& app) {
    std::ifstream f(path);
    if (!f) fail(Err::Usage, "cannot read config file " + path);
    json cfg = json::parse(f, nullptr, true);
    auto absent = [&](const std::string& flag) { return app.count(flag) == 0; };
    if (cfg.contains("surface") && absent("--surface")) opt.surface = cfg["surface"];
    if (cfg.contains("max_len") && absent("--max-len")) opt.max_len = cfg["max_len"];
    if (cfg.contains("jobs") && absent("--jobs")) opt.jobs = cfg["jobs"];
    if (cfg.contains("budget") && absent("--budget")) opt.budget = cfg["budget"];
    if (cfg.contains("format") && absent("--format")) opt.format = cfg["format"];
    if (cfg.contains("out") && absent("--out")) opt.out = cfg["out"];
}

json profile_json(const RelationProfile& p) {
    return json{{"kind", rel_name(p.kind)}, {"geo", p.geo}, {"alg", p.alg}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial workbench for simple closed curves on small surfaces"};
    app.require_subcommand(0, 1);
    app.set_version_flag("--version", kVersion);

    Options opt;
    std::string config_path;
    app.add_option("--surface", opt.surface, "surface g,n")->capture_default_str();
    app.add_option("--max-len", opt.max_len, "word length bound")->capture_default_str();
    app.add_option("--jobs", opt.jobs, "verifier parallelism (0 = all cores)");
    app.add_option("--budget", opt.budget, "candidate budget for enumerations");
    app.add_option("--format", opt.format, "json|dot|text")->capture_default_str();
    app.add_option("--out", opt.out, "write machine output to a file");
    app.add_option("--config", config_path, "JSON config file (flags take precedence)");
    app.add_flag("--deterministic", opt.deterministic,
                 "byte-deterministic output (always on; documents the contract)");

    // surface info
    auto* sc_surface = app.add_subcommand("surface", "surface model queries");
    auto* sc_surface_info = sc_surface->add_subcommand("info", "print the surface model");

    // curves enum
    auto* sc_curves = app.add_subcommand("curves", "curve enumeration");
    auto* sc_curves_enum = sc_curves->add_subcommand("enum", "list essential classes");

    // rel
    std::vector<std::string> rel_words;
    auto* sc_rel = app.add_subcommand("rel", "relation profile of two classes");
    sc_rel->add_option("words", rel_words, "two curve words")->expected(2);

    // product
    std::vector<std::string> prod_words;
    auto* sc_product = app.add_subcommand("product", "resolution product of two classes");
    sc_product->add_option("words", prod_words, "two curve words")->expected(2);

    // reduce / express
    std::string fn_arg;
    std::string target_word;
    auto* sc_reduce = app.add_subcommand("reduce", "one reduction step against a system");
    sc_reduce->add_option("--fn", fn_arg, "comma separated disjoint classes")->required();
    sc_reduce->add_option("word", target_word, "class to reduce")->required();
    std::string express_fn, express_word;
    auto* sc_express = app.add_subcommand("express", "product tree over the generator set");
    sc_express->add_option("--fn", express_fn, "comma separated disjoint classes")->required();
    sc_express->add_option("word", express_word, "class to express")->required();

    // ball
    std::string ball_export = "json";
    bool ball_overlay = false;
    auto* sc_ball = app.add_subcommand("ball", "decorated ball of the curve complex");
    sc_ball->add_option("--export", ball_export, "dot|json")->capture_default_str();
    sc_ball->add_flag("--overlay", ball_overlay, "overlay perp/perp0 edges in dot output");

    // chart
    auto* sc_chart = app.add_subcommand("chart", "slope charts");
    std::vector<std::string> chart_seed;
    auto* sc_chart_fit = sc_chart->add_subcommand("fit", "grow a chart from a seed pair");
    sc_chart_fit->add_option("seed", chart_seed, "two top-related curve words")->expected(2);
    std::vector<std::string> chart_seeds2;
    auto* sc_chart_trans =
        sc_chart->add_subcommand("transitions", "transition map between two charts");
    sc_chart_trans->add_option("seeds", chart_seeds2, "four words: two seed pairs")->expected(4);

    // verify
    auto* sc_verify = app.add_subcommand("verify", "exhaustive lemma suites");
    auto* sc_v_pentagon = sc_verify->add_subcommand("pentagon", "pentagon relation suite");
    auto* sc_v_unique = sc_verify->add_subcommand("unique", "unique common neighbour suite");
    auto* sc_v_configs = sc_verify->add_subcommand("configs", "configuration identity suite");
    int farey_bound = 6;
    auto* sc_v_farey = sc_verify->add_subcommand("farey", "slope model cross-validation");
    sc_v_farey->add_option("--bound", farey_bound, "slope box (|p|,|q| <= bound)")
        ->capture_default_str();
    auto* sc_v_charts = sc_verify->add_subcommand("charts", "chart atlas suite");
    auto* sc_v_dims = sc_verify->add_subcommand("dimensions", "maximal simplex dimensions");

    // lift / exceptional
    std::string lift_word;
    auto* sc_lift = app.add_subcommand("lift", "lift a class through the branched double cover");
    sc_lift->add_option("word", lift_word, "curve word on the five-holed sphere")->required();
    auto* sc_exceptional =
        app.add_subcommand("exceptional", "automorphism moving a separating class");

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) merge_config(opt, config_path, app);

        EnumLimits limits;
        limits.candidate_budget = opt.budget;

        if (*sc_surface_info) {
            RibbonSurface s = surface_of(opt);
            if (opt.format == "text") {
                std::string walks;
                for (const auto& w : s.walk_classes) walks += " " + word_to_string(w);
                emit(opt, "surface (" + std::to_string(s.genus) + "," +
                              std::to_string(s.boundary) + ") rank " + std::to_string(s.rank) +
                              " boundary walks:" + walks);
            } else {
                json out = json::parse(surface_to_json(s));
                out["rank"] = s.rank;
                out["boundary_walks"] = json::array();
                for (const auto& w : s.walk_classes) out["boundary_walks"].push_back(word_to_string(w));
                emit(opt, out.dump());
            }
            return kExitOk;
        }
        if (*sc_curves_enum) {
            RibbonSurface s = surface_of(opt);
            auto curves = enumerate_curves(s, opt.max_len, limits);
            if (opt.format == "text") {
                std::string lines;
                for (const auto& c : curves) lines += c.str() + "\n";
                emit(opt, lines.empty() ? "(empty)" : lines.substr(0, lines.size() - 1));
            } else {
                json out = json::array();
                for (const auto& c : curves) out.push_back(c.str());
                emit(opt, out.dump());
            }
            return kExitOk;
        }
        if (*sc_rel) {
            RibbonSurface s = surface_of(opt);
            auto a = canon_curve(s, parse_word(rel_words[0], s.rank));
            auto b = canon_curve(s, parse_word(rel_words[1], s.rank));
            emit(opt, profile_json(intersection_profile(s, a, b)).dump());
            return kExitOk;
        }
        if (*sc_product) {
            RibbonSurface s = surface_of(opt);
            auto a = canon_curve(s, parse_word(prod_words[0], s.rank));
            auto b = canon_curve(s, parse_word(prod_words[1], s.rank));
            CurveClass ab = resolve_curves(s, a, b);
            CurveClass ba = resolve_curves(s, b, a);
            emit(opt, json{{"ab", ab.str()}, {"ba", ba.str()}}.dump());
            return kExitOk;
        }
        if (*sc_reduce || *sc_express) {
            RibbonSurface s = surface_of(opt);
            std::string fn_text = *sc_reduce ? fn_arg : express_fn;
            std::vector<CurveClass> fn_classes;
            size_t start = 0;
            while (start <= fn_text.size()) {
                size_t comma = fn_text.find(',', start);
                std::string tok =
                    fn_text.substr(start, comma == std::string::npos ? comma : comma - start);
                if (!tok.empty()) fn_classes.push_back(canon_curve(s, parse_word(tok, s.rank)));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            FNSystem fn = make_fn_system(s, fn_classes);
            if (*sc_reduce) {
                auto a = canon_curve(s, parse_word(target_word, s.rank));
                auto [b1, b2] = reduce_step(s, fn, a);
                emit(opt, json{{"b1", b1.str()}, {"b2", b2.str()}}.dump());
            } else {
                auto a = canon_curve(s, parse_word(express_word, s.rank));
                GenExpr e = express(s, fn, a);
                emit(opt, genexpr_to_json(e));
            }
            return kExitOk;
        }
        if (*sc_ball) {
            RibbonSurface s = surface_of(opt);
            ComplexBall ball = build_ball(s, opt.max_len, opt.jobs, limits);
            ExportFormat fmt = ball_export == "dot" ? ExportFormat::dot : ExportFormat::json;
            emit(opt, export_ball(ball, fmt, ball_overlay));
            return kExitOk;
        }
        if (*sc_chart_fit) {
            RibbonSurface s = surface_of(opt);
            ComplexBall ball = build_ball(s, opt.max_len, opt.jobs, limits);
            Chart chart = fit_chart(ball, canon_curve(s, parse_word(chart_seed[0], s.rank)),
                                    canon_curve(s, parse_word(chart_seed[1], s.rank)));
            json out;
            out["anchor"] = chart.anchor ? json(chart.anchor->str()) : json(nullptr);
            out["coords"] = json::array();
            for (const auto& [curve, sl] : chart.coord)
                out["coords"].push_back({{"word", curve.str()}, {"slope", to_string(sl)}});
            emit(opt, out.dump());
            return kExitOk;
        }
        if (*sc_chart_trans) {
            RibbonSurface s = surface_of(opt);
            ComplexBall ball = build_ball(s, opt.max_len, opt.jobs, limits);
            Chart c1 = fit_chart(ball, canon_curve(s, parse_word(chart_seeds2[0], s.rank)),
                                 canon_curve(s, parse_word(chart_seeds2[1], s.rank)));
            Chart c2 = fit_chart(ball, canon_curve(s, parse_word(chart_seeds2[2], s.rank)),
                                 canon_curve(s, parse_word(chart_seeds2[3], s.rank)));
            auto m = check_transitions(c1, c2);
            if (!m) {
                emit(opt, json{{"transition", nullptr}}.dump());
                return kExitVerificationFailure;
            }
            emit(opt, json{{"transition", {m->a, m->b, m->c, m->d}},
                           {"det", m->determinant()}}
                          .dump());
            return kExitOk;
        }
        if (*sc_v_pentagon) {
            ComplexBall ball = build_ball(surface_of(opt), opt.max_len, opt.jobs, limits);
            VerificationReport rep = verify_pentagon(ball);
            emit(opt, report_to_json(rep));
            return report_exit(rep);
        }
        if (*sc_v_unique) {
            ComplexBall ball = build_ball(surface_of(opt), opt.max_len, opt.jobs, limits);
            VerificationReport rep = verify_unique_common_neighbor(ball);
            emit(opt, report_to_json(rep));
            return report_exit(rep);
        }
        if (*sc_v_configs) {
            VerificationReport rep = verify_config_identities(surface_of(opt), opt.max_len);
            emit(opt, report_to_json(rep));
            return report_exit(rep);
        }
        if (*sc_v_farey) {
            VerificationReport model = verify_farey_model(farey_bound, opt.jobs);
            VerificationReport res = verify_resolution_characterization(farey_bound);
            json out = json::array();
            out.push_back(json::parse(report_to_json(model)));
            out.push_back(json::parse(report_to_json(res)));
            emit(opt, out.dump());
            return model.ok() && res.ok() ? kExitOk : kExitVerificationFailure;
        }
        if (*sc_v_charts) {
            VerificationReport rep = verify_charts(opt.max_len, opt.max_len, opt.jobs);
            emit(opt, report_to_json(rep));
            return report_exit(rep);
        }
        if (*sc_v_dims) {
            VerificationReport rep = verify_dimensions(opt.jobs);
            emit(opt, report_to_json(rep));
            return report_exit(rep);
        }
        if (*sc_lift) {
            CoverSpec spec = CoverSpec::standard();
            CurveClass base = canon_curve(spec.base, parse_word(lift_word, spec.base.rank));
            CurveClass lifted = lift_double_cover(spec, base);
            emit(opt, json{{"base", base.str()},
                           {"monodromy", monodromy(spec, base.word)},
                           {"lift", lifted.str()},
                           {"lift_type", curve_type_name(classify_curve(spec.cover, lifted))}}
                          .dump());
            return kExitOk;
        }
        if (*sc_exceptional) {
            ExceptionalResult res = exceptional_automorphism(opt.max_len, opt.jobs);
            emit(opt, exceptional_to_json(res));
            return res.report.ok() && res.phi.preserves_disjointness &&
                           !res.phi.preserves_separating
                       ? kExitOk
                       : kExitVerificationFailure;
        }
        std::cerr << app.help() << "\n";
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == Err::BudgetExceeded || e.code() == Err::SearchExhausted)
            return kExitBudget;
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
