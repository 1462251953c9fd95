#include "stabenv/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "stabenv/acceptance.hpp"
#include "stabenv/envelope.hpp"
#include "stabenv/errors.hpp"
#include "stabenv/json_io.hpp"
#include "stabenv/rmatrix.hpp"
#include "stabenv/weight_function.hpp"

namespace stabenv {

namespace {

struct CommonParams {
    std::string r = "00";
    int n = 2;
    std::string sigma = "";
    std::string subset = "none";
    std::string format = "text";
};

Permutation parse_sigma(const std::string& text, int n) {
    if (text.empty() || text == "id") return Permutation::identity(n);
    Permutation p = Permutation::parse(text);
    if (p.n() != n) throw GuardViolation("--sigma must be a permutation of n elements");
    return p;
}

std::string weight_text(const SymmetrizedRF& W) {
    std::ostringstream os;
    bool first = true;
    for (const auto& term : W.terms) {
        std::string s = term.str();
        if (first) {
            os << s;
        } else if (!s.empty() && s[0] == '-') {
            os << " - " << s.substr(1);
        } else {
            os << " + " << s;
        }
        first = false;
    }
    return os.str();
}

void emit_weight(const SymmetrizedRF& W, const std::string& format, bool expand,
                 std::ostream& out) {
    if (format == "json") {
        if (expand)
            out << to_json(expand_rf(W)).dump(2) << "\n";
        else
            out << to_json(W).dump(2) << "\n";
    } else if (format == "latex") {
        out << to_latex(expand_rf(W)) << "\n";
    } else {
        if (expand)
            out << expand_rf(W).str() << "\n";
        else
            out << weight_text(W) << "\n";
    }
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact super weight functions, stable envelopes and R-matrices "
                 "over Grassmannian bundle spaces"};
    app.require_subcommand(1);

    CommonParams P;
    int a_index = 1;
    int degree_bound = -1;
    int max_n = 4;
    std::uint64_t seed = 20250809;
    bool expand = false;
    std::string input_path;
    std::string kind = "closed";
    std::string family = "both";

    auto add_common = [&](CLI::App* cmd, bool with_subset = true) {
        cmd->add_option("--r", P.r, "version tag: 00, 10, 01 or 11");
        cmd->add_option("--n", P.n, "number of equivariant variables");
        cmd->add_option("--sigma", P.sigma, "permutation in one-line notation, e.g. 2,3,1 (default id)");
        if (with_subset) cmd->add_option("--subset", P.subset, "comma list, 'none' for the empty set");
        cmd->add_option("--format", P.format, "text | json | latex")
            ->check(CLI::IsMember({"text", "json", "latex"}));
    };

    auto* weight = app.add_subcommand("weight", "emit a super weight function");
    add_common(weight);
    weight->add_flag("--expand", expand, "emit the expanded rational function");

    auto* restrict_cmd = app.add_subcommand("restrict", "emit the tuple of t=z_J restrictions");
    add_common(restrict_cmd);

    auto* axioms = app.add_subcommand("axioms", "verify the envelope axioms A0-A3");
    add_common(axioms);

    auto* gkm = app.add_subcommand("gkm", "check a user-supplied restriction tuple");
    gkm->add_option("--n", P.n, "ambient size")->required();
    gkm->add_option("--input", input_path, "JSON file { \"subset\": polynomial, ... } (default stdin)");
    gkm->add_option("--format", P.format, "text | json")->check(CLI::IsMember({"text", "json"}));

    auto* rmat = app.add_subcommand("rmatrix", "emit closed-form, Yangian or geometric R-matrices");
    add_common(rmat);
    rmat->add_option("--kind", kind, "closed | check | yangian | yangian-check | geometric")
        ->check(CLI::IsMember({"closed", "check", "yangian", "yangian-check", "geometric"}));
    rmat->add_option("--a", a_index, "adjacent transposition index for --kind geometric");

    auto* yb = app.add_subcommand("yangbaxter", "verify the Yang-Baxter equation");
    yb->add_option("--r", P.r, "version tag");
    yb->add_option("--family", family, "geometric | yangian | both")
        ->check(CLI::IsMember({"geometric", "yangian", "both"}));

    auto* ycmp = app.add_subcommand("yangian-compare",
                                    "match normalized Yangian check-matrices with the geometric ones");
    ycmp->add_option("--r", P.r, "version tag");

    auto* rep = app.add_subcommand("representative", "solve for a polynomial representative");
    add_common(rep);
    rep->add_option("--degree-bound", degree_bound, "homogeneous degree of the ansatz")->required();
    rep->add_option("--input", input_path, "optional GKM-tuple JSON instead of (r, sigma, subset)");

    auto* suite = app.add_subcommand("suite", "run the verification suite");
    suite->add_option("--max-n", max_n, "sweep bound: 2 fast, 4 full, 5 extended");
    suite->add_option("--seed", seed, "seed for the random-point pre-checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help() << "\n";
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const VersionTag r = parse_version(P.r);

    if (weight->parsed()) {
        const Subset I = Subset::parse(P.n, P.subset);
        const SymmetrizedRF W = weight_function(r, P.n, parse_sigma(P.sigma, P.n), I);
        emit_weight(W, P.format, expand, out);
        return 0;
    }

    if (restrict_cmd->parsed()) {
        const Subset I = Subset::parse(P.n, P.subset);
        const StabClass st = stab(r, P.n, I.k(), parse_sigma(P.sigma, P.n), I);
        if (P.format == "json") {
            out << gkm_to_json(st.gkm).dump(2) << "\n";
        } else if (P.format == "latex") {
            std::ostringstream os;
            os << "\\left(";
            bool first = true;
            for (const auto& [J, p] : st.gkm.components) {
                os << (first ? "" : ",\\ ") << to_latex(p);
                first = false;
            }
            os << "\\right)";
            out << os.str() << "\n";
        } else {
            for (const auto& [J, p] : st.gkm.components)
                out << J.str() << ": " << p.str() << "\n";
        }
        return 0;
    }

    if (axioms->parsed()) {
        const Subset I = Subset::parse(P.n, P.subset);
        const StabClass st = stab(r, P.n, I.k(), parse_sigma(P.sigma, P.n), I);
        const AxiomReport report = verify_axioms(st);
        if (P.format == "json") {
            out << to_json(report).dump(2) << "\n";
        } else {
            auto line = [&](const char* name, const AxiomResult& res) {
                out << name << ": " << (res.pass ? "pass" : "FAIL") << " (" << res.witness << ")\n";
            };
            line("A0", report.A0);
            line("A1", report.A1);
            line("A2", report.A2);
            line("A3", report.A3);
        }
        return report.all_pass() ? 0 : 1;
    }

    if (gkm->parsed()) {
        Json j;
        if (input_path.empty()) {
            j = Json::parse(std::cin);
        } else {
            std::ifstream in(input_path);
            if (!in) {
                err << "error: cannot open " << input_path << "\n";
                return 2;
            }
            j = Json::parse(in);
        }
        const GKMClass c = gkm_from_json(j, P.n);
        const GKMCheckResult chk = gkm_check(c);
        if (P.format == "json") {
            Json violations = Json::array();
            for (const auto& v : chk.violations)
                violations.push_back(Json{{"I", v.I.flag_str()},
                                          {"J", v.J.flag_str()},
                                          {"i", v.i},
                                          {"j", v.j}});
            out << Json{{"ok", chk.ok}, {"violations", violations}}.dump(2) << "\n";
        } else if (chk.ok) {
            out << "ok: tuple lies in the localization image\n";
        } else {
            for (const auto& v : chk.violations)
                out << "violation: z" << v.i << " - z" << v.j << " does not divide the "
                    << v.I.str() << "/" << v.J.str() << " difference\n";
        }
        return chk.ok ? 0 : 1;
    }

    if (rmat->parsed()) {
        auto emit4 = [&](const RMatrix& m) {
            if (P.format == "json") {
                out << to_json(m).dump(2) << "\n";
            } else if (P.format == "latex") {
                out << to_latex(m) << "\n";
            } else {
                for (int i = 0; i < 4; ++i) {
                    for (int j = 0; j < 4; ++j) out << (j ? " | " : "") << m.at(i, j).str();
                    out << "\n";
                }
            }
        };
        if (kind == "closed") {
            emit4(closed_form_R(r));
        } else if (kind == "check") {
            emit4(check_matrix(closed_form_R(r)));
        } else if (kind == "yangian") {
            emit4(yangian_R(r).first);
        } else if (kind == "yangian-check") {
            emit4(yangian_R(r).second);
        } else {
            const BigOperator op = geometric_R(r, P.n, parse_sigma(P.sigma, P.n), a_index);
            if (P.format == "json") {
                out << to_json(op).dump(2) << "\n";
            } else if (P.format == "latex") {
                out << to_latex(op.mat) << "\n";
            } else {
                for (int i = 0; i < op.mat.rows(); ++i) {
                    for (int j = 0; j < op.mat.cols(); ++j)
                        out << (j ? " | " : "") << op.mat.at(i, j).str();
                    out << "\n";
                }
            }
        }
        return 0;
    }

    if (yb->parsed()) {
        bool ok = true;
        if (family == "geometric" || family == "both") {
            const bool g = yang_baxter_check(closed_form_R(r));
            out << "geometric R(" << to_string(r) << "): " << (g ? "holds" : "FAILS") << "\n";
            ok = ok && g;
        }
        if (family == "yangian" || family == "both") {
            const bool y = yang_baxter_check(yangian_R(r).first);
            out << "yangian R(" << to_string(r) << "): " << (y ? "holds" : "FAILS") << "\n";
            ok = ok && y;
        }
        return ok ? 0 : 1;
    }

    if (ycmp->parsed()) {
        const YangianIdentification y = yangian_identification(r);
        out << "r=" << to_string(r) << ": "
            << (y.matches ? (y.sign_twist ? "matches after the middle-sign gauge"
                                          : "matches directly")
                          : "DOES NOT MATCH")
            << "\n";
        return y.matches ? 0 : 1;
    }

    if (rep->parsed()) {
        GKMClass c;
        if (!input_path.empty()) {
            std::ifstream in(input_path);
            if (!in) {
                err << "error: cannot open " << input_path << "\n";
                return 2;
            }
            c = gkm_from_json(Json::parse(in), P.n);
        } else {
            const Subset I = Subset::parse(P.n, P.subset);
            c = stab(r, P.n, I.k(), parse_sigma(P.sigma, P.n), I).gkm;
        }
        const auto rp = find_representative(c, degree_bound);
        if (!rp) {
            out << "no solution at degree " << degree_bound << "\n";
            return 1;
        }
        if (P.format == "json")
            out << to_json(*rp).dump(2) << "\n";
        else if (P.format == "latex")
            out << to_latex(*rp) << "\n";
        else
            out << rp->str() << "\n";
        return 0;
    }

    if (suite->parsed()) {
        SuiteOptions opt;
        opt.max_n = max_n;
        opt.seed = seed;
        const auto results = run_acceptance(opt, out);
        return all_passed(results) ? 0 : 1;
    }

    err << "error: no subcommand\n";
    return 2;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const GuardViolation& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace stabenv
