/*
 * ncplush command line front end.
 *
 * Exit codes: 0 success, 1 domain failure (not integrable, not plush,
 * negative witness found, ...), 2 usage or parse errors. --json switches
 * every subcommand to a machine-readable document; polynomials inside JSON
 * use the same grammar the parser accepts.
 */
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ncplush/freealg.hpp"
#include "ncplush/gram.hpp"
#include "ncplush/mateval.hpp"
#include "ncplush/nccalc.hpp"
#include "ncplush/ncint.hpp"
#include "ncplush/ncparse.hpp"
#include "ncplush/plush.hpp"

using nlohmann::ordered_json;
using namespace ncplush;

namespace {

struct Outcome {
    int status = 0;
    ordered_json result;               // "result" field of the JSON document
    std::optional<ordered_json> witness;
    std::string text;                  // human-readable form
};

struct Options {
    bool json = false;
    int g = 0;  // 0 = infer from the expression
    std::string corpus;
};

Polynomial parse_expr(const std::string& text, int g) {
    return g > 0 ? parse(text, g) : parse(text);
}

ordered_json rational_json(const Rational& r) { return r.get_str(); }

ordered_json matrix_json(const RationalMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : m) {
        ordered_json r = ordered_json::array();
        for (const auto& v : row) r.push_back(rational_json(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

ordered_json eigen_json(const Eigen::MatrixXd& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered_json r = ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
        rows.push_back(std::move(r));
    }
    return rows;
}

ordered_json decomposition_json(const PlushDecomposition& d) {
    ordered_json squares = ordered_json::array();
    for (const auto& s : d.hereditary_squares)
        squares.push_back({{"weight", rational_json(s.weight)}, {"factor", print(s.factor)}});
    ordered_json anti = ordered_json::array();
    for (const auto& s : d.antihereditary_squares)
        anti.push_back({{"weight", rational_json(s.weight)}, {"factor", print(s.factor)}});
    return ordered_json{{"n_min", d.n_min},
                        {"m_min", d.m_min},
                        {"hereditary_squares", std::move(squares)},
                        {"antihereditary_squares", std::move(anti)},
                        {"analytic_part", print(d.analytic_part)}};
}

PlushDecomposition decomposition_from_json(const ordered_json& j, int g) {
    PlushDecomposition d{{}, {}, Polynomial::zero(g), 0, 0};
    auto read_side = [&](const char* key, std::vector<WeightedSquare>& out) {
        if (!j.contains(key)) return;
        for (const auto& item : j.at(key)) {
            Rational w{mpq_class(item.at("weight").get<std::string>())};
            w.canonicalize();
            out.push_back(WeightedSquare{w, parse(item.at("factor").get<std::string>(), g)});
        }
    };
    read_side("hereditary_squares", d.hereditary_squares);
    read_side("antihereditary_squares", d.antihereditary_squares);
    if (j.contains("analytic_part"))
        d.analytic_part = parse(j.at("analytic_part").get<std::string>(), g);
    d.n_min = static_cast<int>(d.hereditary_squares.size());
    d.m_min = static_cast<int>(d.antihereditary_squares.size());
    return d;
}

std::string describe_integrability(const IntegrabilityCheck& chk) {
    switch (chk.failure) {
        case IntegrabilityCheck::Failure::BadDirectionDegree:
            return "monomial " + chk.witness->str() + " does not carry exactly one direction letter";
        case IntegrabilityCheck::Failure::MissingMate:
            return "monomial " + chk.witness->str() + " is missing wed mate " + chk.missing->str();
        case IntegrabilityCheck::Failure::CoefficientMismatch:
            return "wed mates " + chk.witness->str() + " and " + chk.missing->str() +
                   " have different coefficients";
        default:
            return "";
    }
}

ordered_json integrability_witness(const IntegrabilityCheck& chk) {
    ordered_json w{{"witness", chk.witness->str()}};
    if (chk.missing) w["missing"] = chk.missing->str();
    const char* reason = chk.failure == IntegrabilityCheck::Failure::BadDirectionDegree
                             ? "bad_direction_degree"
                             : (chk.failure == IntegrabilityCheck::Failure::MissingMate
                                    ? "missing_mate"
                                    : "coefficient_mismatch");
    w["reason"] = reason;
    return w;
}

// ---- subcommand handlers ------------------------------------------------

Outcome run_polynomial_map(const std::string& expr, const Options& opt,
                           const std::function<Polynomial(const Polynomial&)>& fn) {
    Polynomial p = parse_expr(expr, opt.g);
    Polynomial out = fn(p);
    Outcome o;
    o.result = ordered_json{{"polynomial", print(out)}};
    o.text = print(out);
    return o;
}

Outcome run_integrate(const std::string& expr, const Options& opt, std::optional<int> j) {
    Polynomial p = parse_expr(expr, opt.g);
    Outcome o;
    try {
        Polynomial f = j ? integrate_in(p, *j) : integrate(p);
        o.result = ordered_json{{"polynomial", print(f)}};
        o.text = print(f);
    } catch (const NotIntegrableError& e) {
        o.status = 1;
        o.result = ordered_json{{"integrable", false}};
        ordered_json w;
        if (e.witness) w["witness"] = e.witness->str();
        if (e.missing) w["missing"] = e.missing->str();
        o.witness = w;
        o.text = std::string("not integrable: ") + e.what();
    }
    return o;
}

Outcome run_check_integrable(const std::string& expr, const Options& opt, std::optional<int> j) {
    Polynomial p = parse_expr(expr, opt.g);
    IntegrabilityCheck chk = j ? is_integrable_in(p, *j) : is_integrable(p);
    Outcome o;
    if (chk.integrable) {
        ordered_json classes = ordered_json::array();
        for (const auto& cls : chk.classes) {
            ordered_json members = ordered_json::array();
            for (const auto& m : cls.members) members.push_back(m.str());
            classes.push_back({{"representative", cls.representative.str()},
                               {"coefficient", rational_json(cls.coefficient)},
                               {"members", std::move(members)}});
        }
        o.result = ordered_json{{"integrable", true}, {"classes", std::move(classes)}};
        o.text = "integrable: yes (" + std::to_string(chk.classes.size()) + " classes)";
    } else {
        o.status = 1;
        o.result = ordered_json{{"integrable", false}};
        o.witness = integrability_witness(chk);
        o.text = "integrable: no; " + describe_integrability(chk);
    }
    return o;
}

Outcome run_frobenius(const std::vector<std::string>& exprs, const Options& opt) {
    const int g = opt.g > 0 ? opt.g : static_cast<int>(exprs.size());
    if (g != static_cast<int>(exprs.size()))
        throw CLI::ValidationError("frobenius",
                                   "the number of components must equal the variable count");
    FrobeniusSystem sys;
    for (const auto& e : exprs) sys.components.push_back(parse(e, g));
    FrobeniusResult res = frobenius_check(sys);
    Outcome o;
    if (res) {
        o.result = ordered_json{{"integrable", true}, {"potential", print(*res.potential)}};
        o.text = "integrable: potential " + print(*res.potential);
    } else if (res.status == FrobeniusResult::Status::ComponentNotIntegrable) {
        o.status = 1;
        o.result = ordered_json{{"integrable", false},
                                {"kind", "component_not_integrable"},
                                {"i", res.i}};
        o.text = "not integrable: component f" + std::to_string(res.i) +
                 " is not integrable in x" + std::to_string(res.i);
    } else {
        o.status = 1;
        o.result = ordered_json{{"integrable", false},
                                {"kind", "cross_partial_mismatch"},
                                {"i", res.i},
                                {"j", res.j}};
        o.text = "not integrable: cross partials of f" + std::to_string(res.i) + " and f" +
                 std::to_string(res.j) + " disagree";
    }
    return o;
}

Outcome run_check_hessian(const std::string& expr, const Options& opt) {
    Polynomial q = parse_expr(expr, opt.g);
    HessianCheck chk = is_complex_hessian(q);
    Outcome o;
    if (chk) {
        o.result =
            ordered_json{{"is_hessian", true}, {"antiderivative", print(*chk.antiderivative)}};
        o.text = "complex hessian: yes, antiderivative " + print(*chk.antiderivative);
    } else {
        o.status = 1;
        const bool p1 = chk.status == HessianCheck::Status::P1Violation;
        o.result = ordered_json{{"is_hessian", false}, {"violation", p1 ? "P1" : "P2"}};
        ordered_json w{{"word", chk.violation->str()}};
        if (chk.missing) w["missing"] = chk.missing->str();
        o.witness = w;
        o.text = std::string("not a complex hessian: ") + (p1 ? "P1" : "P2") +
                 " violation at " + chk.violation->str() +
                 (chk.missing ? " (mate " + chk.missing->str() + ")" : "");
    }
    return o;
}

Outcome run_plush(const std::string& expr, const Options& opt) {
    Polynomial p = parse_expr(expr, opt.g);
    PlushResult res = classify_plush(p);
    Outcome o;
    if (res) {
        const auto& d = *res.decomposition;
        o.result = ordered_json{{"plush", true}, {"decomposition", decomposition_json(d)}};
        std::ostringstream t;
        t << "plush: yes\n";
        t << "hereditary squares (N_min = " << d.n_min << "):";
        if (d.hereditary_squares.empty()) t << " none";
        t << "\n";
        for (std::size_t i = 0; i < d.hereditary_squares.size(); ++i)
            t << "  d" << i + 1 << " = " << d.hereditary_squares[i].weight.get_str() << ", f"
              << i + 1 << " = " << print(d.hereditary_squares[i].factor) << "\n";
        t << "antihereditary squares (M_min = " << d.m_min << "):";
        if (d.antihereditary_squares.empty()) t << " none";
        t << "\n";
        for (std::size_t i = 0; i < d.antihereditary_squares.size(); ++i)
            t << "  e" << i + 1 << " = " << d.antihereditary_squares[i].weight.get_str() << ", k"
              << i + 1 << " = " << print(d.antihereditary_squares[i].factor) << "\n";
        t << "analytic part F = " << print(d.analytic_part);
        o.text = t.str();
    } else {
        o.status = 1;
        const FailureWitness& w = *res.witness;
        const char* stage = nullptr;
        switch (w.stage) {
            case FailureWitness::Stage::NotSymmetric: stage = "not_symmetric"; break;
            case FailureWitness::Stage::HessianNotSplitForm: stage = "hessian_not_split_form"; break;
            case FailureWitness::Stage::GramNotPsd: stage = "gram_not_psd"; break;
            case FailureWitness::Stage::ResidualMixed: stage = "residual_mixed"; break;
        }
        o.result = ordered_json{{"plush", false}, {"stage", stage}};
        ordered_json detail;
        if (w.word) detail["word"] = w.word->str();
        if (w.side)
            detail["side"] =
                (*w.side == GramSide::Hereditary) ? "hereditary" : "antihereditary";
        if (!w.certificate.empty()) {
            ordered_json cert = ordered_json::array();
            for (const auto& v : w.certificate) cert.push_back(rational_json(v));
            detail["certificate"] = std::move(cert);
        }
        o.witness = detail;
        o.text = "plush: no; " + w.describe();
    }
    return o;
}

MatrixTuple tuple_from_json(const ordered_json& arr) {
    MatrixTuple t;
    for (const auto& m : arr) {
        const auto rows = m.size();
        Eigen::MatrixXd mat(rows, rows == 0 ? 0 : m.at(0).size());
        for (std::size_t i = 0; i < rows; ++i) {
            const auto& row = m.at(i);
            if (row.size() != static_cast<std::size_t>(mat.cols()))
                throw std::invalid_argument("ncplush: matrices must be rectangular");
            for (std::size_t j = 0; j < row.size(); ++j)
                mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    row.at(j).get<double>();
        }
        if (mat.rows() != mat.cols())
            throw std::invalid_argument("ncplush: matrices must be square");
        t.entries.push_back(std::move(mat));
    }
    t.n = t.entries.empty() ? 0 : static_cast<int>(t.entries[0].rows());
    return t;
}

Outcome run_eval(const std::string& expr, const Options& opt, const std::string& file) {
    Polynomial p = parse_expr(expr, opt.g);
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("eval", "cannot open matrix file " + file);
    ordered_json doc = ordered_json::parse(in);
    MatrixTuple X = tuple_from_json(doc.at("X"));
    std::optional<MatrixTuple> H;
    if (doc.contains("H")) H = tuple_from_json(doc.at("H"));
    if (X.entries.empty() && doc.contains("n")) X.n = doc.at("n").get<int>();
    Eigen::MatrixXd m = eval(p, X, H);
    Outcome o;
    o.result = ordered_json{{"matrix", eigen_json(m)}};
    std::ostringstream t;
    t << m;
    o.text = t.str();
    return o;
}

Outcome run_sample(const std::string& expr, const Options& opt, const SampleOptions& sopts) {
    Polynomial q = parse_expr(expr, opt.g);
    PositivityReport rep = sample_positivity(q, sopts);
    Outcome o;
    ordered_json result{{"samples", rep.samples},
                        {"min_eigenvalue", rep.min_eigenvalue},
                        {"seed", rep.seed}};
    std::ostringstream t;
    t << "samples=" << rep.samples << " seed=" << rep.seed
      << " min_eigenvalue=" << rep.min_eigenvalue;
    if (rep.witness) {
        o.status = 1;
        ordered_json w{{"trial", rep.witness->trial},
                       {"size", rep.witness->size},
                       {"eigenvalue", rep.witness->eigenvalue}};
        ordered_json xs = ordered_json::array(), hs = ordered_json::array();
        for (const auto& m : rep.witness->X.entries) xs.push_back(eigen_json(m));
        for (const auto& m : rep.witness->H.entries) hs.push_back(eigen_json(m));
        w["X"] = std::move(xs);
        w["H"] = std::move(hs);
        o.witness = std::move(w);
        t << "\nwitness: trial " << rep.witness->trial << " at size " << rep.witness->size
          << ", eigenvalue " << rep.witness->eigenvalue;
    }
    o.result = std::move(result);
    o.text = t.str();
    return o;
}

ordered_json isometry_json(const IsometryRelation& rel) {
    ordered_json j{{"matrix", matrix_json(rel.matrix)}};
    ordered_json cs = ordered_json::array(), wf = ordered_json::array(),
                 wt = ordered_json::array();
    for (const auto& c : rel.constants) cs.push_back(rational_json(c));
    for (const auto& w : rel.weights_from) wf.push_back(rational_json(w));
    for (const auto& w : rel.weights_to) wt.push_back(rational_json(w));
    j["constants"] = std::move(cs);
    j["weights_from"] = std::move(wf);
    j["weights_to"] = std::move(wt);
    j["unweighted_rational"] = rel.unweighted.has_value();
    if (rel.unweighted) j["unweighted"] = matrix_json(*rel.unweighted);
    return j;
}

Outcome run_relate(const std::string& expr, const Options& opt, const std::string& file) {
    Polynomial p = parse_expr(expr, opt.g);
    PlushResult res = classify_plush(p);
    Outcome o;
    if (!res) {
        o.status = 1;
        o.result = ordered_json{{"related", false}};
        o.text = "not plush: " + res.witness->describe();
        return o;
    }
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("relate", "cannot open decomposition file " + file);
    ordered_json doc = ordered_json::parse(in);
    PlushDecomposition other = decomposition_from_json(doc, p.context());
    RelateResult rel = relate_representations(*res.decomposition, other);
    if (!rel.related) {
        o.status = 1;
        o.result = ordered_json{{"related", false}, {"reason", rel.reason}};
        o.text = "unrelated: " + rel.reason;
        return o;
    }
    o.result = ordered_json{{"related", true},
                            {"hereditary", isometry_json(*rel.hereditary)},
                            {"antihereditary", isometry_json(*rel.antihereditary)}};
    o.text = "related: yes (hereditary " + std::to_string(rel.hereditary->matrix.size()) + "x" +
             std::to_string(res.decomposition->hereditary_squares.size()) + ", antihereditary " +
             std::to_string(rel.antihereditary->matrix.size()) + "x" +
             std::to_string(res.decomposition->antihereditary_squares.size()) + ")";
    return o;
}

// ---- driver ---------------------------------------------------------------

int emit(const std::string& command, const std::string& input, const Options& opt,
         const std::function<Outcome(const std::string&)>& handler) {
    auto run_one = [&](const std::string& text) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o = handler(text);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        ordered_json doc{{"command", command}, {"input", text}, {"result", o.result}};
        if (o.witness) doc["witness"] = *o.witness;
        doc["timing_ms"] = ms;
        return std::pair<int, ordered_json>(o.status, std::move(doc));
    };

    if (opt.corpus.empty()) {
        auto [status, doc] = run_one(input);
        if (opt.json) {
            std::cout << doc.dump(2) << "\n";
        } else {
            Outcome o = handler(input);  // handlers are pure; rerun is cheap
            std::cout << o.text << "\n";
        }
        return status;
    }

    std::ifstream in(opt.corpus);
    if (!in) {
        std::cerr << "ncplush: cannot open corpus file " << opt.corpus << "\n";
        return 2;
    }
    int worst = 0;
    ordered_json all = ordered_json::array();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line.substr(0, line.find('#'));
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        if (!trimmed.empty()) trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
        if (trimmed.empty()) continue;
        auto [status, doc] = run_one(trimmed);
        worst = std::max(worst, status);
        if (opt.json) {
            doc["line"] = lineno;
            all.push_back(std::move(doc));
        } else {
            Outcome o = handler(trimmed);
            std::cout << lineno << ": " << o.text << "\n";
        }
    }
    if (opt.json) std::cout << all.dump(2) << "\n";
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus and plurisubharmonicity certificates for nc polynomials"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after a subcommand too

    Options opt;
    app.add_flag("--json", opt.json, "emit a JSON document instead of text");
    app.add_option("-g", opt.g, "variable count (default: inferred from the expression)");

    std::string expr;
    std::vector<std::string> components;
    int order = 1, partial_index = 1;
    bool wrt_transpose = false;
    std::optional<int> integrate_index;
    std::string matrix_file, other_file, sizes_csv = "1,2,3";
    SampleOptions sopts;

    auto add_expr = [&](CLI::App* sub, bool allow_corpus = true) {
        sub->add_option("expr", expr, "polynomial expression");
        if (allow_corpus)
            sub->add_option("--corpus", opt.corpus,
                            "run on every line of a corpus file (# comments)");
    };

    CLI::App* c_derive = app.add_subcommand("derive", "full directional derivative");
    add_expr(c_derive);
    c_derive->add_option("-l,--order", order, "derivative order (default 1)");

    CLI::App* c_partial = app.add_subcommand("partial", "directional partial derivative");
    add_expr(c_partial);
    c_partial->add_option("-j", partial_index, "variable index")->required();
    c_partial->add_flag("-T,--transpose", wrt_transpose, "differentiate with respect to x_j'");

    CLI::App* c_hessian = app.add_subcommand("hessian", "full second derivative");
    add_expr(c_hessian);

    CLI::App* c_chessian = app.add_subcommand("complex-hessian", "nc complex hessian");
    add_expr(c_chessian);

    CLI::App* c_integrate = app.add_subcommand("integrate", "antiderivative with zero constant");
    add_expr(c_integrate);
    int jint = 0;
    c_integrate->add_option("-j", jint, "integrate in x_j only");

    CLI::App* c_check = app.add_subcommand("check-integrable", "integrability test with witnesses");
    add_expr(c_check);
    int jchk = 0;
    c_check->add_option("-j", jchk, "test integrability in x_j only");

    CLI::App* c_frob = app.add_subcommand("frobenius", "simultaneous integrability of components");
    c_frob->add_option("components", components, "component polynomials f_1 ... f_g")
        ->required()
        ->expected(-1);

    CLI::App* c_checkh = app.add_subcommand("check-hessian", "complex hessian recognition");
    add_expr(c_checkh);

    CLI::App* c_plush = app.add_subcommand("plush", "plurisubharmonicity classification");
    add_expr(c_plush);

    CLI::App* c_eval = app.add_subcommand("eval", "evaluate on a matrix tuple");
    add_expr(c_eval, /*allow_corpus=*/false);
    c_eval->add_option("--matrices", matrix_file, "JSON file with X (and optionally H) tuples")
        ->required();

    CLI::App* c_sample = app.add_subcommand("sample", "randomized positivity sampling");
    add_expr(c_sample);
    c_sample->add_option("--sizes", sizes_csv, "comma-separated matrix sizes (default 1,2,3)");
    c_sample->add_option("--trials", sopts.trials, "number of trials (default 200)");
    c_sample->add_option("--seed", sopts.seed, "random seed (default 42)");
    c_sample->add_option("--tol", sopts.tolerance, "witness tolerance (default 1e-9)");

    CLI::App* c_relate = app.add_subcommand("relate", "isometry between two decompositions");
    add_expr(c_relate, /*allow_corpus=*/false);
    c_relate->add_option("--other", other_file, "JSON decomposition to relate against")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name != "frobenius" && opt.corpus.empty() && expr.empty()) {
            std::cerr << "ncplush: missing polynomial expression\n";
            return 2;
        }

        if (name == "derive")
            return emit(name, expr, opt, [&](const std::string& e) {
                return run_polynomial_map(e, opt, [&](const Polynomial& p) {
                    return order == 1 ? derivative(p) : lth_derivative(p, order);
                });
            });
        if (name == "partial")
            return emit(name, expr, opt, [&](const std::string& e) {
                return run_polynomial_map(e, opt, [&](const Polynomial& p) {
                    return wrt_transpose ? partial_xt(p, partial_index)
                                         : partial_x(p, partial_index);
                });
            });
        if (name == "hessian")
            return emit(name, expr, opt, [&](const std::string& e) {
                return run_polynomial_map(e, opt, full_hessian);
            });
        if (name == "complex-hessian")
            return emit(name, expr, opt, [&](const std::string& e) {
                return run_polynomial_map(e, opt, complex_hessian);
            });
        if (name == "integrate")
            return emit(name, expr, opt, [&](const std::string& e) {
                return run_integrate(e, opt,
                                     jint > 0 ? std::optional<int>(jint) : std::nullopt);
            });
        if (name == "check-integrable")
            return emit(name, expr, opt, [&](const std::string& e) {
                return run_check_integrable(e, opt,
                                            jchk > 0 ? std::optional<int>(jchk) : std::nullopt);
            });
        if (name == "frobenius") {
            std::string joined;
            for (const auto& e : components) joined += (joined.empty() ? "" : "; ") + e;
            return emit(name, joined, opt, [&](const std::string&) {
                return run_frobenius(components, opt);
            });
        }
        if (name == "check-hessian")
            return emit(name, expr, opt,
                        [&](const std::string& e) { return run_check_hessian(e, opt); });
        if (name == "plush")
            return emit(name, expr, opt,
                        [&](const std::string& e) { return run_plush(e, opt); });
        if (name == "eval")
            return emit(name, expr, opt,
                        [&](const std::string& e) { return run_eval(e, opt, matrix_file); });
        if (name == "sample") {
            sopts.sizes.clear();
            std::stringstream ss(sizes_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) sopts.sizes.push_back(std::stoi(tok));
            return emit(name, expr, opt,
                        [&](const std::string& e) { return run_sample(e, opt, sopts); });
        }
        if (name == "relate")
            return emit(name, expr, opt,
                        [&](const std::string& e) { return run_relate(e, opt, other_file); });
        std::cerr << "ncplush: unknown subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "ncplush: parse error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "ncplush: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ncplush: " << e.what() << "\n";
        return 2;
    }
}
