/*
 * Python bindings for the ncplush core: polynomials over the grammar,
 * differentiation, integration, hessian recognition, the plush
 * classification pipeline, and numerical evaluation/sampling.
 */
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncplush/freealg.hpp"
#include "ncplush/gram.hpp"
#include "ncplush/mateval.hpp"
#include "ncplush/nccalc.hpp"
#include "ncplush/ncint.hpp"
#include "ncplush/ncparse.hpp"
#include "ncplush/plush.hpp"

namespace py = pybind11;
using namespace ncplush;

namespace {

Rational rational_from(const py::object& obj) {
    if (py::isinstance<py::int_>(obj)) return rat(obj.cast<long>());
    Rational r{mpq_class(py::str(obj).cast<std::string>())};
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

Word word_from(const std::string& text) {
    Polynomial p = parse(text);
    if (p.term_count() != 1 || p.terms().begin()->second != 1)
        throw std::invalid_argument("ncplush: expected a single monomial with coefficient 1");
    return p.terms().begin()->first;
}

MatrixTuple tuple_from(const std::vector<Eigen::MatrixXd>& mats, int n_hint) {
    MatrixTuple t;
    t.entries = mats;
    t.n = mats.empty() ? n_hint : static_cast<int>(mats[0].rows());
    return t;
}

std::vector<Eigen::MatrixXd> tuple_to(const MatrixTuple& t) { return t.entries; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact calculus and plurisubharmonicity certificates for nc polynomials";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NotIntegrableError>(m, "NotIntegrableError", PyExc_ValueError);

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](const std::string& text, std::optional<int> g) {
                 return g ? parse(text, *g) : parse(text);
             }),
             py::arg("text"), py::arg("g") = std::nullopt,
             "Parse a polynomial; the variable count is inferred when g is omitted.")
        .def_property_readonly("context", &Polynomial::context)
        .def_property_readonly("degree", &Polynomial::degree)
        .def_property_readonly("h_degree", &Polynomial::h_degree)
        .def("is_zero", &Polynomial::is_zero)
        .def("transpose", &Polynomial::transpose)
        .def_property_readonly("T", &Polynomial::transpose)
        .def("constant_term", [](const Polynomial& p) { return rational_str(p.constant_term()); })
        .def("scaled", [](const Polynomial& p, const py::object& c) {
                 return p.scaled(rational_from(c));
             },
             py::arg("c"), "Multiply by an exact rational (int, str or Fraction).")
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__str__", [](const Polynomial& p) { return print(p); })
        .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + print(p) + "')"; });

    m.def("parse", [](const std::string& t, std::optional<int> g) {
              return g ? parse(t, *g) : parse(t);
          },
          py::arg("text"), py::arg("g") = std::nullopt);
    m.def("print_poly", &print, py::arg("p"));

    py::class_<Classification>(m, "Classification")
        .def_readonly("symmetric", &Classification::symmetric)
        .def_readonly("analytic", &Classification::analytic)
        .def_readonly("antianalytic", &Classification::antianalytic)
        .def_readonly("degree", &Classification::degree)
        .def_readonly("h_degree", &Classification::h_degree)
        .def("__repr__", [](const Classification& c) {
            return "Classification(symmetric=" + std::to_string(c.symmetric) +
                   ", analytic=" + std::to_string(c.analytic) +
                   ", antianalytic=" + std::to_string(c.antianalytic) +
                   ", degree=" + std::to_string(c.degree) +
                   ", h_degree=" + std::to_string(c.h_degree) + ")";
        });
    m.def("classify", &classify, py::arg("p"));

    m.def("partial_x", &partial_x, py::arg("p"), py::arg("j"));
    m.def("partial_xt", &partial_xt, py::arg("p"), py::arg("j"));
    m.def("derivative", &derivative, py::arg("p"));
    m.def("lth_derivative", &lth_derivative, py::arg("p"), py::arg("l"));
    m.def("complex_hessian", &complex_hessian, py::arg("p"));
    m.def("full_hessian", &full_hessian, py::arg("p"));

    py::enum_<WedVerdict::Kind>(m, "WedKind")
        .value("NOT_WED", WedVerdict::Kind::NotWed)
        .value("WED", WedVerdict::Kind::Wed)
        .value("WED_WRT", WedVerdict::Kind::WedWrt);

    py::class_<WedVerdict>(m, "WedVerdict")
        .def_readonly("kind", &WedVerdict::kind)
        .def("wed", &WedVerdict::wed)
        .def_property_readonly("variable", [](const WedVerdict& v) -> std::optional<std::string> {
            if (!v.variable) return std::nullopt;
            return v.variable->str();
        });

    m.def("one_wed", [](const std::string& a, const std::string& b) {
              return one_wed(word_from(a), word_from(b));
          },
          py::arg("m"), py::arg("mt"), "Wed verdict for two monomials given as text.");
    m.def("levi_wed", [](const std::string& a, const std::string& b) {
              return levi_wed(word_from(a), word_from(b));
          },
          py::arg("m"), py::arg("mt"));
    m.def("subst_set", [](const std::string& w, const std::string& from, const std::string& to) {
              Word fw = word_from(from), tw = word_from(to);
              if (fw.size() != 1 || tw.size() != 1)
                  throw std::invalid_argument("ncplush: from/to must be single letters");
              std::vector<std::string> out;
              for (const Word& s : subst_set(word_from(w), fw.letters()[0], tw.letters()[0]))
                  out.push_back(s.str());
              return out;
          },
          py::arg("m"), py::arg("from_letter"), py::arg("to_letter"));

    py::class_<IntegrabilityCheck>(m, "IntegrabilityCheck")
        .def_readonly("integrable", &IntegrabilityCheck::integrable)
        .def("__bool__", [](const IntegrabilityCheck& c) { return c.integrable; })
        .def_property_readonly("witness", [](const IntegrabilityCheck& c) -> std::optional<std::string> {
            if (!c.witness) return std::nullopt;
            return c.witness->str();
        })
        .def_property_readonly("missing", [](const IntegrabilityCheck& c) -> std::optional<std::string> {
            if (!c.missing) return std::nullopt;
            return c.missing->str();
        })
        .def_property_readonly("classes", [](const IntegrabilityCheck& c) {
            py::list out;
            for (const auto& cls : c.classes) {
                py::dict d;
                d["representative"] = cls.representative.str();
                d["coefficient"] = rational_str(cls.coefficient);
                py::list members;
                for (const auto& w : cls.members) members.append(w.str());
                d["members"] = members;
                out.append(d);
            }
            return out;
        });

    m.def("is_integrable", &is_integrable, py::arg("p"));
    m.def("is_integrable_in", &is_integrable_in, py::arg("p"), py::arg("j"));
    m.def("integrate", &integrate, py::arg("p"));
    m.def("integrate_in", &integrate_in, py::arg("p"), py::arg("j"));

    py::enum_<FrobeniusResult::Status>(m, "FrobeniusStatus")
        .value("INTEGRABLE", FrobeniusResult::Status::Integrable)
        .value("COMPONENT_NOT_INTEGRABLE", FrobeniusResult::Status::ComponentNotIntegrable)
        .value("CROSS_PARTIAL_MISMATCH", FrobeniusResult::Status::CrossPartialMismatch);

    py::class_<FrobeniusResult>(m, "FrobeniusResult")
        .def_readonly("status", &FrobeniusResult::status)
        .def_readonly("i", &FrobeniusResult::i)
        .def_readonly("j", &FrobeniusResult::j)
        .def_property_readonly("potential", [](const FrobeniusResult& r) { return r.potential; })
        .def("__bool__", [](const FrobeniusResult& r) { return static_cast<bool>(r); });

    m.def("frobenius_check", [](const std::vector<Polynomial>& components) {
              return frobenius_check(FrobeniusSystem{components});
          },
          py::arg("components"));

    py::enum_<HessianCheck::Status>(m, "HessianStatus")
        .value("YES", HessianCheck::Status::Yes)
        .value("P1_VIOLATION", HessianCheck::Status::P1Violation)
        .value("P2_VIOLATION", HessianCheck::Status::P2Violation);

    py::class_<HessianCheck>(m, "HessianCheck")
        .def_readonly("status", &HessianCheck::status)
        .def_property_readonly("antiderivative",
                               [](const HessianCheck& c) { return c.antiderivative; })
        .def_property_readonly("violation", [](const HessianCheck& c) -> std::optional<std::string> {
            if (!c.violation) return std::nullopt;
            return c.violation->str();
        })
        .def_property_readonly("missing", [](const HessianCheck& c) -> std::optional<std::string> {
            if (!c.missing) return std::nullopt;
            return c.missing->str();
        })
        .def("__bool__", [](const HessianCheck& c) { return static_cast<bool>(c); });

    m.def("is_complex_hessian", &is_complex_hessian, py::arg("q"));

    py::class_<WeightedSquare>(m, "WeightedSquare")
        .def(py::init([](const py::object& weight, const Polynomial& factor) {
                 return WeightedSquare{rational_from(weight), factor};
             }),
             py::arg("weight"), py::arg("factor"))
        .def_property_readonly("weight",
                               [](const WeightedSquare& s) { return rational_str(s.weight); })
        .def_property_readonly("weight_float",
                               [](const WeightedSquare& s) { return s.weight.get_d(); })
        .def_readonly("factor", &WeightedSquare::factor);

    py::class_<PlushDecomposition>(m, "PlushDecomposition")
        .def(py::init([](const std::vector<WeightedSquare>& her,
                         const std::vector<WeightedSquare>& anti, const Polynomial& analytic) {
                 return PlushDecomposition{her, anti, analytic,
                                           static_cast<int>(her.size()),
                                           static_cast<int>(anti.size())};
             }),
             py::arg("hereditary_squares"), py::arg("antihereditary_squares"),
             py::arg("analytic_part"))
        .def_readonly("hereditary_squares", &PlushDecomposition::hereditary_squares)
        .def_readonly("antihereditary_squares", &PlushDecomposition::antihereditary_squares)
        .def_readonly("analytic_part", &PlushDecomposition::analytic_part)
        .def_readonly("n_min", &PlushDecomposition::n_min)
        .def_readonly("m_min", &PlushDecomposition::m_min)
        .def("expansion", &PlushDecomposition::expansion);

    py::enum_<FailureWitness::Stage>(m, "FailureStage")
        .value("NOT_SYMMETRIC", FailureWitness::Stage::NotSymmetric)
        .value("HESSIAN_NOT_SPLIT_FORM", FailureWitness::Stage::HessianNotSplitForm)
        .value("GRAM_NOT_PSD", FailureWitness::Stage::GramNotPsd)
        .value("RESIDUAL_MIXED", FailureWitness::Stage::ResidualMixed);

    py::class_<FailureWitness>(m, "FailureWitness")
        .def_readonly("stage", &FailureWitness::stage)
        .def_property_readonly("word", [](const FailureWitness& w) -> std::optional<std::string> {
            if (!w.word) return std::nullopt;
            return w.word->str();
        })
        .def_property_readonly("certificate", [](const FailureWitness& w) {
            std::vector<std::string> out;
            for (const auto& v : w.certificate) out.push_back(rational_str(v));
            return out;
        })
        .def("describe", &FailureWitness::describe);

    py::class_<PlushResult>(m, "PlushResult")
        .def_readonly("plush", &PlushResult::plush)
        .def_property_readonly("decomposition", [](const PlushResult& r) { return r.decomposition; })
        .def_property_readonly("witness", [](const PlushResult& r) { return r.witness; })
        .def("__bool__", [](const PlushResult& r) { return r.plush; });

    m.def("classify_plush", &classify_plush, py::arg("p"));
    m.def("verify_decomposition", &verify_decomposition, py::arg("p"), py::arg("d"));

    py::class_<IsometryRelation>(m, "IsometryRelation")
        .def_property_readonly("matrix", [](const IsometryRelation& r) {
            std::vector<std::vector<std::string>> out;
            for (const auto& row : r.matrix) {
                std::vector<std::string> s;
                for (const auto& v : row) s.push_back(rational_str(v));
                out.push_back(std::move(s));
            }
            return out;
        })
        .def_property_readonly("constants", [](const IsometryRelation& r) {
            std::vector<std::string> out;
            for (const auto& v : r.constants) out.push_back(rational_str(v));
            return out;
        })
        .def_property_readonly("unweighted_rational",
                               [](const IsometryRelation& r) { return r.unweighted.has_value(); })
        .def_property_readonly("unweighted",
                               [](const IsometryRelation& r) -> std::optional<std::vector<std::vector<std::string>>> {
            if (!r.unweighted) return std::nullopt;
            std::vector<std::vector<std::string>> out;
            for (const auto& row : *r.unweighted) {
                std::vector<std::string> s;
                for (const auto& v : row) s.push_back(rational_str(v));
                out.push_back(std::move(s));
            }
            return out;
        });

    py::class_<RelateResult>(m, "RelateResult")
        .def_readonly("related", &RelateResult::related)
        .def_readonly("reason", &RelateResult::reason)
        .def_property_readonly("hereditary", [](const RelateResult& r) { return r.hereditary; })
        .def_property_readonly("antihereditary",
                               [](const RelateResult& r) { return r.antihereditary; })
        .def("__bool__", [](const RelateResult& r) { return r.related; });

    m.def("relate_representations", &relate_representations, py::arg("a"), py::arg("b"));

    m.def("evaluate", [](const Polynomial& p, const std::vector<Eigen::MatrixXd>& X,
                         std::optional<std::vector<Eigen::MatrixXd>> H, int n) {
              std::optional<MatrixTuple> ht;
              if (H) ht = tuple_from(*H, n);
              return eval(p, tuple_from(X, n), ht);
          },
          py::arg("p"), py::arg("X"), py::arg("H") = std::nullopt, py::arg("n") = 0,
          "Evaluate on square matrices; n sizes the identity when X is empty.");

    py::class_<PositivityWitness>(m, "PositivityWitness")
        .def_property_readonly("X", [](const PositivityWitness& w) { return tuple_to(w.X); })
        .def_property_readonly("H", [](const PositivityWitness& w) { return tuple_to(w.H); })
        .def_readonly("eigenvalue", &PositivityWitness::eigenvalue)
        .def_readonly("trial", &PositivityWitness::trial)
        .def_readonly("size", &PositivityWitness::size);

    py::class_<PositivityReport>(m, "PositivityReport")
        .def_readonly("samples", &PositivityReport::samples)
        .def_readonly("min_eigenvalue", &PositivityReport::min_eigenvalue)
        .def_readonly("seed", &PositivityReport::seed)
        .def_property_readonly("witness", [](const PositivityReport& r) { return r.witness; });

    m.def("sample_positivity", [](const Polynomial& q, const std::vector<int>& sizes, int trials,
                                  std::uint64_t seed, double tol) {
              SampleOptions opts;
              opts.sizes = sizes;
              opts.trials = trials;
              opts.seed = seed;
              opts.tolerance = tol;
              return sample_positivity(q, opts);
          },
          py::arg("q"), py::arg("sizes") = std::vector<int>{1, 2, 3}, py::arg("trials") = 200,
          py::arg("seed") = 42, py::arg("tol") = 1e-9);
}
