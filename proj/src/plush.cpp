#include "ncplush/plush.hpp"

#include <algorithm>
#include <map>

#include "ncplush/nccalc.hpp"
#include "ncplush/ncint.hpp"

namespace ncplush {

namespace {

bool is_h_free_analytic(const Polynomial& p) {
    for (const auto& [w, c] : p.terms())
        for (const Letter& l : w.letters())
            if (l.family == Family::H || l.transposed) return false;
    return true;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational out{mpq_class(sn, sd)};
    out.canonicalize();
    return out;
}

// Exact solve of M x = rhs for a consistent overdetermined system; nullopt
// when inconsistent. M is rows x cols, destroyed by elimination.
std::optional<std::vector<Rational>> solve_consistent(RationalMatrix m,
                                                      std::vector<Rational> rhs, std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_row(cols, rows);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        std::swap(rhs[sel], rhs[r]);
        const Rational inv = Rational(1) / m[r][c];
        for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
            rhs[i] -= f * rhs[r];
        }
        pivot_row[c] = r;
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_row[c] < rows) x[c] = rhs[pivot_row[c]];
    return x;
}

IsometryRelation relate_side(const std::vector<WeightedSquare>& a,
                             const std::vector<WeightedSquare>& b) {
    IsometryRelation rel;
    for (const auto& s : a) rel.weights_from.push_back(s.weight);
    for (const auto& s : b) rel.weights_to.push_back(s.weight);

    std::vector<Polynomial> ra, rb;
    for (const auto& s : a) ra.push_back(derivative(s.factor));
    for (const auto& s : b) rb.push_back(derivative(s.factor));

    // coefficient matrix of a's derivative rows over the union of words
    std::map<Word, std::size_t, WordOrder> word_index;
    for (const auto& p : ra)
        for (const auto& [w, c] : p.terms()) word_index.emplace(w, 0);
    for (const auto& p : rb)
        for (const auto& [w, c] : p.terms()) word_index.emplace(w, 0);
    std::size_t next = 0;
    for (auto& [w, idx] : word_index) idx = next++;

    RationalMatrix m(word_index.size(), std::vector<Rational>(a.size(), Rational(0)));
    for (std::size_t j = 0; j < ra.size(); ++j)
        for (const auto& [w, c] : ra[j].terms()) m[word_index.at(w)][j] = c;

    for (std::size_t i = 0; i < rb.size(); ++i) {
        std::vector<Rational> rhs(word_index.size(), Rational(0));
        for (const auto& [w, c] : rb[i].terms()) rhs[word_index.at(w)] = c;
        auto row = solve_consistent(m, std::move(rhs), a.size());
        if (!row)
            throw std::invalid_argument(
                "ncplush: relate_representations requires a minimal first decomposition");
        rel.matrix.push_back(std::move(*row));
    }

    // constants: the factor differences must be exactly scalar
    for (std::size_t i = 0; i < b.size(); ++i) {
        Polynomial diff = b[i].factor;
        for (std::size_t j = 0; j < a.size(); ++j)
            diff = diff - a[j].factor.scaled(rel.matrix[i][j]);
        if (diff.degree() > 0)
            throw std::invalid_argument(
                "ncplush: relate_representations requires a minimal first decomposition");
        rel.constants.push_back(diff.constant_term());
    }

    // weighted isometry identity U^T D_b U = D_a
    for (std::size_t j = 0; j < a.size(); ++j) {
        for (std::size_t k = 0; k < a.size(); ++k) {
            Rational acc(0);
            for (std::size_t i = 0; i < b.size(); ++i)
                acc += rel.matrix[i][j] * rel.weights_to[i] * rel.matrix[i][k];
            const Rational want = (j == k) ? rel.weights_from[j] : Rational(0);
            if (acc != want)
                throw std::invalid_argument(
                    "ncplush: relate_representations requires a minimal first decomposition");
        }
    }

    // unweighted isometry, when the scaling stays rational
    RationalMatrix unweighted(b.size(), std::vector<Rational>(a.size(), Rational(0)));
    bool rational = true;
    for (std::size_t i = 0; i < b.size() && rational; ++i) {
        for (std::size_t j = 0; j < a.size() && rational; ++j) {
            if (rel.matrix[i][j] == 0) continue;
            auto s = exact_sqrt(rel.weights_to[i] / rel.weights_from[j]);
            if (!s)
                rational = false;
            else
                unweighted[i][j] = rel.matrix[i][j] * *s;
        }
    }
    if (rational) rel.unweighted = std::move(unweighted);
    return rel;
}

}  // namespace

Polynomial PlushDecomposition::expansion() const {
    Polynomial out = analytic_part + analytic_part.transpose();
    for (const auto& s : hereditary_squares)
        out = out + (s.factor.transpose() * s.factor).scaled(s.weight);
    for (const auto& s : antihereditary_squares)
        out = out + (s.factor * s.factor.transpose()).scaled(s.weight);
    return out;
}

std::string FailureWitness::describe() const {
    switch (stage) {
        case Stage::NotSymmetric:
            return "polynomial is not symmetric (term " + word->str() + ")";
        case Stage::HessianNotSplitForm:
            return "hessian term " + word->str() +
                   " does not factor at the transposed/plain boundary";
        case Stage::GramNotPsd: {
            std::string s = (side == GramSide::Hereditary) ? "hereditary" : "antihereditary";
            return s + " Gram matrix is not positive semidefinite";
        }
        case Stage::ResidualMixed:
            return "residual term " + word->str() + " mixes plain and transposed letters";
    }
    return "";
}

AnalyticExtract extract_analytic_part(const Polynomial& residual) {
    if (residual.transpose() != residual)
        throw std::invalid_argument("ncplush: extract_analytic_part requires a symmetric input");
    if (!complex_hessian(residual).is_zero())
        throw std::invalid_argument(
            "ncplush: extract_analytic_part requires a zero complex hessian");
    AnalyticExtract res;
    Polynomial f(residual.context());
    for (const auto& [w, c] : residual.terms()) {
        if (w.empty()) {
            f = f + Polynomial::constant(c / 2, residual.context());
        } else if (!w.has_transposed()) {
            f = f + Polynomial::monomial(c, w, residual.context());
        } else if (!w.all_transposed()) {
            res.witness = w;  // unreachable when the hessian vanishes
            return res;
        }
    }
    res.ok = true;
    res.F = std::move(f);
    return res;
}

PlushResult classify_plush(const Polynomial& p) {
    if (p.h_degree() != 0)
        throw std::invalid_argument(
            "ncplush: classify_plush expects a polynomial in the base variables only");
    PlushResult res;

    if (p.transpose() != p) {
        FailureWitness w{FailureWitness::Stage::NotSymmetric, std::nullopt, std::nullopt, {}};
        for (const auto& [word, c] : p.terms()) {
            if (p.coeff(word.transpose()) != c) {
                w.word = word;
                break;
            }
        }
        res.witness = std::move(w);
        return res;
    }

    const Polynomial q = complex_hessian(p);
    const HessianSplit split = split_hessian(q);

    PlushDecomposition dec{{}, {}, Polynomial(p.context()), 0, 0};
    for (GramSide side : {GramSide::Hereditary, GramSide::Antihereditary}) {
        const bool her = (side == GramSide::Hereditary);
        const Polynomial& part = her ? split.hereditary : split.antihereditary;

        GramBuild gb = build_gram(part, side);
        if (!gb) {
            res.witness = FailureWitness{FailureWitness::Stage::HessianNotSplitForm, gb.witness,
                                         side, {}};
            return res;
        }
        PsdResult psd = psd_factor(gb.form);
        if (!psd) {
            res.witness = FailureWitness{FailureWitness::Stage::GramNotPsd, std::nullopt, side,
                                         psd.certificate};
            return res;
        }
        // each factor row is integrable: its wed classes inherit the equal
        // coefficients of the hessian's Levi classes
        std::vector<Polynomial> rows = factor_rows(psd.factorization, gb.form);
        auto& squares = her ? dec.hereditary_squares : dec.antihereditary_squares;
        for (std::size_t j = 0; j < rows.size(); ++j)
            squares.push_back(WeightedSquare{psd.factorization.pivots[j], integrate(rows[j])});
        (her ? dec.n_min : dec.m_min) = psd.factorization.rank;
    }

    Polynomial residual = p;
    for (const auto& s : dec.hereditary_squares)
        residual = residual - (s.factor.transpose() * s.factor).scaled(s.weight);
    for (const auto& s : dec.antihereditary_squares)
        residual = residual - (s.factor * s.factor.transpose()).scaled(s.weight);

    AnalyticExtract ext = extract_analytic_part(residual);
    if (!ext) {
        res.witness =
            FailureWitness{FailureWitness::Stage::ResidualMixed, ext.witness, std::nullopt, {}};
        return res;
    }
    dec.analytic_part = ext.F;
    res.plush = true;
    res.decomposition = std::move(dec);
    return res;
}

bool verify_decomposition(const Polynomial& p, const PlushDecomposition& d) {
    if (d.context() != p.context()) return false;
    for (const auto& s : d.hereditary_squares)
        if (s.weight <= 0 || !is_h_free_analytic(s.factor)) return false;
    for (const auto& s : d.antihereditary_squares)
        if (s.weight <= 0 || !is_h_free_analytic(s.factor)) return false;
    if (!is_h_free_analytic(d.analytic_part)) return false;
    return d.expansion() == p;
}

RelateResult relate_representations(const PlushDecomposition& a, const PlushDecomposition& b) {
    RelateResult res;
    if (a.expansion() != b.expansion()) {
        res.reason = "the two decompositions expand to different polynomials";
        return res;
    }
    res.hereditary = relate_side(a.hereditary_squares, b.hereditary_squares);
    res.antihereditary = relate_side(a.antihereditary_squares, b.antihereditary_squares);
    res.related = true;
    return res;
}

}  // namespace ncplush
