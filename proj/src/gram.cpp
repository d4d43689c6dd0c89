#include "ncplush/gram.hpp"

#include <map>

namespace ncplush {

namespace {

// Exactly one plain and one transposed direction letter.
bool satisfies_p1(const Word& w) {
    int plain = 0, transposed = 0;
    for (const Letter& l : w.letters()) {
        if (l.family != Family::H) continue;
        if (l.transposed)
            ++transposed;
        else
            ++plain;
    }
    return plain == 1 && transposed == 1;
}

// Index of the first plain letter when the word is a transposed block
// followed by a plain block; nullopt when the pattern fails.
std::optional<std::size_t> block_boundary(const Word& w, bool transposed_first) {
    const auto& ls = w.letters();
    std::size_t boundary = 0;
    bool in_second = false;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        bool first_block = transposed_first ? ls[i].transposed : !ls[i].transposed;
        if (!in_second) {
            if (first_block) continue;
            in_second = true;
            boundary = i;
        } else if (first_block) {
            return std::nullopt;
        }
    }
    if (!in_second || boundary == 0) return std::nullopt;  // needs both blocks
    return boundary;
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
    std::vector<Letter> ls(w.letters().begin() + static_cast<std::ptrdiff_t>(from),
                           w.letters().begin() + static_cast<std::ptrdiff_t>(to));
    return Word(std::move(ls));
}

}  // namespace

HessianSplit split_hessian(const Polynomial& q) {
    TermMap her, anti;
    for (const auto& [w, c] : q.terms()) {
        if (!satisfies_p1(w))
            throw std::invalid_argument("ncplush: monomial " + w.str() +
                                        " does not carry exactly one h and one h' letter");
        if (w.letters().front().transposed)
            her.emplace(w, c);
        else
            anti.emplace(w, c);
    }
    return HessianSplit{Polynomial(std::move(her), q.context()),
                        Polynomial(std::move(anti), q.context())};
}

GramBuild build_gram(const Polynomial& part, GramSide side) {
    GramBuild res;
    const bool hereditary = (side == GramSide::Hereditary);

    // Factor every word at the block boundary and collect border entries.
    // Hereditary: w = u v with u antianalytic carrying h', v analytic
    // carrying h; border entries are u^T and v. Antihereditary mirrors it.
    struct Entry {
        Word left, right;
        Rational coeff;
    };
    std::vector<Entry> entries;
    std::map<Word, int, WordOrder> border_index;
    for (const auto& [w, c] : part.terms()) {
        if (!satisfies_p1(w)) {
            res.witness = w;
            return res;
        }
        auto boundary = block_boundary(w, hereditary);
        if (!boundary) {
            res.witness = w;
            return res;
        }
        Word u = slice(w, 0, *boundary);
        Word v = slice(w, *boundary, w.size());
        Word left = hereditary ? u.transpose() : u;
        Word right = hereditary ? v : v.transpose();
        // the direction letter must sit once on each side
        if (left.h_count() != 1 || right.h_count() != 1) {
            res.witness = w;
            return res;
        }
        border_index.emplace(left, 0);
        border_index.emplace(right, 0);
        entries.push_back(Entry{std::move(left), std::move(right), c});
    }

    GramForm& gf = res.form;
    gf.side = side;
    gf.context = part.context();
    gf.border.reserve(border_index.size());
    int next = 0;
    for (auto& [w, idx] : border_index) {
        idx = next++;
        gf.border.push_back(w);
    }
    const std::size_t n = gf.border.size();
    gf.matrix.assign(n, std::vector<Rational>(n, Rational(0)));
    for (const Entry& e : entries)
        gf.matrix[static_cast<std::size_t>(border_index[e.left])]
                 [static_cast<std::size_t>(border_index[e.right])] = e.coeff;
    res.ok = true;
    return res;
}

PsdResult psd_factor(const GramForm& gf) { return psd_factor_matrix(gf.matrix); }

PsdResult psd_factor_matrix(const RationalMatrix& g) {
    const std::size_t n = g.size();
    for (const auto& row : g)
        if (row.size() != n) throw std::invalid_argument("ncplush: Gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            if (g[i][k] != g[k][i])
                throw std::invalid_argument("ncplush: Gram matrix is not symmetric");

    PsdResult res;
    RationalMatrix s = g;  // Schur complement, shrinking over `active`
    std::vector<bool> eliminated(n, false);
    auto& fact = res.factorization;

    // Lifts a certificate for the current Schur complement to one for the
    // original matrix by zeroing the eliminated factor-row components.
    auto lift_certificate = [&](std::vector<Rational> v) {
        const std::size_t t = fact.rows.size();
        for (std::size_t jj = t; jj-- > 0;) {
            Rational dot(0);
            for (std::size_t a = 0; a < n; ++a) dot += fact.rows[jj][a] * v[a];
            const auto p = static_cast<std::size_t>(fact.permutation[jj]);
            v[p] -= dot;  // row jj has a unit entry at p
        }
        res.certificate = std::move(v);
    };

    for (std::size_t step = 0; step < n; ++step) {
        // largest remaining diagonal entry; first index wins ties
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (eliminated[i]) continue;
            if (pivot == n || s[i][i] > s[pivot][pivot]) pivot = i;
        }
        if (pivot == n) break;  // everything eliminated

        if (s[pivot][pivot] > 0) {
            const Rational d = s[pivot][pivot];
            std::vector<Rational> row(n, Rational(0));
            for (std::size_t i = 0; i < n; ++i)
                if (!eliminated[i]) row[i] = s[pivot][i] / d;
            row[pivot] = 1;
            for (std::size_t i = 0; i < n; ++i) {
                if (eliminated[i] || i == pivot) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (eliminated[k] || k == pivot) continue;
                    s[i][k] -= row[i] * d * row[k];
                }
            }
            eliminated[pivot] = true;
            fact.pivots.push_back(d);
            fact.rows.push_back(std::move(row));
            fact.permutation.push_back(static_cast<int>(pivot));
            continue;
        }

        // max diagonal <= 0: find a negative diagonal, or a nonzero
        // off-diagonal entry in a zero-diagonal block
        std::vector<Rational> v(n, Rational(0));
        bool found = false;
        for (std::size_t i = 0; i < n && !found; ++i) {
            if (eliminated[i]) continue;
            if (s[i][i] < 0) {
                v[i] = 1;
                found = true;
            }
        }
        for (std::size_t i = 0; i < n && !found; ++i) {
            if (eliminated[i]) continue;
            for (std::size_t k = i + 1; k < n && !found; ++k) {
                if (eliminated[k]) continue;
                if (s[i][k] != 0) {
                    v[i] = 1;
                    v[k] = (s[i][k] > 0) ? Rational(-1) : Rational(1);
                    found = true;
                }
            }
        }
        if (!found) break;  // remaining block is zero: done, PSD
        lift_certificate(std::move(v));
        return res;
    }

    res.psd = true;
    fact.rank = static_cast<int>(fact.pivots.size());
    return res;
}

std::vector<Polynomial> factor_rows(const PsdFactorization& f, const GramForm& gf) {
    std::vector<Polynomial> out;
    out.reserve(f.rows.size());
    for (const auto& row : f.rows) {
        Polynomial r(gf.context);
        for (std::size_t a = 0; a < gf.border.size(); ++a)
            if (row[a] != 0)
                r = r + Polynomial::monomial(row[a], gf.border[a], gf.context);
        out.push_back(std::move(r));
    }
    return out;
}

Polynomial expand_factorization(const PsdFactorization& f, const GramForm& gf) {
    Polynomial out(gf.context);
    std::vector<Polynomial> rows = factor_rows(f, gf);
    for (std::size_t j = 0; j < rows.size(); ++j) {
        Polynomial sq = (gf.side == GramSide::Hereditary)
                            ? rows[j].transpose() * rows[j]
                            : rows[j] * rows[j].transpose();
        out = out + sq.scaled(f.pivots[j]);
    }
    return out;
}

}  // namespace ncplush
