#include "ncplush/freealg.hpp"

#include <algorithm>
#include <sstream>

namespace ncplush {

Rational rat(long n, long d) {
    if (d == 0) throw std::invalid_argument("ncplush: zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string Letter::str() const {
    std::string s(1, family == Family::X ? 'x' : 'h');
    s += std::to_string(index);
    if (transposed) s += '\'';
    return s;
}

Word Word::transpose() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.push_back(it->transpose());
    return Word(std::move(out));
}

Word Word::concat(const Word& o) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(out));
}

int Word::max_index() const {
    int m = 0;
    for (const auto& l : letters_) m = std::max(m, l.index);
    return m;
}

int Word::h_count() const {
    int n = 0;
    for (const auto& l : letters_)
        if (l.family == Family::H) ++n;
    return n;
}

bool Word::has_transposed() const {
    return std::any_of(letters_.begin(), letters_.end(),
                       [](const Letter& l) { return l.transposed; });
}

bool Word::all_transposed() const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [](const Letter& l) { return l.transposed; });
}

bool Word::operator<(const Word& o) const {
    if (letters_.size() != o.letters_.size())
        return letters_.size() < o.letters_.size();
    return std::lexicographical_compare(letters_.begin(), letters_.end(),
                                        o.letters_.begin(), o.letters_.end());
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += '*';
        s += letters_[i].str();
    }
    return s;
}

int Polynomial::check_g(int g) {
    if (g < 0) throw std::invalid_argument("ncplush: variable count must be >= 0");
    return g;
}

Polynomial::Polynomial(TermMap terms, int g) : g_(check_g(g)) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.max_index() > g_)
            throw std::invalid_argument("ncplush: letter index exceeds variable count " +
                                        std::to_string(g_));
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
    terms_ = std::move(terms);
}

Polynomial Polynomial::constant(const Rational& c, int g) {
    Polynomial p(g);
    if (c != 0) p.terms_.emplace(Word(), c);
    return p;
}

Polynomial Polynomial::monomial(const Rational& c, const Word& w, int g) {
    TermMap t;
    if (c != 0) t.emplace(w, c);
    return Polynomial(std::move(t), g);
}

Rational Polynomial::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // terms are length-ordered, so the last word is longest
    return static_cast<int>(terms_.rbegin()->first.size());
}

int Polynomial::h_degree() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.h_count());
    return m;
}

void Polynomial::check_same_context(const Polynomial& o) const {
    if (g_ != o.g_)
        throw std::invalid_argument("ncplush: context mismatch (g=" + std::to_string(g_) +
                                    " vs g=" + std::to_string(o.g_) + ")");
}

void Polynomial::add_term(const Word& w, const Rational& c) {
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::transpose() const {
    Polynomial out(g_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w.transpose(), c);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(g_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_context(o);
    Polynomial out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_context(o);
    Polynomial out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_context(o);
    Polynomial out(g_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_)
            out.add_term(wa.concat(wb), ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(g_);
    if (c == 0) return out;
    for (const auto& [w, k] : terms_) out.terms_.emplace(w, k * c);
    return out;
}

Classification classify(const Polynomial& p) {
    Classification c;
    c.symmetric = (p.transpose() == p);
    c.analytic = true;
    c.antianalytic = true;
    for (const auto& [w, k] : p.terms()) {
        if (w.has_transposed()) c.analytic = false;
        if (!w.all_transposed()) c.antianalytic = false;
    }
    c.degree = p.degree();
    c.h_degree = p.h_degree();
    return c;
}

}  // namespace ncplush
