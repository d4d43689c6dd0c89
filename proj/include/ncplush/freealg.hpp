/*
 * freealg.hpp
 * -----------
 * Free *-algebra over noncommuting variables x_1..x_g, their formal
 * transposes x_j', and direction variables h_1..h_g, h_j'.
 *
 * Words are finite letter sequences (the empty word is the scalar 1);
 * polynomials are finite maps from words to exact rational coefficients.
 * Everything is immutable after construction and safe to share across
 * threads.
 */
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

namespace ncplush {

// Exact arbitrary-precision rational coefficient.
using Rational = mpq_class;

// Builds a canonicalized rational n/d.
Rational rat(long n, long d = 1);

// Letter families. Direction letters (h) sort before base variables (x);
// this ordering is part of the deterministic-output contract.
enum class Family : std::uint8_t { H = 0, X = 1 };

struct Letter {
    Family family;
    int index;       // 1-based
    bool transposed;

    Letter(Family f, int idx, bool t) : family(f), index(idx), transposed(t) {
        if (idx < 1) throw std::invalid_argument("ncplush: letter index must be >= 1");
    }

    std::tuple<int, int, int> key() const {
        return {static_cast<int>(family), index, transposed ? 1 : 0};
    }
    bool operator==(const Letter& o) const { return key() == o.key(); }
    bool operator!=(const Letter& o) const { return !(*this == o); }
    bool operator<(const Letter& o) const { return key() < o.key(); }

    Letter transpose() const { return Letter(family, index, !transposed); }
    std::string str() const;
};

// Convenience factories: x(2) = x_2, xt(2) = x_2', h(1) = h_1, ht(1) = h_1'.
inline Letter x(int j) { return Letter(Family::X, j, false); }
inline Letter xt(int j) { return Letter(Family::X, j, true); }
inline Letter h(int j) { return Letter(Family::H, j, false); }
inline Letter ht(int j) { return Letter(Family::H, j, true); }

/**
 * A monomial without coefficient: an ordered sequence of letters.
 * Words compare by (length, then lexicographically on letters); this
 * fixed total order drives term order, class representatives and Gram
 * border vectors.
 */
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    // Involution: reverses the word and toggles every transpose flag.
    Word transpose() const;

    Word concat(const Word& o) const;

    int max_index() const;
    int h_count() const;        // letters of family H, any transpose flag
    bool has_transposed() const;
    bool all_transposed() const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    bool operator<(const Word& o) const;

    std::string str() const;    // grammar text, "1" for the empty word

private:
    std::vector<Letter> letters_;
};

struct WordOrder {
    bool operator()(const Word& a, const Word& b) const { return a < b; }
};

using TermMap = std::map<Word, Rational, WordOrder>;

/**
 * An nc polynomial: finite association word -> nonzero rational, plus the
 * variable count g it lives over. Mixing polynomials with different g in a
 * binary operation is an error, never a silent widening.
 */
class Polynomial {
public:
    explicit Polynomial(int g) : g_(check_g(g)) {}
    Polynomial(TermMap terms, int g);

    static Polynomial zero(int g) { return Polynomial(g); }
    static Polynomial constant(const Rational& c, int g);
    static Polynomial monomial(const Rational& c, const Word& w, int g);

    int context() const { return g_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // 0 when the word is absent.
    Rational coeff(const Word& w) const;
    Rational constant_term() const { return coeff(Word()); }

    // -1 for the zero polynomial.
    int degree() const;
    // max H-letter count over words; 0 for the zero polynomial.
    int h_degree() const;

    Polynomial transpose() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;

    bool operator==(const Polynomial& o) const { return g_ == o.g_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    static int check_g(int g);
    void check_same_context(const Polynomial& o) const;
    void add_term(const Word& w, const Rational& c);

    int g_;
    TermMap terms_;
};

inline Polynomial transpose(const Polynomial& p) { return p.transpose(); }

struct Classification {
    bool symmetric;
    bool analytic;      // no transposed letters anywhere
    bool antianalytic;  // every letter transposed
    int degree;
    int h_degree;
};

Classification classify(const Polynomial& p);

}  // namespace ncplush
