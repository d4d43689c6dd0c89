#include "doctest.h"

#include <algorithm>

#include "ncplush/gram.hpp"
#include "ncplush/nccalc.hpp"
#include "ncplush/ncparse.hpp"
#include "testgen.hpp"

using namespace ncplush;

namespace {

Word word_of(const std::string& text) {
    Polynomial p = parse(text);
    REQUIRE(p.term_count() == 1);
    return p.terms().begin()->first;
}

RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    RationalMatrix m;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (long v : r) row.push_back(rat(v));
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

TEST_SUITE("gram") {

TEST_CASE("split_hessian sorts terms by their leading block") {
    // hessian of the plush quartic is entirely hereditary
    Polynomial q = complex_hessian(parse("x1'*x1'*x1*x1", 1));
    HessianSplit s = split_hessian(q);
    CHECK(s.hereditary == q);
    CHECK(s.antihereditary.is_zero());

    // hessian of x x^T is entirely antihereditary
    q = complex_hessian(parse("x1*x1'", 1));
    s = split_hessian(q);
    CHECK(s.hereditary.is_zero());
    CHECK(s.antihereditary == parse("h1*h1'", 1));

    // the mixed example splits two and two
    q = complex_hessian(parse("x1*x2'*x1 + x1'*x2*x1'", 2));
    s = split_hessian(q);
    CHECK(s.hereditary == parse("h1'*h2*x1' + x1'*h2*h1'", 2));
    CHECK(s.antihereditary == parse("h1*h2'*x1 + x1*h2'*h1", 2));
    CHECK(s.hereditary + s.antihereditary == q);

    CHECK_THROWS_AS(split_hessian(parse("h1*x1", 1)), std::invalid_argument);
}

TEST_CASE("build_gram on the quartic hessian") {
    Polynomial q = complex_hessian(parse("x1'*x1'*x1*x1", 1));
    GramBuild gb = build_gram(split_hessian(q).hereditary, GramSide::Hereditary);
    REQUIRE(gb.ok);
    REQUIRE(gb.form.border.size() == 2);
    CHECK(gb.form.border[0] == word_of("h1*x1"));
    CHECK(gb.form.border[1] == word_of("x1*h1"));
    CHECK(gb.form.matrix == mat({{1, 1}, {1, 1}}));
}

TEST_CASE("build_gram rejects non-split words") {
    Polynomial q = complex_hessian(parse("x1*x2'*x1 + x1'*x2*x1'", 2));
    GramBuild gb = build_gram(split_hessian(q).hereditary, GramSide::Hereditary);
    REQUIRE_FALSE(gb.ok);
    CHECK(*gb.witness == word_of("h1'*h2*x1'"));  // plain h2 is followed by x1'

    gb = build_gram(split_hessian(q).antihereditary, GramSide::Antihereditary);
    REQUIRE_FALSE(gb.ok);
    CHECK(*gb.witness == word_of("h1*h2'*x1"));
}

TEST_CASE("build_gram of zero is empty") {
    GramBuild gb = build_gram(Polynomial::zero(2), GramSide::Hereditary);
    REQUIRE(gb.ok);
    CHECK(gb.form.border.empty());
    CHECK(gb.form.matrix.empty());

    PsdResult psd = psd_factor(gb.form);
    CHECK(psd.psd);
    CHECK(psd.factorization.rank == 0);
}

TEST_CASE("build_gram reconstruction on both sides") {
    // antihereditary: k k^T with k = x1 x2
    Polynomial p = parse("x1*x2", 2);
    Polynomial q = complex_hessian(p * p.transpose());
    HessianSplit s = split_hessian(q);
    CHECK(s.hereditary.is_zero());
    GramBuild gb = build_gram(s.antihereditary, GramSide::Antihereditary);
    REQUIRE(gb.ok);

    Polynomial rebuilt(2);
    for (std::size_t a = 0; a < gb.form.border.size(); ++a)
        for (std::size_t b = 0; b < gb.form.border.size(); ++b) {
            Polynomial ya = Polynomial::monomial(rat(1), gb.form.border[a], 2);
            Polynomial yb = Polynomial::monomial(rat(1), gb.form.border[b], 2);
            rebuilt = rebuilt + (ya * yb.transpose()).scaled(gb.form.matrix[a][b]);
        }
    CHECK(rebuilt == s.antihereditary);

    // hereditary: y^T G y over random sums of analytic squares
    testgen::Gen gen(5309);
    for (int it = 0; it < 25; ++it) {
        int vars = gen.uniform(1, 2);
        Polynomial her(vars);
        for (int k = 0; k <= gen.uniform(0, 2); ++k) {
            Polynomial f = gen.analytic_no_constant(vars, 3, 3);
            her = her + complex_hessian(f.transpose() * f);
        }
        GramBuild hb = build_gram(her, GramSide::Hereditary);
        REQUIRE(hb.ok);
        Polynomial back(vars);
        for (std::size_t a = 0; a < hb.form.border.size(); ++a)
            for (std::size_t b = 0; b < hb.form.border.size(); ++b) {
                Polynomial ya = Polynomial::monomial(rat(1), hb.form.border[a], vars);
                Polynomial yb = Polynomial::monomial(rat(1), hb.form.border[b], vars);
                back = back + (ya.transpose() * yb).scaled(hb.form.matrix[a][b]);
            }
        CHECK(back == her);
    }
}

TEST_CASE("psd_factor golden 2x2 cases") {
    GramForm gf;
    gf.side = GramSide::Hereditary;
    gf.context = 1;
    gf.border = {word_of("h1*x1"), word_of("x1*h1")};

    gf.matrix = mat({{1, 1}, {1, 1}});
    PsdResult res = psd_factor(gf);
    REQUIRE(res.psd);
    CHECK(res.factorization.rank == 1);
    REQUIRE(res.factorization.pivots.size() == 1);
    CHECK(res.factorization.pivots[0] == 1);
    CHECK(res.factorization.rows[0] == std::vector<Rational>{rat(1), rat(1)});
    CHECK(expand_factorization(res.factorization, gf) ==
          complex_hessian(parse("x1'*x1'*x1*x1", 1)));

    gf.matrix = mat({{0, 1}, {1, 0}});
    res = psd_factor(gf);
    REQUIRE_FALSE(res.psd);
    CHECK(res.certificate == std::vector<Rational>{rat(1), rat(-1)});
    // v^T G v = -2 exactly
    Rational quad(0);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            quad += res.certificate[i] * gf.matrix[i][k] * res.certificate[k];
    CHECK(quad == rat(-2));

    gf.border = {word_of("h1*x1")};
    gf.matrix = mat({{0}});
    res = psd_factor(gf);
    REQUIRE(res.psd);
    CHECK(res.factorization.rank == 0);
}

TEST_CASE("psd_factor certificate is exact after elimination steps") {
    PsdResult res = psd_factor_matrix(mat({{1, -2}, {-2, 1}}));
    REQUIRE_FALSE(res.psd);
    RationalMatrix g = mat({{1, -2}, {-2, 1}});
    Rational quad(0);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k) quad += res.certificate[i] * g[i][k] * res.certificate[k];
    CHECK(quad < 0);
    CHECK(quad == rat(-3));
}

TEST_CASE("psd_factor rejects asymmetric input") {
    CHECK_THROWS_AS(psd_factor_matrix(mat({{1, 2}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("property: factorization reconstructs random PSD matrices") {
    testgen::Gen gen(246);
    for (int it = 0; it < 60; ++it) {
        // G = B^T B is PSD by construction
        int n = gen.uniform(1, 5);
        int r = gen.uniform(1, n);
        RationalMatrix b(static_cast<std::size_t>(r),
                         std::vector<Rational>(static_cast<std::size_t>(n)));
        for (auto& row : b)
            for (auto& v : row) v = rat(gen.uniform(-3, 3));
        RationalMatrix g(static_cast<std::size_t>(n),
                         std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < r; ++j)
                    g[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
                        b[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                        b[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];

        PsdResult res = psd_factor_matrix(g);
        REQUIRE(res.psd);
        CHECK(res.factorization.rank <= r);
        // sum_j d_j row_j^T row_j == G
        RationalMatrix back(static_cast<std::size_t>(n),
                            std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
        for (std::size_t j = 0; j < res.factorization.rows.size(); ++j)
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k)
                    back[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
                        res.factorization.pivots[j] *
                        res.factorization.rows[j][static_cast<std::size_t>(i)] *
                        res.factorization.rows[j][static_cast<std::size_t>(k)];
        CHECK(back == g);
    }
}

TEST_CASE("property: indefinite matrices yield exact negative certificates") {
    testgen::Gen gen(975);
    int rejected = 0;
    for (int it = 0; it < 60; ++it) {
        int n = gen.uniform(2, 5);
        RationalMatrix g(static_cast<std::size_t>(n),
                         std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
        for (int i = 0; i < n; ++i)
            for (int k = i; k < n; ++k) {
                Rational v = rat(gen.uniform(-4, 4));
                g[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = v;
                g[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = v;
            }
        PsdResult res = psd_factor_matrix(g);
        if (res.psd) continue;
        ++rejected;
        Rational quad(0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                quad += res.certificate[static_cast<std::size_t>(i)] *
                        g[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                        res.certificate[static_cast<std::size_t>(k)];
        CHECK(quad < 0);
    }
    CHECK(rejected > 20);  // random symmetric matrices are mostly indefinite
}

TEST_CASE("property: gram build does not depend on term insertion order") {
    testgen::Gen gen(135);
    for (int it = 0; it < 40; ++it) {
        int g = gen.uniform(1, 2);
        Polynomial f = gen.analytic_no_constant(g, 3, 3);
        Polynomial q = complex_hessian(f.transpose() * f);
        HessianSplit s = split_hessian(q);
        GramBuild direct = build_gram(s.hereditary, GramSide::Hereditary);
        REQUIRE(direct.ok);

        // rebuild the same part by summing shuffled monomials
        std::vector<std::pair<Word, Rational>> terms(s.hereditary.terms().begin(),
                                                     s.hereditary.terms().end());
        std::shuffle(terms.begin(), terms.end(), gen.rng());
        Polynomial shuffled(g);
        for (const auto& [w, c] : terms) shuffled = shuffled + Polynomial::monomial(c, w, g);
        GramBuild again = build_gram(shuffled, GramSide::Hereditary);
        REQUIRE(again.ok);
        CHECK(again.form.border == direct.form.border);
        CHECK(again.form.matrix == direct.form.matrix);
    }
}

TEST_CASE("property: rank is invariant under border permutation") {
    testgen::Gen gen(864);
    for (int it = 0; it < 40; ++it) {
        int n = gen.uniform(2, 5);
        int r = gen.uniform(1, n);
        RationalMatrix b(static_cast<std::size_t>(r),
                         std::vector<Rational>(static_cast<std::size_t>(n)));
        for (auto& row : b)
            for (auto& v : row) v = rat(gen.uniform(-2, 2));
        auto gram_of = [&](const std::vector<int>& perm) {
            RationalMatrix g(static_cast<std::size_t>(n),
                             std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k)
                    for (int j = 0; j < r; ++j)
                        g[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
                            b[static_cast<std::size_t>(j)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] *
                            b[static_cast<std::size_t>(j)][static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
            return g;
        };
        std::vector<int> identity(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)] = i;
        std::vector<int> perm = identity;
        std::shuffle(perm.begin(), perm.end(), gen.rng());

        PsdResult a = psd_factor_matrix(gram_of(identity));
        PsdResult c = psd_factor_matrix(gram_of(perm));
        REQUIRE(a.psd);
        REQUIRE(c.psd);
        CHECK(a.factorization.rank == c.factorization.rank);
    }
}

}  // TEST_SUITE
