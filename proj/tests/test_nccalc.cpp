#include "doctest.h"

#include "ncplush/mateval.hpp"
#include "ncplush/nccalc.hpp"
#include "ncplush/ncparse.hpp"
#include "testgen.hpp"

using namespace ncplush;

TEST_SUITE("nccalc") {

TEST_CASE("partials of the mixed worked example") {
    Polynomial p = parse("x1*x2'*x1 + x1'*x2*x1'", 2);

    CHECK(partial_x(p, 1) == parse("h1*x2'*x1 + x1*x2'*h1", 2));
    CHECK(partial_xt(p, 2) == parse("x1*h2'*x1", 2));
    CHECK(partial_x(p, 1) + partial_x(p, 2) ==
          parse("h1*x2'*x1 + x1*x2'*h1 + x1'*h2*x1'", 2));
    CHECK(derivative(p) == parse("h1*x2'*x1 + x1*h2'*x1 + x1*x2'*h1 + "
                                 "h1'*x2*x1' + x1'*h2*x1' + x1'*x2*h1'", 2));
}

TEST_CASE("partial edge cases") {
    CHECK(partial_x(parse("x1'", 1), 1).is_zero());
    CHECK(partial_x(parse("x1*x1", 1), 1) == parse("h1*x1 + x1*h1", 1));
    CHECK(partial_xt(parse("x1", 1), 1).is_zero());
    CHECK(partial_xt(parse("x1'*x1'", 1), 1) == parse("h1'*x1' + x1'*h1'", 1));
    CHECK(derivative(parse("7", 1)).is_zero());
    CHECK_THROWS_AS(partial_x(parse("x1", 1), 2), std::invalid_argument);
}

TEST_CASE("derivative of a monomial replaces each letter once") {
    Polynomial m = parse("3*x1*x2'*x1*x3", 3);
    CHECK(derivative(m) ==
          parse("3*h1*x2'*x1*x3 + 3*x1*h2'*x1*x3 + 3*x1*x2'*h1*x3 + 3*x1*x2'*x1*h3", 3));
}

TEST_CASE("lth derivative by t-expansion") {
    CHECK(lth_derivative(parse("x1^2", 1), 2) == parse("2*h1*h1", 1));
    CHECK(lth_derivative(parse("x1'*x1", 1), 2) == parse("2*h1'*h1", 1));
    CHECK(lth_derivative(parse("x1^2", 1), 3).is_zero());
    CHECK(lth_derivative(parse("x1*x2*x1", 2), 5).is_zero());
    CHECK_THROWS_AS(lth_derivative(parse("x1", 1), 0), std::invalid_argument);
}

TEST_CASE("complex hessian worked examples") {
    Polynomial p = parse("x1*x2'*x1 + x1'*x2*x1'", 2);
    CHECK(complex_hessian(p) ==
          parse("h1*h2'*x1 + x1*h2'*h1 + h1'*h2*x1' + x1'*h2*h1'", 2));

    // the quartic example and its factored form
    Polynomial quartic = parse("x1'*x1'*x1*x1", 1);
    Polynomial q = complex_hessian(quartic);
    CHECK(q == parse("h1'*x1'*h1*x1 + h1'*x1'*x1*h1 + x1'*h1'*h1*x1 + x1'*h1'*x1*h1", 1));
    Polynomial s = parse("h1*x1 + x1*h1", 1);
    CHECK(q == s.transpose() * s);

    // analytic and antianalytic polynomials have hessian 0
    CHECK(complex_hessian(parse("x1*x2*x4 + x3*x1", 4)).is_zero());
    CHECK(complex_hessian(parse("x2'*x1' + 4*x3'", 3)).is_zero());
}

TEST_CASE("full hessian") {
    CHECK(full_hessian(parse("x1'*x1", 1)) == parse("2*h1'*h1", 1));
    CHECK(full_hessian(parse("x1^2", 1)) == parse("2*h1*h1", 1));
    CHECK(full_hessian(parse("x1'*x1'*x1*x1", 1)) ==
          lth_derivative(parse("x1'*x1'*x1*x1", 1), 2));
}

TEST_CASE("full hessian decomposes into complex hessian plus pure parts") {
    testgen::Gen gen(31337);
    for (int it = 0; it < 100; ++it) {
        int g = gen.uniform(1, 3);
        Polynomial p = gen.polynomial(g, 5, 6, testgen::Alphabet::AnyX);
        Polynomial pure_x(g), pure_xt(g), dx(g), dxt(g);
        for (int j = 1; j <= g; ++j) {
            dx = dx + partial_x(p, j);
            dxt = dxt + partial_xt(p, j);
        }
        for (int j = 1; j <= g; ++j) {
            pure_x = pure_x + partial_x(dx, j);
            pure_xt = pure_xt + partial_xt(dxt, j);
        }
        CHECK(full_hessian(p) == complex_hessian(p).scaled(2) + pure_x + pure_xt);
        CHECK(lth_derivative(p, 1) == derivative(p));
        // iterated single replacements agree with the t-expansion route
        CHECK(derivative(derivative(derivative(p))) == lth_derivative(p, 3));
    }
}

TEST_CASE("property: mixed partials commute") {
    testgen::Gen gen(1001);
    for (int it = 0; it < 100; ++it) {
        int g = gen.uniform(1, 3);
        Polynomial p = gen.polynomial(g, 5, 6, testgen::Alphabet::AnyX);
        for (int i = 1; i <= g; ++i) {
            for (int j = 1; j <= g; ++j) {
                CHECK(partial_x(partial_x(p, i), j) == partial_x(partial_x(p, j), i));
                CHECK(partial_x(partial_xt(p, j), i) == partial_xt(partial_x(p, i), j));
                CHECK(partial_xt(partial_xt(p, i), j) == partial_xt(partial_xt(p, j), i));
            }
        }
    }
}

TEST_CASE("property: derivative operators are linear and preserve symmetry") {
    testgen::Gen gen(7);
    for (int it = 0; it < 100; ++it) {
        int g = gen.uniform(1, 3);
        Polynomial a = gen.polynomial(g, 4, 4, testgen::Alphabet::AnyX);
        Polynomial b = gen.polynomial(g, 4, 4, testgen::Alphabet::AnyX);
        Rational c = gen.coefficient();
        CHECK(derivative(a + b.scaled(c)) == derivative(a) + derivative(b).scaled(c));
        CHECK(complex_hessian(a + b.scaled(c)) ==
              complex_hessian(a) + complex_hessian(b).scaled(c));

        Polynomial sym = a + a.transpose();
        Polynomial d = derivative(sym);
        CHECK(d.transpose() == d);
    }
}

TEST_CASE("property: distinct monomials have disjoint derivatives") {
    testgen::Gen gen(555);
    for (int it = 0; it < 200; ++it) {
        int g = gen.uniform(1, 3);
        Word wa = gen.word(g, gen.uniform(1, 5), testgen::Alphabet::PlainX);
        Word wb = gen.word(g, gen.uniform(1, 5), testgen::Alphabet::PlainX);
        if (wa == wb) continue;
        Polynomial ma = Polynomial::monomial(rat(1), wa, g);
        Polynomial mb = Polynomial::monomial(rat(1), wb, g);
        CHECK(derivative(ma) != derivative(mb));
        for (int i = 1; i <= g; ++i) {
            Polynomial da = partial_x(ma, i);
            Polynomial db = partial_x(mb, i);
            for (const auto& [w, c] : da.terms()) CHECK(db.coeff(w) == 0);
        }
    }
}

TEST_CASE("numerical consistency: Taylor expansion to second order") {
    testgen::Gen gen(90210);
    int checked = 0;
    for (int it = 0; it < 20; ++it) {
        int g = gen.uniform(1, 2);
        int n = gen.uniform(1, 3);
        Polynomial p = gen.polynomial(g, 5, 4, testgen::Alphabet::AnyX);
        if (p.degree() < 3) continue;  // expansion is exact below cubic terms
        Polynomial dp = derivative(p);
        Polynomial ddp = full_hessian(p);

        MatrixTuple X, H;
        X.n = H.n = n;
        for (int j = 0; j < g; ++j) {
            X.entries.push_back(Eigen::MatrixXd::Random(n, n));
            H.entries.push_back(Eigen::MatrixXd::Random(n, n));
        }
        auto remainder = [&](double t) {
            MatrixTuple Xt = X;
            for (int j = 0; j < g; ++j) Xt.entries[j] += t * H.entries[j];
            Eigen::MatrixXd lhs = eval(p, Xt);
            Eigen::MatrixXd rhs = eval(p, X) + t * eval(dp, X, H) +
                                  0.5 * t * t * eval(ddp, X, H);
            return (lhs - rhs).norm();
        };
        double e2 = remainder(1e-2);
        double e3 = remainder(1e-3);
        if (e3 < 1e-13) {
            CHECK(e2 < 1e-7);  // cubic-and-up terms happen to vanish here
        } else {
            CHECK(e2 / e3 > 100.0);  // third-order remainder scales like t^3
        }
        ++checked;
    }
    CHECK(checked > 5);
}

}  // TEST_SUITE
