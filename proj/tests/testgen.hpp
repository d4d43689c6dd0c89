/*
 * Deterministic random generators shared by the property and acceptance
 * suites. Everything is seeded explicitly so failures replay exactly.
 */
#pragma once

#include <random>
#include <vector>

#include "ncplush/freealg.hpp"

namespace ncplush::testgen {

enum class Alphabet {
    PlainX,     // x_j only
    AnyX,       // x_j and x_j'
    Everything  // x_j, x_j', h_j, h_j'
};

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        return static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)) + lo;
    }

    bool flip() { return (rng_() & 1) != 0; }

    Rational coefficient() {
        static const int nums[] = {1, -1, 2, -2, 3, -3, 5, -5, 1, 1};
        static const int dens[] = {1, 1, 1, 2, 2, 3, 1, 1, 4, 1};
        int i = uniform(0, 9);
        return rat(nums[i], dens[i]);
    }

    Letter letter(int g, Alphabet a) {
        int idx = uniform(1, g);
        switch (a) {
            case Alphabet::PlainX:
                return x(idx);
            case Alphabet::AnyX:
                return flip() ? x(idx) : xt(idx);
            case Alphabet::Everything:
            default: {
                int k = uniform(0, 3);
                if (k == 0) return x(idx);
                if (k == 1) return xt(idx);
                if (k == 2) return h(idx);
                return ht(idx);
            }
        }
    }

    Word word(int g, int length, Alphabet a) {
        std::vector<Letter> ls;
        ls.reserve(static_cast<std::size_t>(length));
        for (int i = 0; i < length; ++i) ls.push_back(letter(g, a));
        return Word(std::move(ls));
    }

    Polynomial polynomial(int g, int max_deg, int max_terms, Alphabet a,
                          bool allow_constant = true) {
        Polynomial p(g);
        int terms = uniform(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            int lo = allow_constant ? 0 : 1;
            int len = uniform(lo, max_deg);
            p = p + Polynomial::monomial(coefficient(), word(g, len, a), g);
        }
        return p;
    }

    // Nonzero analytic polynomial in the base variables with no constant term.
    Polynomial analytic_no_constant(int g, int max_deg, int max_terms) {
        for (;;) {
            Polynomial p = polynomial(g, max_deg, max_terms, Alphabet::PlainX,
                                      /*allow_constant=*/false);
            if (!p.is_zero()) return p;
        }
    }

    // Symmetric combination sum d_j f_j^T f_j + sum e_j k_j k_j^T + F + F^T.
    Polynomial plush_instance(int g, int squares_per_side, int max_deg,
                              std::vector<Polynomial>* fs = nullptr,
                              std::vector<Polynomial>* ks = nullptr) {
        Polynomial p(g);
        int nf = uniform(0, squares_per_side);
        int nk = uniform(0, squares_per_side);
        if (nf == 0 && nk == 0) nf = 1;
        for (int i = 0; i < nf; ++i) {
            Polynomial f = analytic_no_constant(g, max_deg, 3);
            if (fs) fs->push_back(f);
            p = p + f.transpose() * f;
        }
        for (int i = 0; i < nk; ++i) {
            Polynomial k = analytic_no_constant(g, max_deg, 3);
            if (ks) ks->push_back(k);
            p = p + k * k.transpose();
        }
        Polynomial F = polynomial(g, max_deg, 3, Alphabet::PlainX);
        return p + F + F.transpose();
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace ncplush::testgen
