/*
 * plush.hpp
 * ---------
 * Top-level classification of nc plurisubharmonic symmetric polynomials:
 * decide whether p = sum d_j f_j^T f_j + sum e_j k_j k_j^T + F + F^T with
 * analytic f_j, k_j, F and positive rational weights, produce the
 * decomposition with minimal square counts, verify candidate
 * decompositions, and relate two decompositions by an exact isometry.
 *
 * Weights keep the arithmetic exact end to end; the unweighted form would
 * need square roots and is recovered numerically on export only.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncplush/freealg.hpp"
#include "ncplush/gram.hpp"

namespace ncplush {

struct WeightedSquare {
    Rational weight;     // positive
    Polynomial factor;   // analytic, no direction letters
};

struct PlushDecomposition {
    std::vector<WeightedSquare> hereditary_squares;      // sum w * f^T f
    std::vector<WeightedSquare> antihereditary_squares;  // sum w * k k^T
    Polynomial analytic_part;                            // F
    int n_min = 0;  // hereditary Gram rank
    int m_min = 0;  // antihereditary Gram rank

    int context() const { return analytic_part.context(); }
    // sum of weighted squares + F + F^T
    Polynomial expansion() const;
};

struct FailureWitness {
    enum class Stage { NotSymmetric, HessianNotSplitForm, GramNotPsd, ResidualMixed };

    Stage stage;
    std::optional<Word> word;            // offending monomial, when applicable
    std::optional<GramSide> side;        // which Gram failed, for GramNotPsd
    std::vector<Rational> certificate;   // v with v^T G v < 0, for GramNotPsd

    std::string describe() const;
};

struct PlushResult {
    bool plush = false;
    std::optional<PlushDecomposition> decomposition;
    std::optional<FailureWitness> witness;

    explicit operator bool() const { return plush; }
};

// Full decision pipeline: complex hessian, hereditary/antihereditary split,
// exact Gram build, rational PSD factorization, integration of the factor
// rows, and extraction of the analytic remainder. The input must be a
// polynomial in the base variables only (no direction letters).
PlushResult classify_plush(const Polynomial& p);

struct AnalyticExtract {
    bool ok = false;
    Polynomial F = Polynomial(0);
    std::optional<Word> witness;  // word mixing plain and transposed letters

    explicit operator bool() const { return ok; }
};

// Splits a symmetric polynomial with zero complex hessian as F + F^T where
// F collects the analytic words plus half the constant. Throws
// std::invalid_argument when the precondition fails.
AnalyticExtract extract_analytic_part(const Polynomial& residual);

// True when the expansion identity reproduces p exactly, all weights are
// positive and every factor and F is analytic with no direction letters.
bool verify_decomposition(const Polynomial& p, const PlushDecomposition& d);

/**
 * Exact relation between the factor stacks of two decompositions of the
 * same polynomial, in the weighted convention: with diagonal weight
 * matrices D_a, D_b the returned rational matrix U satisfies
 *
 *   stack_b = U * stack_a + constants   and   U^T D_b U = D_a,
 *
 * which is the isometry property in the weighted inner products. When
 * D_b^{1/2} U D_a^{-1/2} happens to be rational it is reported as
 * `unweighted` with unweighted^T unweighted = I.
 */
struct IsometryRelation {
    RationalMatrix matrix;                 // N_b x N_a
    std::vector<Rational> constants;       // length N_b
    std::vector<Rational> weights_from;    // a's weights (length N_a)
    std::vector<Rational> weights_to;      // b's weights (length N_b)
    std::optional<RationalMatrix> unweighted;
};

struct RelateResult {
    bool related = false;
    std::optional<IsometryRelation> hereditary;
    std::optional<IsometryRelation> antihereditary;
    std::string reason;  // on unrelated: the expansions differ

    explicit operator bool() const { return related; }
};

// Requires `a` minimal (as produced by classify_plush); throws
// std::invalid_argument when it is not. Returns unrelated only when the two
// expansions are different polynomials.
RelateResult relate_representations(const PlushDecomposition& a, const PlushDecomposition& b);

}  // namespace ncplush
