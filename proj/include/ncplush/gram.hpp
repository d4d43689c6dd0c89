/*
 * gram.hpp
 * --------
 * Exact Gram representation of the hereditary / antihereditary parts of a
 * candidate hessian, and a rational LDL^T positive-semidefiniteness test
 * with pivoting.
 *
 * A hereditary word factors uniquely as (transposed block)(plain block);
 * the border vector collects the plain analytic factors, so the Gram
 * matrix is determined entry by entry and no semidefinite search is
 * needed.
 */
#pragma once

#include <optional>
#include <vector>

#include "ncplush/freealg.hpp"

namespace ncplush {

enum class GramSide { Hereditary, Antihereditary };

using RationalMatrix = std::vector<std::vector<Rational>>;

struct GramForm {
    // Analytic words with exactly one plain direction letter, in the fixed
    // word order.
    std::vector<Word> border;
    // Symmetric rational matrix; the hereditary side reconstructs as
    // sum G[a][b] * border[a]^T * border[b], the antihereditary side as
    // sum G[a][b] * border[a] * border[b]^T.
    RationalMatrix matrix;
    GramSide side;
    int context = 0;
};

struct HessianSplit {
    Polynomial hereditary;      // words beginning with a transposed letter
    Polynomial antihereditary;  // words beginning with a plain letter
};

// Partition of a candidate-hessian polynomial. Requires each word to carry
// exactly one h and one h' letter; throws std::invalid_argument otherwise.
HessianSplit split_hessian(const Polynomial& q);

struct GramBuild {
    bool ok = false;
    GramForm form;
    // Word that fails the (transposed block)(plain block) factorization;
    // these are exactly the terms no sum of analytic/antianalytic squares
    // can produce.
    std::optional<Word> witness;

    explicit operator bool() const { return ok; }
};

GramBuild build_gram(const Polynomial& part, GramSide side);

struct PsdFactorization {
    std::vector<Rational> pivots;       // positive, one per factor row
    // Factor rows over the original border indexing: row j has a unit entry
    // at permutation[j] and zeros at permutation[0..j-1]. The input matrix
    // reconstructs exactly as sum_j pivots[j] * rows[j]^T rows[j].
    std::vector<std::vector<Rational>> rows;
    std::vector<int> permutation;       // pivot order (original indices)
    int rank = 0;
};

struct PsdResult {
    bool psd = false;
    PsdFactorization factorization;
    // On failure: exact certificate with certificate^T G certificate < 0.
    std::vector<Rational> certificate;

    explicit operator bool() const { return psd; }
};

// Exact LDL^T with largest-diagonal pivoting. Decides positive
// semidefiniteness of the symmetric matrix and produces either the
// factorization or a negative-value certificate.
PsdResult psd_factor(const GramForm& gf);
PsdResult psd_factor_matrix(const RationalMatrix& g);

// Weighted-square expansion of a factorization against a border: returns
// sum_j pivots[j] * r_j^T r_j (hereditary) or sum_j pivots[j] * r_j r_j^T
// (antihereditary) with r_j = sum_a rows[j][a] * border[a].
Polynomial expand_factorization(const PsdFactorization& f, const GramForm& gf);

// The factor polynomials r_j themselves.
std::vector<Polynomial> factor_rows(const PsdFactorization& f, const GramForm& gf);

}  // namespace ncplush
