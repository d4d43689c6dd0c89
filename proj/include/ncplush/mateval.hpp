/*
 * mateval.hpp
 * -----------
 * Numerical matrix substitution and positivity sampling: evaluate
 * polynomials on tuples of square matrices, and search for negative
 * eigenvalues of symmetric evaluations over randomized tuples.
 *
 * This is the floating-point cross-check of the exact pipeline; exact
 * decisions live in gram/plush.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ncplush/freealg.hpp"

namespace ncplush {

struct MatrixTuple {
    int n = 0;                            // common matrix side
    std::vector<Eigen::MatrixXd> entries; // one square matrix per variable

    static MatrixTuple zero(int g, int n);
    int vars() const { return static_cast<int>(entries.size()); }
};

// Ring homomorphism into n x n matrices: x_j -> X_j, x_j' -> X_j^T,
// h_j -> H_j, h_j' -> H_j^T, constants -> c*I. H is required exactly when p
// contains direction letters.
Eigen::MatrixXd eval(const Polynomial& p, const MatrixTuple& X,
                     const std::optional<MatrixTuple>& H = std::nullopt);

struct PositivityWitness {
    MatrixTuple X;
    MatrixTuple H;
    double eigenvalue = 0.0;
    int trial = 0;
    int size = 0;
};

struct PositivityReport {
    int samples = 0;
    double min_eigenvalue = 0.0;
    std::optional<PositivityWitness> witness;  // present iff min < -tolerance
    std::uint64_t seed = 0;
};

struct SampleOptions {
    std::vector<int> sizes{1, 2, 3};
    int trials = 200;
    std::uint64_t seed = 42;
    double tolerance = 1e-9;
};

// Draws X, H with entries uniform on [-1, 1] (deterministic in the seed,
// independent of platform), symmetrizes the evaluation and records the
// minimum eigenvalue over all trials plus the first witness below
// -tolerance. Requires q symmetric.
PositivityReport sample_positivity(const Polynomial& q, const SampleOptions& opts = {});

}  // namespace ncplush
