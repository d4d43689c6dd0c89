#include "ncplush/mateval.hpp"

#include <random>

namespace ncplush {

namespace {

void check_tuple(const Polynomial& p, const MatrixTuple& t, const char* name) {
    if (t.vars() != p.context())
        throw std::invalid_argument(std::string("ncplush: ") + name + " tuple has " +
                                    std::to_string(t.vars()) + " matrices, polynomial needs " +
                                    std::to_string(p.context()));
    for (const auto& m : t.entries)
        if (m.rows() != t.n || m.cols() != t.n)
            throw std::invalid_argument(std::string("ncplush: ") + name +
                                        " tuple has a matrix of the wrong size");
}

// Platform-independent uniform double on [-1, 1] from the raw 64-bit stream.
double uniform_pm1(std::mt19937_64& rng) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
    return 2.0 * u - 1.0;
}

MatrixTuple random_tuple(std::mt19937_64& rng, int g, int n) {
    MatrixTuple t;
    t.n = n;
    t.entries.reserve(static_cast<std::size_t>(g));
    for (int j = 0; j < g; ++j) {
        Eigen::MatrixXd m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = uniform_pm1(rng);
        t.entries.push_back(std::move(m));
    }
    return t;
}

}  // namespace

MatrixTuple MatrixTuple::zero(int g, int n) {
    MatrixTuple t;
    t.n = n;
    t.entries.assign(static_cast<std::size_t>(g), Eigen::MatrixXd::Zero(n, n));
    return t;
}

Eigen::MatrixXd eval(const Polynomial& p, const MatrixTuple& X,
                     const std::optional<MatrixTuple>& H) {
    check_tuple(p, X, "X");
    if (H) {
        check_tuple(p, *H, "H");
        if (H->n != X.n) throw std::invalid_argument("ncplush: X and H sizes differ");
    } else if (p.h_degree() > 0) {
        throw std::invalid_argument("ncplush: polynomial contains direction letters but no H "
                                    "tuple was supplied");
    }

    const int n = X.n;
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [w, c] : p.terms()) {
        Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(n, n);
        for (const Letter& l : w.letters()) {
            const MatrixTuple& tuple = (l.family == Family::X) ? X : *H;
            const Eigen::MatrixXd& m = tuple.entries[static_cast<std::size_t>(l.index - 1)];
            prod = l.transposed ? (prod * m.transpose()).eval() : (prod * m).eval();
        }
        acc += c.get_d() * prod;
    }
    return acc;
}

PositivityReport sample_positivity(const Polynomial& q, const SampleOptions& opts) {
    if (q.transpose() != q)
        throw std::invalid_argument("ncplush: sample_positivity requires a symmetric polynomial");
    if (opts.sizes.empty() || opts.trials < 1)
        throw std::invalid_argument("ncplush: sample_positivity needs sizes and trials");
    for (int n : opts.sizes)
        if (n < 1) throw std::invalid_argument("ncplush: matrix sizes must be >= 1");

    const bool needs_h = q.h_degree() > 0;
    std::mt19937_64 rng(opts.seed);
    PositivityReport report;
    report.samples = opts.trials;
    report.seed = opts.seed;
    bool first = true;

    for (int trial = 0; trial < opts.trials; ++trial) {
        const int n = opts.sizes[static_cast<std::size_t>(trial) % opts.sizes.size()];
        MatrixTuple X = random_tuple(rng, q.context(), n);
        MatrixTuple H = random_tuple(rng, q.context(), n);

        Eigen::MatrixXd m = eval(q, X, needs_h ? std::optional<MatrixTuple>(H) : std::nullopt);
        Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
        const double lo = solver.eigenvalues().minCoeff();

        if (first || lo < report.min_eigenvalue) {
            report.min_eigenvalue = lo;
            first = false;
        }
        if (!report.witness && lo < -opts.tolerance) {
            PositivityWitness w;
            w.X = std::move(X);
            w.H = std::move(H);
            w.eigenvalue = lo;
            w.trial = trial;
            w.size = n;
            report.witness = std::move(w);
        }
    }
    return report;
}

}  // namespace ncplush
