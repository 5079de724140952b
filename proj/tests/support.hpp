#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "egth/model.hpp"

namespace egth::test {

inline DenseMatrix<double> make_matrix(std::initializer_list<std::initializer_list<double>> rows) {
    const Index n = static_cast<Index>(rows.size());
    DenseMatrix<double> m(n, static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

inline DenseVector<double> make_vector(std::initializer_list<double> vals) {
    DenseVector<double> v(static_cast<Index>(vals.size()));
    Index i = 0;
    for (double x : vals) v(i++) = x;
    return v;
}

inline MarkovRenewalProcess<double> chain_of(const DenseMatrix<double>& p) {
    return MarkovRenewalProcess<double>::chain(StochasticMatrix<double>::validate(p));
}

inline MarkovRenewalProcess<double> mrp_of(const DenseMatrix<double>& p,
                                           const DenseVector<double>& mu) {
    return MarkovRenewalProcess<double>::with_holding_times(StochasticMatrix<double>::validate(p),
                                                            mu);
}

/// Random irreducible row-stochastic matrix. A ring i -> i+1 is always
/// present, which keeps the positivity pattern strongly connected at any
/// density.
inline DenseMatrix<double> random_stochastic(std::mt19937_64& rng, Index n, double density = 1.0) {
    std::uniform_real_distribution<double> weight(0.05, 1.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    DenseMatrix<double> p(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) p(i, j) = coin(rng) < density ? weight(rng) : 0.0;
    for (Index i = 0; i < n; ++i) {
        const Index j = (i + 1) % n;
        if (p(i, j) == 0.0) p(i, j) = weight(rng);
    }
    for (Index i = 0; i < n; ++i) {
        double sum = 0.0;
        for (Index j = 0; j < n; ++j) sum += p(i, j);
        for (Index j = 0; j < n; ++j) p(i, j) /= sum;
    }
    return p;
}

inline DenseVector<double> random_mu(std::mt19937_64& rng, Index n, double lo = 0.1,
                                     double hi = 10.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    DenseVector<double> mu(n);
    for (Index i = 0; i < n; ++i) mu(i) = u(rng);
    return mu;
}

// ---------------------------------------------------------------------------
// Dense linear-solve oracle, independent of every state-reduction code path.
// ---------------------------------------------------------------------------

/// pi from the full linear system: (I - P)^T pi = 0 with the last equation
/// replaced by sum(pi) = 1, solved by LU with full pivoting.
inline DenseVector<double> oracle_stationary(const DenseMatrix<double>& p) {
    const Index n = p.rows();
    DenseMatrix<double> a =
        (DenseMatrix<double>::Identity(n, n) - p).transpose();
    a.row(n - 1).setOnes();
    DenseVector<double> b = DenseVector<double>::Zero(n);
    b(n - 1) = 1.0;
    return a.fullPivLu().solve(b);
}

/// M from one dense solve per target: delete row/column j from I - P and
/// solve against the remaining holding times; the diagonal is
/// lambda_1 / pi_j with both factors from the stationary oracle.
inline DenseMatrix<double> oracle_mfpt(const DenseMatrix<double>& p, const DenseVector<double>& mu) {
    const Index n = p.rows();
    const DenseVector<double> pi = oracle_stationary(p);
    const double lambda1 = pi.dot(mu);
    DenseMatrix<double> m(n, n);
    for (Index j = 0; j < n; ++j) {
        DenseMatrix<double> a(n - 1, n - 1);
        DenseVector<double> b(n - 1);
        for (Index i = 0, r = 0; i < n; ++i) {
            if (i == j) continue;
            b(r) = mu(i);
            for (Index k = 0, c = 0; k < n; ++k) {
                if (k == j) continue;
                a(r, c) = (i == k ? 1.0 : 0.0) - p(i, k);
                ++c;
            }
            ++r;
        }
        const DenseVector<double> x = a.fullPivLu().solve(b);
        for (Index i = 0, r = 0; i < n; ++i) {
            if (i == j) continue;
            m(i, j) = x(r++);
        }
        m(j, j) = lambda1 / pi(j);
    }
    return m;
}

/// Worst absolute violation of m(i,j) = mu_i + sum_{k != j} p(i,k) m(k,j).
inline double eq30_max_violation(const DenseMatrix<double>& m, const DenseMatrix<double>& p,
                                 const DenseVector<double>& mu) {
    const Index n = p.rows();
    double worst = 0.0;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            double acc = 0.0;
            for (Index k = 0; k < n; ++k)
                if (k != j) acc += p(i, k) * m(k, j);
            worst = std::max(worst, std::abs(m(i, j) - acc - mu(i)));
        }
    return worst;
}

inline double max_rel_diff(const DenseMatrix<double>& a, const DenseMatrix<double>& b) {
    double worst = 0.0;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) {
            const double scale = std::max({std::abs(a(i, j)), std::abs(b(i, j)), 1e-300});
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)) / scale);
        }
    return worst;
}

inline double max_rel_diff(const DenseVector<double>& a, const DenseVector<double>& b) {
    double worst = 0.0;
    for (Index i = 0; i < a.size(); ++i) {
        const double scale = std::max({std::abs(a(i)), std::abs(b(i)), 1e-300});
        worst = std::max(worst, std::abs(a(i) - b(i)) / scale);
    }
    return worst;
}

inline double max_abs_diff(const DenseVector<double>& a, const DenseVector<double>& b) {
    double worst = 0.0;
    for (Index i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a(i) - b(i)));
    return worst;
}

}  // namespace egth::test
