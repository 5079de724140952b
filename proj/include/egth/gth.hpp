#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "egth/model.hpp"

namespace egth {

/// Per-level boundary data retained while censoring states N, N-1, ..., 2.
/// At level n the chain has states 1..n; boundary_row holds p(n,j) for
/// j = 1..n-1 (the full last row, which the passage-time recursions need),
/// boundary_col holds p(i,n) for i = 1..n-1, and s = sum of boundary_row.
template <class Scalar>
struct ReductionLevel {
    DenseVector<Scalar> boundary_row;
    DenseVector<Scalar> boundary_col;
    Scalar s;
};

/// Complete trace of a reduction run: boundary data for levels N..2, the
/// reduced holding-time vector at every level N..1, and the full 2x2
/// level-2 matrix.
template <class Scalar>
class ReductionTrace {
public:
    ReductionTrace(Index n, std::vector<ReductionLevel<Scalar>> levels,
                   std::vector<DenseVector<Scalar>> mu, DenseMatrix<Scalar> level2)
        : n_(n), levels_(std::move(levels)), mu_(std::move(mu)), level2_(std::move(level2)) {}

    Index size() const { return n_; }

    /// S(n), valid for 2 <= n <= N.
    Scalar s(Index n) const { return level(n).s; }
    const DenseVector<Scalar>& boundary_row(Index n) const { return level(n).boundary_row; }
    const DenseVector<Scalar>& boundary_col(Index n) const { return level(n).boundary_col; }

    /// Holding times at level n (length n), valid for 1 <= n <= N.
    const DenseVector<Scalar>& mu(Index n) const {
        if (n < 1 || n > n_) throw DimensionMismatch("no holding times at level " + std::to_string(n));
        return mu_[static_cast<size_t>(n - 1)];
    }

    /// The full level-2 transition matrix (empty for a 1-state chain).
    const DenseMatrix<Scalar>& level2() const { return level2_; }

private:
    const ReductionLevel<Scalar>& level(Index n) const {
        if (n < 2 || n > n_) throw DimensionMismatch("no reduction level " + std::to_string(n));
        return levels_[static_cast<size_t>(n - 2)];
    }

    Index n_;
    std::vector<ReductionLevel<Scalar>> levels_;  // levels_[k] is level n = k + 2
    std::vector<DenseVector<Scalar>> mu_;         // mu_[k] is level n = k + 1
    DenseMatrix<Scalar> level2_;
};

template <class Scalar>
struct CensorResult {
    DenseMatrix<Scalar> p;   // censored chain on states 1..n-1
    DenseVector<Scalar> mu;  // reduced holding times
    ReductionLevel<Scalar> boundary;
};

/// One censoring step: watch the chain only on states 1..n-1. The update
///   p'(i,j) = p(i,j) + p(i,n) p(n,j) / S(n),  mu'(i) = mu(i) + mu(n) p(i,n) / S(n)
/// uses only additions, multiplications and divisions. S(n) is always the
/// explicit sum of the last row, never 1 - p(n,n).
template <class Scalar>
CensorResult<Scalar> censor_step(const DenseMatrix<Scalar>& p, const DenseVector<Scalar>& mu) {
    const Index n = p.rows();
    if (n < 2) throw DimensionMismatch("cannot censor a chain with fewer than 2 states");

    Scalar s = Scalar(0);
    for (Index j = 0; j < n - 1; ++j) s = s + p(n - 1, j);
    if (!(s > Scalar(0))) throw AbsorbingLastState(n);

    DenseMatrix<Scalar> out(n - 1, n - 1);
    DenseVector<Scalar> mu_out(n - 1);
    for (Index i = 0; i < n - 1; ++i) {
        for (Index j = 0; j < n - 1; ++j)
            out(i, j) = p(i, j) + p(i, n - 1) * p(n - 1, j) / s;
        mu_out(i) = mu(i) + mu(n - 1) * p(i, n - 1) / s;
    }

    ReductionLevel<Scalar> boundary{p.row(n - 1).head(n - 1).transpose(),
                                    p.col(n - 1).head(n - 1), s};
    return CensorResult<Scalar>{std::move(out), std::move(mu_out), std::move(boundary)};
}

namespace detail {

/// In-place reduction over a working copy. After eliminating states
/// N, N-1, ..., down to level 2, entry (i,j) of the workspace holds the
/// level-max(i,j) value, so each boundary row/column can be read off just
/// before its own elimination step.
template <class Scalar>
ReductionTrace<Scalar> reduce_levels(DenseMatrix<Scalar> pp, DenseVector<Scalar> mu) {
    const Index n = pp.rows();
    std::vector<ReductionLevel<Scalar>> levels;
    levels.reserve(static_cast<size_t>(n > 1 ? n - 1 : 0));
    std::vector<DenseVector<Scalar>> mus(static_cast<size_t>(n));
    mus[static_cast<size_t>(n - 1)] = mu;
    DenseMatrix<Scalar> level2;

    for (Index lvl = n; lvl >= 2; --lvl) {
        if (lvl == 2) level2 = pp.topLeftCorner(2, 2);

        Scalar s = Scalar(0);
        for (Index j = 0; j < lvl - 1; ++j) s = s + pp(lvl - 1, j);
        if (!(s > Scalar(0))) throw AbsorbingLastState(lvl);

        ReductionLevel<Scalar> level{pp.row(lvl - 1).head(lvl - 1).transpose(),
                                     pp.col(lvl - 1).head(lvl - 1), s};
        DenseVector<Scalar> next(lvl - 1);
        for (Index i = 0; i < lvl - 1; ++i) {
            for (Index j = 0; j < lvl - 1; ++j)
                pp(i, j) = pp(i, j) + pp(i, lvl - 1) * pp(lvl - 1, j) / s;
            next(i) = mu(i) + mu(lvl - 1) * pp(i, lvl - 1) / s;
        }
        mu = std::move(next);
        mus[static_cast<size_t>(lvl - 2)] = mu;
        levels.push_back(std::move(level));
    }
    std::reverse(levels.begin(), levels.end());  // store as level 2 first
    return ReductionTrace<Scalar>(n, std::move(levels), std::move(mus), std::move(level2));
}

}  // namespace detail

/// Runs the censoring recursion for levels N down to 2 and keeps the
/// boundary data and per-level holding times.
template <class Scalar>
ReductionTrace<Scalar> reduce_fully(const MarkovRenewalProcess<Scalar>& mrp) {
    return detail::reduce_levels(mrp.p().matrix(), mrp.mu());
}

namespace detail {

template <class Scalar>
DenseVector<Scalar> accumulation_vector(const ReductionTrace<Scalar>& trace, Index upto) {
    DenseVector<Scalar> r(upto);
    r(0) = Scalar(1);
    for (Index n = 2; n <= upto; ++n) {
        const auto& col = trace.boundary_col(n);
        Scalar acc = Scalar(0);
        for (Index i = 0; i < n - 1; ++i) acc = acc + r(i) * col(i);
        r(n - 1) = acc / trace.s(n);
    }
    return r;
}

template <class Scalar>
StationaryDistribution<Scalar> normalize(const DenseVector<Scalar>& r) {
    Scalar total = Scalar(0);
    for (Index i = 0; i < r.size(); ++i) total = total + r(i);
    DenseVector<Scalar> pi(r.size());
    for (Index i = 0; i < r.size(); ++i) pi(i) = r(i) / total;
    return StationaryDistribution<Scalar>::from(std::move(pi));
}

}  // namespace detail

/// Stationary distribution by state reduction: r_1 = 1,
/// r_n = (sum_{i<n} r_i p(i,n at level n)) / S(n), then pi_i = r_i / sum r.
/// No subtraction is performed anywhere on the computation path.
template <class Scalar>
StationaryDistribution<Scalar> stationary_gth(const StochasticMatrix<Scalar>& p) {
    const ReductionTrace<Scalar> trace =
        reduce_fully(MarkovRenewalProcess<Scalar>::chain(p));
    return detail::normalize(detail::accumulation_vector(trace, trace.size()));
}

/// Stationary distribution of the censored chain on states 1..n: a
/// rescaling of the first n components of the full chain's distribution.
template <class Scalar>
StationaryDistribution<Scalar> reduced_stationary(const ReductionTrace<Scalar>& trace, Index n) {
    if (n < 1 || n > trace.size())
        throw DimensionMismatch("level " + std::to_string(n) + " outside 1.." +
                                std::to_string(trace.size()));
    return detail::normalize(detail::accumulation_vector(trace, n));
}

}  // namespace egth
