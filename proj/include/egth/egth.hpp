#pragma once

#include <utility>

#include "egth/gth.hpp"

namespace egth {

namespace detail {

/// One cyclic shift: row and column 1 move to position n. Pure data
/// movement, equivalent to conjugation by the cyclic permutation.
template <class Scalar>
DenseMatrix<Scalar> rotate_matrix(const DenseMatrix<Scalar>& p) {
    const Index n = p.rows();
    DenseMatrix<Scalar> out(n, n);
    for (Index col = 0; col < n; ++col)
        for (Index row = 0; row < n; ++row)
            out((row + n - 1) % n, (col + n - 1) % n) = p(row, col);
    return out;
}

template <class Scalar>
DenseVector<Scalar> rotate_vector(const DenseVector<Scalar>& v) {
    const Index n = v.size();
    DenseVector<Scalar> out(n);
    for (Index i = 0; i < n; ++i) out((i + n - 1) % n) = v(i);
    return out;
}

}  // namespace detail

/// Cyclic relabeling of an entire process: state k+1 becomes state k and
/// state 1 becomes state N, for both the transition matrix and the holding
/// times. Applying it N times restores the original bit-for-bit.
template <class Scalar>
MarkovRenewalProcess<Scalar> rotate(const MarkovRenewalProcess<Scalar>& mrp) {
    return MarkovRenewalProcess<Scalar>::with_holding_times(
        StochasticMatrix<Scalar>::adopt_unchecked(detail::rotate_matrix(mrp.p().matrix())),
        detail::rotate_vector(mrp.mu()));
}

/// The reduction trace of a process yields the first column of its passage
/// time matrix: m(1,1) is the mean recurrence time of state 1 and m(i,1) the
/// mean first passage time from state i into state 1,
///   m(1,1) = (p21 mu1 + p12 mu2) / S(2)   (level-2 data)
///   m(i,1) = (sum_{k=2..i-1} p(i,k at level i) m(k,1) + mu_i at level i) / S(i).
/// Only additions, multiplications and divisions are used.
template <class Scalar>
DenseVector<Scalar> first_column_mfpt(const ReductionTrace<Scalar>& trace) {
    const Index n = trace.size();
    DenseVector<Scalar> m(n);
    if (n == 1) {
        m(0) = trace.mu(1)(0);
        return m;
    }
    {
        const auto& mu2 = trace.mu(2);
        const Scalar p21 = trace.boundary_row(2)(0);
        const Scalar p12 = trace.boundary_col(2)(0);
        m(0) = (p21 * mu2(0) + p12 * mu2(1)) / trace.s(2);
    }
    for (Index lvl = 2; lvl <= n; ++lvl) {
        const auto& row = trace.boundary_row(lvl);
        Scalar acc = Scalar(0);
        for (Index k = 2; k <= lvl - 1; ++k) acc = acc + row(k - 1) * m(k - 1);
        m(lvl - 1) = (acc + trace.mu(lvl)(lvl - 1)) / trace.s(lvl);
    }
    return m;
}

/// Full mean first passage time matrix by running one reduction per cyclic
/// relabeling of the process: relabeling k puts state k first, its trace
/// yields column k, and the columns are mapped back to original labels.
/// The whole computation is subtraction-free. The per-column reductions are
/// independent of each other, so they may run in parallel; this
/// implementation runs them sequentially, which is bitwise equivalent.
template <class Scalar>
MfptMatrix<Scalar> mfpt_egth(const MarkovRenewalProcess<Scalar>& mrp) {
    const Index n = mrp.size();
    const bool chain = mrp.is_chain();
    DenseMatrix<Scalar> p = mrp.p().matrix();
    DenseVector<Scalar> mu = mrp.mu();

    DenseMatrix<Scalar> columns(n, n);
    for (Index k = 1; k <= n; ++k) {
        const ReductionTrace<Scalar> trace = detail::reduce_levels(p, mu);
        columns.col(k - 1) = first_column_mfpt(trace);
        if (k < n) {
            p = detail::rotate_matrix(p);
            if (!chain) mu = detail::rotate_vector(mu);
        }
    }

    // Column k of the rotated computation lists m(k,k), m(k+1,k), ..., m(k-1,k);
    // map entry (row, col) back to original row label (row + col - 2) mod n + 1.
    DenseMatrix<Scalar> m(n, n);
    for (Index col = 1; col <= n; ++col)
        for (Index row = 1; row <= n; ++row)
            m((row + col - 2) % n, col - 1) = columns(row - 1, col - 1);
    return MfptMatrix<Scalar>::from(std::move(m));
}

/// Stationary distribution read off the diagonal of a passage time matrix:
/// for a chain pi_i = 1 / m(i,i); for a general process the reciprocals are
/// normalized, which also recovers the mean asymptotic increment.
template <class Scalar>
StationaryDistribution<Scalar> stationary_from_mfpt(const MfptMatrix<Scalar>& m,
                                                    const MarkovRenewalProcess<Scalar>& mrp) {
    if (m.size() != mrp.size())
        throw DimensionMismatch("passage time matrix size " + std::to_string(m.size()) +
                                " does not match " + std::to_string(mrp.size()) + "-state process");
    const Index n = m.size();
    DenseVector<Scalar> w(n);
    for (Index i = 0; i < n; ++i) w(i) = Scalar(1) / m(i, i);
    if (mrp.is_chain())
        return StationaryDistribution<Scalar>::from(std::move(w));
    Scalar total = Scalar(0);
    for (Index i = 0; i < n; ++i) total = total + w(i);
    for (Index i = 0; i < n; ++i) w(i) = w(i) / total;
    return StationaryDistribution<Scalar>::from(std::move(w));
}

}  // namespace egth
