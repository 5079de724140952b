#pragma once

#include <utility>
#include <vector>

#include "egth/gth.hpp"

namespace egth {

/// Elimination ladder for the passage times into the last state of an
/// n-state process. Starting from the leading (n-1)x(n-1) block of the
/// transition matrix and the first n-1 holding times, states n-1, n-2, ...
/// are folded away with pivots R(t) = 1 - q(t,t). Unlike S(n) in the
/// censoring recursion, the pivot has no subtraction-free form here, so this
/// route loses accuracy on near-reducible chains; it exists as an
/// independent cross-check of the rotation-based computation.
///
/// Storage uses the in-place property: after the full ladder, entry (i,k)
/// holds its level-max(i,k) value, so row i is exactly the level-i row that
/// the back-substitution needs, and v(i) is the level-i value.
template <class Scalar>
class QvLadder {
public:
    /// Builds the ladder for an n-state level matrix and holding times.
    /// Pivots within machine-epsilon * n of zero are recorded as warnings;
    /// nonpositive pivots throw SingularPivot.
    static QvLadder build(const DenseMatrix<Scalar>& p, const DenseVector<Scalar>& mu) {
        const Index n = p.rows();
        if (n < 2) throw DimensionMismatch("ladder needs at least 2 states");
        if (p.cols() != n || mu.size() != n)
            throw DimensionMismatch("level matrix and holding times disagree");

        QvLadder ladder;
        ladder.n_ = n;
        ladder.q_ = p.topLeftCorner(n - 1, n - 1);
        ladder.v_ = mu.head(n - 1);
        ladder.r_ = DenseVector<Scalar>(n - 1);

        const Scalar tiny = detail::ScalarTraits<Scalar>::epsilon() * Scalar(static_cast<double>(n));
        for (Index t = n - 1; t >= 1; --t) {
            const Scalar r = Scalar(1) - ladder.q_(t - 1, t - 1);
            if (!(r > Scalar(0))) throw SingularPivot(t);
            if (r < tiny) ladder.warnings_.push_back(t);
            ladder.r_(t - 1) = r;
            for (Index i = 0; i < t - 1; ++i) {
                for (Index k = 0; k < t - 1; ++k)
                    ladder.q_(i, k) = ladder.q_(i, k) + ladder.q_(i, t - 1) * ladder.q_(t - 1, k) / r;
                ladder.v_(i) = ladder.v_(i) + ladder.q_(i, t - 1) * ladder.v_(t - 1) / r;
            }
        }
        return ladder;
    }

    Index target() const { return n_; }

    /// q(i,k) at level i, for k = 1..i (1-based arguments).
    Scalar q(Index i, Index k) const { return q_(i - 1, k - 1); }
    /// v(i) at level i.
    Scalar v(Index i) const { return v_(i - 1); }
    /// R(i) = 1 - q(i,i) at level i, i = 1..n-1.
    Scalar r(Index i) const { return r_(i - 1); }
    const DenseVector<Scalar>& r_values() const { return r_; }
    /// Elimination steps whose pivot was positive but below machine-epsilon * n.
    const std::vector<Index>& warnings() const { return warnings_; }

private:
    QvLadder() = default;
    Index n_ = 0;
    DenseMatrix<Scalar> q_;
    DenseVector<Scalar> v_;
    DenseVector<Scalar> r_;
    std::vector<Index> warnings_;
};

template <class Scalar>
QvLadder<Scalar> build_ladder(const DenseMatrix<Scalar>& p, const DenseVector<Scalar>& mu) {
    return QvLadder<Scalar>::build(p, mu);
}

/// Back-substitution up the ladder: passage times from states 1..n-1 into
/// state n,
///   m(1,n) = v(1) / R(1),
///   m(i,n) = (v(i) + sum_{k<i} q(i,k) m(k,n)) / R(i).
template <class Scalar>
DenseVector<Scalar> column_into_n(const QvLadder<Scalar>& ladder) {
    const Index n = ladder.target();
    DenseVector<Scalar> m(n - 1);
    m(0) = ladder.v(1) / ladder.r(1);
    for (Index i = 2; i <= n - 1; ++i) {
        Scalar acc = Scalar(0);
        for (Index k = 1; k <= i - 1; ++k) acc = acc + ladder.q(i, k) * m(k - 1);
        m(i - 1) = (ladder.v(i) + acc) / ladder.r(i);
    }
    return m;
}

/// Full passage time matrix assembled by target state: the column into
/// state n comes from one ladder per n, the row out of state n from the
/// censoring trace, and the diagonal closes each block,
///   m(n,j) = (mu_n + sum_{k<n, k!=j} p(n,k) m(k,j)) / S(n)   (row, level-n data)
///   m(n,n) = mu_n + sum_{k<n} p(n,k) m(k,n).
/// One ladder is rebuilt per target from that target's level matrix; the
/// truncations differ per level, so nothing can be reused across targets.
template <class Scalar>
MfptMatrix<Scalar> theorem7_mfpt(const MarkovRenewalProcess<Scalar>& mrp) {
    const Index n = mrp.size();

    // Level snapshots: full transition matrix and holding times at n..1.
    std::vector<DenseMatrix<Scalar>> p_lvl(static_cast<size_t>(n + 1));
    std::vector<DenseVector<Scalar>> mu_lvl(static_cast<size_t>(n + 1));
    std::vector<Scalar> s_lvl(static_cast<size_t>(n + 1), Scalar(0));
    p_lvl[static_cast<size_t>(n)] = mrp.p().matrix();
    mu_lvl[static_cast<size_t>(n)] = mrp.mu();
    for (Index lvl = n; lvl >= 2; --lvl) {
        CensorResult<Scalar> step =
            censor_step(p_lvl[static_cast<size_t>(lvl)], mu_lvl[static_cast<size_t>(lvl)]);
        s_lvl[static_cast<size_t>(lvl)] = step.boundary.s;
        p_lvl[static_cast<size_t>(lvl - 1)] = std::move(step.p);
        mu_lvl[static_cast<size_t>(lvl - 1)] = std::move(step.mu);
    }

    DenseMatrix<Scalar> m(n, n);
    m(0, 0) = mu_lvl[1](0);
    for (Index lvl = 2; lvl <= n; ++lvl) {
        const DenseMatrix<Scalar>& p = p_lvl[static_cast<size_t>(lvl)];
        const DenseVector<Scalar>& mu = mu_lvl[static_cast<size_t>(lvl)];
        const Scalar s = s_lvl[static_cast<size_t>(lvl)];

        // column into state lvl
        const DenseVector<Scalar> col = column_into_n(build_ladder(p, mu));
        for (Index i = 1; i <= lvl - 1; ++i) m(i - 1, lvl - 1) = col(i - 1);

        // row out of state lvl
        for (Index j = 1; j <= lvl - 1; ++j) {
            Scalar acc = Scalar(0);
            for (Index k = 1; k <= lvl - 1; ++k)
                if (k != j) acc = acc + p(lvl - 1, k - 1) * m(k - 1, j - 1);
            m(lvl - 1, j - 1) = (mu(lvl - 1) + acc) / s;
        }

        // mean recurrence time of state lvl
        Scalar acc = Scalar(0);
        for (Index k = 1; k <= lvl - 1; ++k) acc = acc + p(lvl - 1, k - 1) * m(k - 1, lvl - 1);
        m(lvl - 1, lvl - 1) = mu(lvl - 1) + acc;
    }
    return MfptMatrix<Scalar>::from(std::move(m));
}

}  // namespace egth
