#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "egth/counted.hpp"
#include "egth/errors.hpp"
#include "egth/types.hpp"

namespace egth {

namespace detail {
template <class Scalar>
struct ScalarTraits {
    static Scalar row_sum_tolerance() { return Scalar(1e-12); }
    static Scalar epsilon() { return std::numeric_limits<Scalar>::epsilon(); }
};
template <>
struct ScalarTraits<float> {
    static float row_sum_tolerance() { return 1e-5f; }
    static float epsilon() { return std::numeric_limits<float>::epsilon(); }
};
}  // namespace detail

template <class Scalar>
Scalar default_row_sum_tolerance() {
    return detail::ScalarTraits<Scalar>::row_sum_tolerance();
}

/// Dense row-stochastic transition matrix of an N-state chain. The stored
/// entries are bit-identical to the validated input: rows are never
/// renormalized, so the subtraction-free reductions see the raw data.
/// Matrix accessors are zero-based; state labels in errors and reports are
/// one-based.
template <class Scalar>
class StochasticMatrix {
public:
    static StochasticMatrix validate(DenseMatrix<Scalar> entries,
                                     Scalar tol = default_row_sum_tolerance<Scalar>()) {
        const Index n = entries.rows();
        if (n == 0 || entries.cols() != n) throw NotSquare(entries.rows(), entries.cols());
        for (Index i = 0; i < n; ++i) {
            Scalar sum = Scalar(0);
            for (Index j = 0; j < n; ++j) {
                if (!(entries(i, j) >= Scalar(0))) throw NegativeEntry(i + 1, j + 1);
                sum = sum + entries(i, j);
            }
            using std::abs;
            if (!(abs(sum - Scalar(1)) <= tol))
                throw RowSumOutOfTolerance(i + 1, to_double(sum));
        }
        return StochasticMatrix(std::move(entries));
    }

    /// Adopts entries without re-checking. Reserved for exact rearrangements
    /// of already-validated data (permutations, closed-class restrictions);
    /// performs no arithmetic.
    static StochasticMatrix adopt_unchecked(DenseMatrix<Scalar> entries) {
        return StochasticMatrix(std::move(entries));
    }

    Index size() const { return p_.rows(); }
    const DenseMatrix<Scalar>& matrix() const { return p_; }
    Scalar operator()(Index i, Index j) const { return p_(i, j); }

    template <class Other>
    StochasticMatrix<Other> cast() const {
        return StochasticMatrix<Other>::adopt_unchecked(
            p_.template cast<Other>());
    }

private:
    explicit StochasticMatrix(DenseMatrix<Scalar> m) : p_(std::move(m)) {}
    DenseMatrix<Scalar> p_;
};

template <class Scalar>
StochasticMatrix<Scalar> validate_stochastic(DenseMatrix<Scalar> entries,
                                             Scalar tol = default_row_sum_tolerance<Scalar>()) {
    return StochasticMatrix<Scalar>::validate(std::move(entries), tol);
}

/// An embedded chain together with the mean holding time of each state.
/// A Markov chain is the special case mu = all ones.
template <class Scalar>
class MarkovRenewalProcess {
public:
    static MarkovRenewalProcess with_holding_times(StochasticMatrix<Scalar> p,
                                                   DenseVector<Scalar> mu) {
        if (mu.size() != p.size())
            throw DimensionMismatch("holding-time vector has " + std::to_string(mu.size()) +
                                    " entries for a " + std::to_string(p.size()) +
                                    "-state chain");
        for (Index i = 0; i < mu.size(); ++i) {
            using std::isfinite;
            if (!(mu(i) > Scalar(0)) || !isfinite(mu(i)))
                throw ValidationError("holding time for state " + std::to_string(i + 1) +
                                      " must be positive and finite");
        }
        return MarkovRenewalProcess(std::move(p), std::move(mu));
    }

    static MarkovRenewalProcess chain(StochasticMatrix<Scalar> p) {
        DenseVector<Scalar> mu = DenseVector<Scalar>::Constant(p.size(), Scalar(1));
        return MarkovRenewalProcess(std::move(p), std::move(mu));
    }

    Index size() const { return p_.size(); }
    const StochasticMatrix<Scalar>& p() const { return p_; }
    const DenseVector<Scalar>& mu() const { return mu_; }

    bool is_chain() const {
        for (Index i = 0; i < mu_.size(); ++i)
            if (!(mu_(i) == Scalar(1))) return false;
        return true;
    }

    template <class Other>
    MarkovRenewalProcess<Other> cast() const {
        return MarkovRenewalProcess<Other>(p_.template cast<Other>(),
                                           mu_.template cast<Other>());
    }

private:
    MarkovRenewalProcess(StochasticMatrix<Scalar> p, DenseVector<Scalar> mu)
        : p_(std::move(p)), mu_(std::move(mu)) {}
    template <class>
    friend class MarkovRenewalProcess;

    StochasticMatrix<Scalar> p_;
    DenseVector<Scalar> mu_;
};

/// pi with pi^T = pi^T P. Entries are strictly positive and sum to 1 within
/// 4 ulp of the active precision. The factory checks tolerances additively
/// so that construction inside the reduction algorithms stays
/// subtraction-free.
template <class Scalar>
class StationaryDistribution {
public:
    static StationaryDistribution from(DenseVector<Scalar> pi) {
        return checked(std::move(pi), Scalar(4) * detail::ScalarTraits<Scalar>::epsilon());
    }

    /// For vectors from rounded external sources (reference data printed to
    /// a finite number of digits) whose sum deviation exceeds 4 ulp.
    static StationaryDistribution from_reference(DenseVector<Scalar> pi, Scalar sum_slack) {
        return checked(std::move(pi), sum_slack);
    }

    Index size() const { return pi_.size(); }
    const DenseVector<Scalar>& vector() const { return pi_; }
    Scalar operator()(Index i) const { return pi_(i); }

    template <class Other>
    StationaryDistribution<Other> cast() const {
        return StationaryDistribution<Other>(pi_.template cast<Other>());
    }

private:
    static StationaryDistribution checked(DenseVector<Scalar> pi, Scalar slack) {
        Scalar sum = Scalar(0);
        for (Index i = 0; i < pi.size(); ++i) {
            if (!(pi(i) > Scalar(0)))
                throw AlgorithmError("stationary probability of state " + std::to_string(i + 1) +
                                     " is not positive");
            sum = sum + pi(i);
        }
        if (!(sum <= Scalar(1) + slack) || !(sum + slack >= Scalar(1)))
            throw AlgorithmError("stationary vector sums to " + std::to_string(to_double(sum)) +
                                 " outside the allowed deviation from 1");
        return StationaryDistribution(std::move(pi));
    }

    explicit StationaryDistribution(DenseVector<Scalar> pi) : pi_(std::move(pi)) {}
    template <class>
    friend class StationaryDistribution;

    DenseVector<Scalar> pi_;
};

/// Mean first passage time matrix; m(i,j) is the expected time to first
/// reach state j from state i, and the diagonal holds mean recurrence times.
template <class Scalar>
class MfptMatrix {
public:
    static MfptMatrix from(DenseMatrix<Scalar> m) {
        for (Index i = 0; i < m.rows(); ++i)
            for (Index j = 0; j < m.cols(); ++j) {
                using std::isfinite;
                if (!(m(i, j) > Scalar(0)) || !isfinite(m(i, j)))
                    throw AlgorithmError("mean first passage time (" + std::to_string(i + 1) +
                                         "," + std::to_string(j + 1) +
                                         ") is not positive and finite");
            }
        return MfptMatrix(std::move(m));
    }

    Index size() const { return m_.rows(); }
    const DenseMatrix<Scalar>& matrix() const { return m_; }
    Scalar operator()(Index i, Index j) const { return m_(i, j); }

    template <class Other>
    MfptMatrix<Other> cast() const {
        return MfptMatrix<Other>(m_.template cast<Other>());
    }

private:
    explicit MfptMatrix(DenseMatrix<Scalar> m) : m_(std::move(m)) {}
    template <class>
    friend class MfptMatrix;

    DenseMatrix<Scalar> m_;
};

/// True iff the positivity pattern of p is strongly connected. Structural
/// check only; no floating-point arithmetic.
template <class Scalar>
bool check_irreducible(const StochasticMatrix<Scalar>& p) {
    const Index n = p.size();
    auto reach_all = [&](bool forward) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::vector<Index> stack{0};
        seen[0] = 1;
        Index count = 1;
        while (!stack.empty()) {
            const Index u = stack.back();
            stack.pop_back();
            for (Index v = 0; v < n; ++v) {
                const bool edge = forward ? p(u, v) > Scalar(0) : p(v, u) > Scalar(0);
                if (edge && !seen[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        return count == n;
    };
    return reach_all(true) && reach_all(false);
}

template <class Scalar>
struct RecurrentClass {
    StochasticMatrix<Scalar> p;
    std::vector<Index> original_states;  // 1-based labels, ascending
};

/// Restriction of p to its unique closed communicating class, with the
/// 1-based original-state labels. Restricting to a closed class preserves
/// row sums exactly, so no revalidation is needed.
template <class Scalar>
RecurrentClass<Scalar> recurrent_class(const StochasticMatrix<Scalar>& p) {
    const Index n = p.size();

    // Strongly connected components by repeated forward/backward reachability.
    std::vector<Index> comp(static_cast<size_t>(n), -1);
    Index ncomp = 0;
    auto reachable = [&](Index src, bool forward) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::vector<Index> stack{src};
        seen[static_cast<size_t>(src)] = 1;
        while (!stack.empty()) {
            const Index u = stack.back();
            stack.pop_back();
            for (Index v = 0; v < n; ++v) {
                const bool edge = forward ? p(u, v) > Scalar(0) : p(v, u) > Scalar(0);
                if (edge && !seen[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    stack.push_back(v);
                }
            }
        }
        return seen;
    };
    for (Index s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        const auto fwd = reachable(s, true);
        const auto bwd = reachable(s, false);
        for (Index v = 0; v < n; ++v)
            if (fwd[static_cast<size_t>(v)] && bwd[static_cast<size_t>(v)])
                comp[static_cast<size_t>(v)] = ncomp;
        ++ncomp;
    }

    // A component is closed when no positive edge leaves it.
    std::vector<char> closed(static_cast<size_t>(ncomp), 1);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (p(i, j) > Scalar(0) && comp[static_cast<size_t>(i)] != comp[static_cast<size_t>(j)])
                closed[static_cast<size_t>(comp[static_cast<size_t>(i)])] = 0;

    Index nclosed = 0;
    Index the_class = -1;
    for (Index c = 0; c < ncomp; ++c)
        if (closed[static_cast<size_t>(c)]) {
            ++nclosed;
            the_class = c;
        }
    if (nclosed != 1) throw MultipleClosedClasses(nclosed);

    std::vector<Index> states;
    for (Index i = 0; i < n; ++i)
        if (comp[static_cast<size_t>(i)] == the_class) states.push_back(i);

    const Index m = static_cast<Index>(states.size());
    DenseMatrix<Scalar> sub(m, m);
    for (Index a = 0; a < m; ++a)
        for (Index b = 0; b < m; ++b)
            sub(a, b) = p(states[static_cast<size_t>(a)], states[static_cast<size_t>(b)]);

    std::vector<Index> labels;
    labels.reserve(states.size());
    for (Index s : states) labels.push_back(s + 1);
    return RecurrentClass<Scalar>{StochasticMatrix<Scalar>::adopt_unchecked(std::move(sub)),
                                  std::move(labels)};
}

/// lambda_1 = pi^T mu, the expected holding time under stationarity.
/// Equals 1 for a Markov chain.
template <class Scalar>
Scalar mean_asymptotic_increment(const StationaryDistribution<Scalar>& pi,
                                 const MarkovRenewalProcess<Scalar>& mrp) {
    if (pi.size() != mrp.size())
        throw DimensionMismatch("stationary vector has " + std::to_string(pi.size()) +
                                " entries for a " + std::to_string(mrp.size()) +
                                "-state process");
    Scalar sum = Scalar(0);
    for (Index k = 0; k < pi.size(); ++k) sum = sum + pi(k) * mrp.mu()(k);
    return sum;
}

}  // namespace egth
