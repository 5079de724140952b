#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "egth/egth.hpp"
#include "egth/gth.hpp"
#include "egth/model.hpp"

namespace egth {

/// Elementwise violation of the passage-time equations, aggregated as
/// min / max / sum of absolute residuals.
struct MfptErrorReport {
    double min_abs = 0;
    double max_abs = 0;
    double residual = 0;
};

struct StationaryErrorReport {
    double min_abs = 0;
    double max_abs = 0;
    double residual = 0;
};

/// Differences between a binary32 and a binary64 run of the same algorithm.
/// accurate_digits averages -log10 of the entrywise relative error over the
/// entries where it is nonzero; entries that agree exactly are excluded and
/// listed as 1-based (row, col) pairs. The average is absent when every
/// entry agrees.
struct PrecisionComparison {
    double min_abs = 0;
    double max_abs = 0;
    double relative_error = 0;
    std::optional<double> accurate_digits;
    std::vector<std::pair<Index, Index>> excluded_pairs;
};

/// Residuals of M against m(i,j) = mu_i + sum_{k!=j} p(i,k) m(k,j), computed
/// in the scalar type of the run that produced M. For a chain mu_i = 1 and
/// this is the textbook passage-time identity.
template <class Scalar>
MfptErrorReport mfpt_residual(const MfptMatrix<Scalar>& m, const MarkovRenewalProcess<Scalar>& mrp) {
    if (m.size() != mrp.size())
        throw DimensionMismatch("passage time matrix size " + std::to_string(m.size()) +
                                " vs process size " + std::to_string(mrp.size()));
    const Index n = m.size();
    const auto& p = mrp.p();
    MfptErrorReport rep;
    bool first = true;
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            Scalar acc = Scalar(0);
            for (Index k = 0; k < n; ++k)
                if (k != j) acc = acc + p(i, k) * m(k, j);
            using std::abs;
            const double r = to_double(abs(m(i, j) - acc - mrp.mu()(i)));
            rep.residual += r;
            if (first || r < rep.min_abs) rep.min_abs = r;
            if (first || r > rep.max_abs) rep.max_abs = r;
            first = false;
        }
    }
    return rep;
}

/// Residuals of pi against pi^T = pi^T P, in the scalar type of the run.
template <class Scalar>
StationaryErrorReport stationary_residual(const StationaryDistribution<Scalar>& pi,
                                          const StochasticMatrix<Scalar>& p) {
    if (pi.size() != p.size())
        throw DimensionMismatch("stationary vector size " + std::to_string(pi.size()) +
                                " vs chain size " + std::to_string(p.size()));
    const Index n = p.size();
    StationaryErrorReport rep;
    bool first = true;
    for (Index j = 0; j < n; ++j) {
        Scalar acc = Scalar(0);
        for (Index i = 0; i < n; ++i) acc = acc + pi(i) * p(i, j);
        using std::abs;
        const double d = to_double(abs(pi(j) - acc));
        rep.residual += d;
        if (first || d < rep.min_abs) rep.min_abs = d;
        if (first || d > rep.max_abs) rep.max_abs = d;
        first = false;
    }
    return rep;
}

/// Accurate-digits statistic of a binary32 result (upcast into true_m's
/// type) against the binary64 reference. Differences are taken in binary64.
inline PrecisionComparison accurate_digits(const MfptMatrix<double>& true_m,
                                           const MfptMatrix<double>& computed_m) {
    if (true_m.size() != computed_m.size())
        throw DimensionMismatch("matrices of size " + std::to_string(true_m.size()) + " and " +
                                std::to_string(computed_m.size()));
    const Index n = true_m.size();
    PrecisionComparison cmp;
    double digit_sum = 0;
    Index counted = 0;
    bool first = true;
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            const double diff = std::fabs(true_m(i, j) - computed_m(i, j));
            cmp.relative_error += diff;
            if (first || diff < cmp.min_abs) cmp.min_abs = diff;
            if (first || diff > cmp.max_abs) cmp.max_abs = diff;
            first = false;
            const double rel = (true_m(i, j) - computed_m(i, j)) / true_m(i, j);
            if (rel == 0.0) {
                cmp.excluded_pairs.emplace_back(i + 1, j + 1);
            } else {
                digit_sum += -std::log10(std::fabs(rel));
                ++counted;
            }
        }
    }
    if (counted > 0) cmp.accurate_digits = digit_sum / static_cast<double>(counted);
    return cmp;
}

namespace detail {

inline PrecisionComparison compare_vectors(const DenseVector<double>& ref,
                                           const DenseVector<double>& computed) {
    PrecisionComparison cmp;
    bool first = true;
    for (Index j = 0; j < ref.size(); ++j) {
        const double d = std::fabs(computed(j) - ref(j));
        cmp.relative_error += d;
        if (first || d < cmp.min_abs) cmp.min_abs = d;
        if (first || d > cmp.max_abs) cmp.max_abs = d;
        first = false;
    }
    return cmp;
}

}  // namespace detail

/// Every statistic of the precision-degradation study for one process: the
/// passage-time and stationary residuals of the binary64 and binary32 runs
/// (each computed in its own precision), the accurate-digits comparison of
/// the two passage-time matrices, and the summed absolute differences of the
/// stationary vectors, for both the passage-time route and the plain
/// state-reduction route.
struct CompareReport {
    MfptErrorReport mfpt_double, mfpt_single;
    StationaryErrorReport stationary_double, stationary_single;          // reciprocal-diagonal pi
    StationaryErrorReport gth_stationary_double, gth_stationary_single;  // state-reduction pi
    PrecisionComparison pi_comparison;                                   // reciprocal-diagonal route
    PrecisionComparison gth_pi_comparison;                               // state-reduction route
    PrecisionComparison mfpt_comparison;                                 // accurate digits live here
};

/// Runs both algorithms under both precisions and assembles the full report.
/// The binary32 run uses binary32 storage and arithmetic throughout.
inline CompareReport compare_precisions(const MarkovRenewalProcess<double>& mrp) {
    const MarkovRenewalProcess<float> mrp_s = mrp.cast<float>();

    const MfptMatrix<double> m_d = mfpt_egth(mrp);
    const MfptMatrix<float> m_s = mfpt_egth(mrp_s);
    const StationaryDistribution<double> pi_d = stationary_from_mfpt(m_d, mrp);
    const StationaryDistribution<float> pi_s = stationary_from_mfpt(m_s, mrp_s);
    const StationaryDistribution<double> gpi_d = stationary_gth(mrp.p());
    const StationaryDistribution<float> gpi_s = stationary_gth(mrp_s.p());

    CompareReport rep;
    rep.mfpt_double = mfpt_residual(m_d, mrp);
    rep.mfpt_single = mfpt_residual(m_s, mrp_s);
    rep.stationary_double = stationary_residual(pi_d, mrp.p());
    rep.stationary_single = stationary_residual(pi_s, mrp_s.p());
    rep.gth_stationary_double = stationary_residual(gpi_d, mrp.p());
    rep.gth_stationary_single = stationary_residual(gpi_s, mrp_s.p());
    rep.pi_comparison = detail::compare_vectors(pi_d.vector(), pi_s.vector().cast<double>());
    rep.gth_pi_comparison = detail::compare_vectors(gpi_d.vector(), gpi_s.vector().cast<double>());
    rep.mfpt_comparison = accurate_digits(m_d, m_s.cast<double>());
    return rep;
}

}  // namespace egth
