#pragma once

#include <array>

#include "egth/model.hpp"

namespace egth {

/// The three cyclic cofactor sums of a 3-state chain. The chain is
/// irreducible exactly when all three are positive, and the stationary
/// distribution is their normalization.
template <class Scalar>
struct DeltaTriple {
    Scalar d1, d2, d3, d;

    static DeltaTriple from(const StochasticMatrix<Scalar>& p) {
        if (p.size() != 3) throw DimensionMismatch("delta triple requires a 3-state chain");
        DeltaTriple t;
        t.d1 = p(1, 0) * p(2, 0) + p(1, 0) * p(2, 1) + p(1, 2) * p(2, 0);
        t.d2 = p(0, 1) * p(2, 0) + p(0, 1) * p(2, 1) + p(0, 2) * p(2, 1);
        t.d3 = p(0, 2) * p(1, 0) + p(0, 1) * p(1, 2) + p(0, 2) * p(1, 2);
        t.d = t.d1 + t.d2 + t.d3;
        return t;
    }
};

template <class Scalar>
MfptMatrix<Scalar> mfpt_1(Scalar mu1) {
    DenseMatrix<Scalar> m(1, 1);
    m(0, 0) = mu1;
    return MfptMatrix<Scalar>::from(std::move(m));
}

/// Two-state solution:
///   [ mu1 + (p12/p21) mu2    mu1/p12              ]
///   [ mu2/p21                (p21/p12) mu1 + mu2  ].
template <class Scalar>
MfptMatrix<Scalar> mfpt_2(const MarkovRenewalProcess<Scalar>& mrp) {
    if (mrp.size() != 2) throw DimensionMismatch("mfpt_2 requires a 2-state process");
    const Scalar p12 = mrp.p()(0, 1);
    const Scalar p21 = mrp.p()(1, 0);
    if (!(p12 > Scalar(0)) || !(p21 > Scalar(0)))
        throw Reducible("a 2-state chain needs p12 > 0 and p21 > 0");
    const Scalar mu1 = mrp.mu()(0);
    const Scalar mu2 = mrp.mu()(1);
    DenseMatrix<Scalar> m(2, 2);
    m(0, 0) = mu1 + (p12 / p21) * mu2;
    m(0, 1) = mu1 / p12;
    m(1, 0) = mu2 / p21;
    m(1, 1) = (p21 / p12) * mu1 + mu2;
    return MfptMatrix<Scalar>::from(std::move(m));
}

template <class Scalar>
StationaryDistribution<Scalar> stationary_3(const StochasticMatrix<Scalar>& p) {
    const DeltaTriple<Scalar> t = DeltaTriple<Scalar>::from(p);
    if (!(t.d1 > Scalar(0)) || !(t.d2 > Scalar(0)) || !(t.d3 > Scalar(0)))
        throw Reducible("a 3-state chain is irreducible only when all deltas are positive");
    DenseVector<Scalar> pi(3);
    pi(0) = t.d1 / t.d;
    pi(1) = t.d2 / t.d;
    pi(2) = t.d3 / t.d;
    return StationaryDistribution<Scalar>::from(std::move(pi));
}

/// Three-state solution in terms of the delta sums; with unit holding times
/// each entry collapses to a three-term numerator over its delta.
template <class Scalar>
MfptMatrix<Scalar> mfpt_3(const MarkovRenewalProcess<Scalar>& mrp) {
    if (mrp.size() != 3) throw DimensionMismatch("mfpt_3 requires a 3-state process");
    const auto& p = mrp.p();
    const DeltaTriple<Scalar> t = DeltaTriple<Scalar>::from(p);
    if (!(t.d1 > Scalar(0)) || !(t.d2 > Scalar(0)) || !(t.d3 > Scalar(0)))
        throw Reducible("a 3-state chain is irreducible only when all deltas are positive");
    const Scalar mu1 = mrp.mu()(0), mu2 = mrp.mu()(1), mu3 = mrp.mu()(2);
    const Scalar diag = t.d1 * mu1 + t.d2 * mu2 + t.d3 * mu3;

    DenseMatrix<Scalar> m(3, 3);
    m(0, 0) = diag / t.d1;
    m(0, 1) = ((p(2, 0) + p(2, 1)) * mu1 + p(0, 2) * mu3) / t.d2;
    m(0, 2) = ((p(1, 0) + p(1, 2)) * mu1 + p(0, 1) * mu2) / t.d3;
    m(1, 0) = ((p(2, 0) + p(2, 1)) * mu2 + p(1, 2) * mu3) / t.d1;
    m(1, 1) = diag / t.d2;
    m(1, 2) = (p(1, 0) * mu1 + (p(0, 1) + p(0, 2)) * mu2) / t.d3;
    m(2, 0) = (p(2, 1) * mu2 + (p(1, 0) + p(1, 2)) * mu3) / t.d1;
    m(2, 1) = (p(2, 0) * mu1 + (p(0, 1) + p(0, 2)) * mu3) / t.d2;
    m(2, 2) = diag / t.d3;
    return MfptMatrix<Scalar>::from(std::move(m));
}

/// The three passage times into state 4 of a 4-state process, from the
/// explicit two-pivot elimination of states 3 then 2. The remaining entries
/// of a 4-state matrix are assembled by theorem7_mfpt.
template <class Scalar>
std::array<Scalar, 3> mfpt_4_column(const MarkovRenewalProcess<Scalar>& mrp) {
    if (mrp.size() != 4) throw DimensionMismatch("mfpt_4_column requires a 4-state process");
    if (!check_irreducible(mrp.p())) throw Reducible("4-state chain is not strongly connected");
    const auto& p = mrp.p();
    const Scalar mu1 = mrp.mu()(0), mu2 = mrp.mu()(1), mu3 = mrp.mu()(2);

    const Scalar w = Scalar(1) - p(2, 2);
    const Scalar q11 = p(0, 0) + p(0, 2) * p(2, 0) / w;
    const Scalar q12 = p(0, 1) + p(0, 2) * p(2, 1) / w;
    const Scalar q21 = p(1, 0) + p(1, 2) * p(2, 0) / w;
    const Scalar q22 = p(1, 1) + p(1, 2) * p(2, 1) / w;
    const Scalar v1 = mu1 + p(0, 2) * mu3 / w;
    const Scalar v2 = mu2 + p(1, 2) * mu3 / w;

    const Scalar d14 = (Scalar(1) - q11) * (Scalar(1) - q22) - q12 * q21;
    const Scalar d24 = (Scalar(1) - p(1, 1)) * w - p(1, 2) * p(2, 1);
    const Scalar d34 = p(2, 0) + p(2, 1) + p(2, 3);
    if (!(w > Scalar(0)) || !(d14 > Scalar(0)) || !(d24 > Scalar(0)) || !(d34 > Scalar(0)))
        throw Reducible("vanishing denominator in the 4-state column formulas");

    const Scalar m14 = ((Scalar(1) - q22) * v1 + q12 * v2) / d14;
    const Scalar m24 = ((p(1, 0) * w + p(1, 2) * p(2, 0)) * m14 + (mu2 * w + mu3 * p(1, 2))) / d24;
    const Scalar m34 = (p(2, 0) * m14 + p(2, 1) * m24 + mu3) / d34;
    return {m14, m24, m34};
}

}  // namespace egth
