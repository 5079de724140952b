#pragma once

#include <Eigen/Dense>

namespace egth {

using Index = Eigen::Index;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Floating-point regime an algorithm runs in. Every arithmetic operation of
/// a run rounds to the regime after each operation; there are no wider
/// intermediates (builds disable FP contraction for this reason).
enum class Precision { Single, Double };

inline const char* to_string(Precision p) {
    return p == Precision::Single ? "single" : "double";
}

}  // namespace egth
