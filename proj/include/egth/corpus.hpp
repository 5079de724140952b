#pragma once

#include <optional>
#include <string>
#include <vector>

#include "egth/model.hpp"

namespace egth::corpus {

/// One ill-conditioned benchmark chain with its reference solutions. The
/// reference matrix is stored in the repository as exact decimal strings
/// under a power-of-ten display scale; `scale` records that factor (already
/// multiplied through into golden_m). TP1_original carries no reference
/// data: it is the reducible 10-state chain whose closed class is TP1.
struct TestProblem {
    std::string id;
    StochasticMatrix<double> p;
    std::optional<StationaryDistribution<double>> golden_pi;
    std::optional<MfptMatrix<double>> golden_m;
    double scale = 1.0;
};

/// All known problem ids: TP1, TP2, TP3, TP41, TP42, TP43, TP44, TP1_original.
const std::vector<std::string>& ids();

bool is_known(const std::string& id);

/// Loads a problem by id; throws UnknownProblem otherwise.
TestProblem load(const std::string& id);

/// The reference passage-time matrix with its display scale applied.
/// Throws UnknownProblem when the id has no reference data.
MfptMatrix<double> golden_mfpt(const std::string& id);

/// Absolute per-entry tolerance for comparisons against the reference
/// stationary vector: 1e-13 where the vector carries 14 significant digits
/// (TP2, TP3), 1e-10 otherwise.
double golden_pi_abs_tol(const std::string& id);

/// Reference-matrix comparison: |computed - golden| must not exceed
/// 1e-9 * |golden| + 1e-15 * scale per entry. The absolute term is the
/// display quantization of the reference data, which caps the attainable
/// agreement for entries far below the display scale. Returns the worst
/// entrywise ratio of error to allowance (pass when <= 1).
double golden_mfpt_excess(const MfptMatrix<double>& computed, const TestProblem& tp);

}  // namespace egth::corpus
