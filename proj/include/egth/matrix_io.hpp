#pragma once

#include <iosfwd>
#include <string>

#include "egth/model.hpp"

namespace egth {

/// Parses the dense matrix text format:
///   - '#' lines and blank lines are ignored
///   - first data line: the state count n
///   - next n data lines: n whitespace-separated decimal literals each
///   - optional final data line: "mu v1 ... vn" with positive literals
/// LF and CRLF are both accepted. A document without a mu line is a Markov
/// chain (mu = all ones). Parsed values feed validate_stochastic unchanged.
MarkovRenewalProcess<double> parse_matrix_document(std::istream& in);
MarkovRenewalProcess<double> parse_matrix_document(const std::string& text);

/// Canonical serialization: shortest decimal strings that parse back to the
/// identical binary64 values, LF line endings, a mu line only when some
/// holding time differs from 1. parse(serialize(x)) == x bit for bit.
std::string serialize_matrix_document(const MarkovRenewalProcess<double>& mrp);

}  // namespace egth
