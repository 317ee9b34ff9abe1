// SPDX-License-Identifier: Apache-2.0
//
// Machine-readable output for verification runs: CSV and JSON serialization
// of reports plus the grid-spec parser used by the command line.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gelliptic/identities.hpp"

namespace gelliptic {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

/// Parses "start:stop:step" into a strictly increasing grid, inclusive of
/// stop when (stop-start) is an integer multiple of step within 1e-12.
/// A bare number yields a one-point grid. Throws std::invalid_argument on
/// malformed or non-increasing specs.
std::vector<double> parse_grid(const std::string& spec);

/// CSV with a header row naming every column, one row per point,
/// numbers in shortest round-trip form, rows in input order.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

struct ReportSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double max_rel_err = 0.0;
};

ReportSummary summarize(const std::vector<VerificationReport>& reports);

/// Single JSON object {suite, generated_grid, points, summary}.
nlohmann::json reports_to_json(const std::string& suite,
                               const std::vector<VerificationReport>& reports);

}  // namespace gelliptic
