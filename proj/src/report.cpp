// SPDX-License-Identifier: Apache-2.0

#include "gelliptic/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>

namespace gelliptic {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

std::vector<double> parse_grid(const std::string& spec) {
  auto to_double = [](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_grid: not a number: '" + s + "'");
    }
    if (used != s.size())
      throw std::invalid_argument("parse_grid: trailing characters in '" + s + "'");
    return v;
  };

  const auto first = spec.find(':');
  if (first == std::string::npos) return {to_double(spec)};
  const auto second = spec.find(':', first + 1);
  if (second == std::string::npos || spec.find(':', second + 1) != std::string::npos)
    throw std::invalid_argument("parse_grid: expected start:stop:step");
  const double start = to_double(spec.substr(0, first));
  const double stop = to_double(spec.substr(first + 1, second - first - 1));
  const double step = to_double(spec.substr(second + 1));
  if (!(step > 0.0) || !(stop >= start))
    throw std::invalid_argument("parse_grid: grid must be strictly increasing");

  std::vector<double> grid;
  const double span = stop - start;
  const long long count = static_cast<long long>(std::floor(span / step + 1e-12));
  for (long long i = 0; i <= count; ++i) {
    double v = start + static_cast<double>(i) * step;
    // Land exactly on stop when the span is an integer multiple of step.
    if (std::abs(v - stop) <= 1e-12 * std::max(1.0, std::abs(stop))) v = stop;
    grid.push_back(v);
  }
  if (grid.empty()) throw std::invalid_argument("parse_grid: empty grid");
  return grid;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::string out =
      "identity,p,q,r,k,point,lhs,rhs,abs_err,rel_err,tol,pass\n";
  for (const VerificationReport& rep : reports) {
    out += std::string(to_string(rep.id));
    for (double v : {rep.p, rep.q, rep.r, rep.k, rep.point, rep.lhs, rep.rhs,
                     rep.abs_err, rep.rel_err, rep.tol}) {
      out += ',';
      out += format_double(v);
    }
    out += rep.pass ? ",true\n" : ",false\n";
  }
  return out;
}

ReportSummary summarize(const std::vector<VerificationReport>& reports) {
  ReportSummary s;
  s.total = reports.size();
  for (const VerificationReport& rep : reports) {
    if (rep.pass)
      ++s.passed;
    else
      ++s.failed;
    if (std::isfinite(rep.rel_err)) s.max_rel_err = std::max(s.max_rel_err, rep.rel_err);
  }
  return s;
}

nlohmann::json reports_to_json(const std::string& suite,
                               const std::vector<VerificationReport>& reports) {
  nlohmann::json points = nlohmann::json::array();
  std::set<std::array<double, 3>> triples;
  std::set<double> k_values;
  for (const VerificationReport& rep : reports) {
    triples.insert({rep.p, rep.q, rep.r});
    k_values.insert(rep.k);
    points.push_back({{"identity", std::string(to_string(rep.id))},
                      {"p", rep.p},
                      {"q", rep.q},
                      {"r", rep.r},
                      {"k", rep.k},
                      {"point", rep.point},
                      {"lhs", rep.lhs},
                      {"rhs", rep.rhs},
                      {"abs_err", rep.abs_err},
                      {"rel_err", rep.rel_err},
                      {"tol", rep.tol},
                      {"pass", rep.pass}});
  }
  const ReportSummary s = summarize(reports);
  return nlohmann::json{
      {"suite", suite},
      {"generated_grid",
       {{"triples", triples}, {"k_values", k_values}, {"point_count", reports.size()}}},
      {"points", points},
      {"summary",
       {{"total", s.total},
        {"passed", s.passed},
        {"failed", s.failed},
        {"max_rel_err", s.max_rel_err}}}};
}

}  // namespace gelliptic
