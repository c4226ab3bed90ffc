// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli.hpp
 * @brief Command-line front end: grids, tables and the subcommands.
 */

#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fermicorr::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kSolverFailure = 2, kBoundViolation = 3 };

/// Malformed command-line input.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * "start:stop:step" (inclusive of stop within half a step), a single value, or
 * a comma-separated list of values.
 */
std::vector<double> parse_grid(const std::string& text);

/// "start:stop:count", count log-spaced values including both ends.
std::vector<double> parse_log_grid(const std::string& text);

/// Shortest decimal that round-trips; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double x);

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Run description; written as a "# meta:" comment line.
  std::map<std::string, std::string> meta;
};

void write_csv(std::ostream& out, const Table& table);
/// {"meta": {...}, "columns": [...], "records": [{...}]}; non-finite numbers become null.
void write_json(std::ostream& out, const Table& table);

/// Evaluates fn(0..n-1) on up to `jobs` threads; results stay in index order.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

/// Thread count from FERMICORR_JOBS, else 1.
int default_jobs();

/// Full program; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fermicorr::cli
