// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <fermicorr/cli.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace fermicorr::cli {

namespace {

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(value)) throw UsageError("not a number: '" + text + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  if (text.empty()) throw UsageError("empty grid");
  if (text.find(':') == std::string::npos) {
    std::vector<double> values;
    for (const std::string& item : split(text, ',')) values.push_back(parse_number(item));
    return values;
  }
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("grid must be start:stop:step, got '" + text + "'");
  const double start = parse_number(parts[0]), stop = parse_number(parts[1]), step = parse_number(parts[2]);
  if (!(step > 0.0) || stop < start) throw UsageError("grid needs step > 0 and stop >= start: '" + text + "'");
  const auto count = static_cast<long>(std::floor((stop - start) / step + 0.5)) + 1;
  if (count > 10'000'000) throw UsageError("grid too large: '" + text + "'");
  std::vector<double> values;
  for (long i = 0; i < count; ++i) values.push_back(start + static_cast<double>(i) * step);
  return values;
}

std::vector<double> parse_log_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("log grid must be start:stop:count, got '" + text + "'");
  const double start = parse_number(parts[0]), stop = parse_number(parts[1]);
  const double count_value = parse_number(parts[2]);
  const auto count = static_cast<long>(count_value);
  if (!(start > 0.0) || !(stop >= start) || count < 1 || static_cast<double>(count) != count_value) {
    throw UsageError("log grid needs 0 < start <= stop and an integer count >= 1: '" + text + "'");
  }
  if (count == 1) return {start};
  std::vector<double> values;
  const double a = std::log(start), b = std::log(stop);
  for (long i = 0; i < count; ++i) values.push_back(std::exp(a + (b - a) * static_cast<double>(i) / (count - 1)));
  values.front() = start;
  values.back() = stop;
  return values;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

int default_jobs() {
  if (const char* env = std::getenv("FERMICORR_JOBS")) {
    const int jobs = std::atoi(env);
    if (jobs > 0) return jobs;
  }
  return 1;
}

}  // namespace fermicorr::cli
