// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <fermicorr/cli.hpp>

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include <json.hpp>

namespace fermicorr::cli {

namespace {

std::string cell_text(const Cell& c) {
  if (const double* x = std::get_if<double>(&c)) return format_number(*x);
  return std::get<std::string>(c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const double* x = std::get_if<double>(&c)) {
    if (!std::isfinite(*x)) return nullptr;
    return *x;
  }
  return std::get<std::string>(c);
}

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  nlohmann::ordered_json meta(table.meta);
  out << "# meta: " << meta.dump() << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json(table.meta);
  doc["columns"] = table.columns;
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) record[table.columns[i]] = cell_json(row[i]);
    doc["records"].push_back(std::move(record));
  }
  out << doc.dump(2) << '\n';
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, n); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace fermicorr::cli
