// Locale-independent text output: 17-significant-digit numbers, CSV tables,
// JSON run manifests and reports.
#pragma once

#include "mvzeta/meanvalue.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mvzeta::io {

/// Shortest form is not used: always 17 significant digits, '.' separator.
std::string format_double(double x);

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t x);

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Columns T, sigma, a, kind, params, value, step, richardson_err.
void write_meansquare_csv(const std::filesystem::path& path, const mv::MeanSquareRequest& req,
                          const std::vector<mv::MeanSquareResult>& results);

/// The parameter cell of the mean-square CSV, e.g. "lambda=0.5" or "w=1;2".
std::string request_params(const mv::MeanSquareRequest& req);

void write_residual_report(const std::filesystem::path& path, const mv::ResidualReport& rep,
                           const mv::Prediction& pred);

struct RunManifest {
  std::string command_line;
  std::map<std::string, std::string> parameters;
  std::vector<std::string> outputs;
  double wall_seconds = 0.0;
};

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

/// Creates the parent directory of path if needed; IoError on failure.
void ensure_parent(const std::filesystem::path& path);

}  // namespace mvzeta::io
