#include "mvzeta/errors.hpp"
#include "mvzeta/output.hpp"
#include "mvzeta/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>

namespace mvzeta::verify {

namespace {

constexpr int kRandomVectors = 20;

std::vector<VerdictRecord> envelopes(const SuiteOptions& opt) {
  const std::vector<double> hurwitz_sigmas{-1, -0.5, 0, 0.25, 0.5, 0.75, 1, 1.5, 2};
  std::vector<VerdictRecord> out;
  for (double a : {0.5, 1.0}) out.push_back(envelope_hurwitz(a, hurwitz_sigmas, 2000, 0.5, opt.threads));
  out.push_back(envelope_multi(2, 1.0, {}, {-2, -1, 0, 0.5, 1, 1.25, 1.5, 1.75, 2, 3}, 2000, 0.5,
                               opt.threads));
  out.push_back(envelope_multi(2, 1.0, {barnes::Weights::make({1, 2})}, {1.25, 1.5, 1.75, 2.5, 3},
                               2000, 0.5, opt.threads));
  out.push_back(envelope_multi(2, 1.0, {barnes::Weights::make({1, std::sqrt(2.0)})},
                               {1.25, 1.5, 1.75, 3}, 500, 0.5, opt.threads));
  return out;
}

std::vector<VerdictRecord> mv_suite(const SuiteOptions& opt) {
  std::vector<VerdictRecord> parts;
  for (std::size_t N : {1, 2, 10, 100, 1000}) {
    for (double a : {0.5, 1.0}) {
      for (double sigma : {0.5, 1.0}) {
        parts.push_back(mv_inequality(N, a, sigma, std::nullopt));
        for (int i = 0; i < kRandomVectors; ++i) {
          parts.push_back(mv_inequality(N, a, sigma, opt.seed + static_cast<std::uint64_t>(i)));
        }
      }
    }
  }
  VerdictRecord rec = merge("mv_inequality", parts);
  rec.grid = "N=1|2|10|100|1000;a=0.5|1;sigma=0.5|1;coeffs=ones+random(" + std::to_string(opt.seed) +
             ".." + std::to_string(opt.seed + kRandomVectors - 1) + ")";
  rec.seed = opt.seed;
  rec.notes = {"generator mt19937_64, U = (x >> 11) 2^-53, a_m = exp(2 pi i U)"};
  return {rec};
}

std::vector<VerdictRecord> comparability_suite(const SuiteOptions& opt) {
  std::vector<double> ts;
  for (int k = 0; k <= 798; ++k) ts.push_back(1.0 + 0.5 * k);
  std::vector<VerdictRecord> out;
  for (double sigma : {1.25, 1.5, 1.75}) {
    out.push_back(comparability(2, 1.0, barnes::Weights::make({1, 2}), sigma, ts, {100, 200, 400},
                                opt.threads));
  }
  return out;
}

std::vector<VerdictRecord> oscillatory_suite(const SuiteOptions& opt) {
  std::vector<VerdictRecord> out;
  for (double a : {1.0, 0.5}) {
    for (long q : {1L, 2L}) {
      out.push_back(oscillatory_I(0.75, a, zeta::RationalTwist::make(1, q), {400, 1600, 5000},
                                  opt.threads));
    }
  }
  return out;
}

}  // namespace

VerdictRecord merge(const std::string& suite, const std::vector<VerdictRecord>& parts) {
  if (parts.empty()) throw DomainError("nothing to merge");
  VerdictRecord out;
  out.suite = suite;
  out.threshold = parts.front().threshold;
  out.sweep.columns = parts.front().sweep.columns;
  out.pass = true;
  for (const auto& p : parts) {
    if (p.sweep.columns != out.sweep.columns) throw DomainError("merged sweeps differ in columns");
    if (!out.grid.empty()) out.grid += " + ";
    out.grid += p.grid;
    out.observed_constant = std::max(out.observed_constant, p.observed_constant);
    out.pass = out.pass && p.pass;
    out.evaluated += p.evaluated;
    out.excluded += p.excluded;
    out.notes.insert(out.notes.end(), p.notes.begin(), p.notes.end());
    out.sweep.rows.insert(out.sweep.rows.end(), p.sweep.rows.begin(), p.sweep.rows.end());
  }
  out.pass = out.pass && out.observed_constant <= out.threshold;
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"envelopes",   "mv",           "comparability",
                                              "oscillatory", "coefficients", "funceq"};
  return names;
}

std::vector<VerdictRecord> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "envelopes") return envelopes(opt);
  if (name == "mv") return mv_suite(opt);
  if (name == "comparability") return comparability_suite(opt);
  if (name == "oscillatory") return oscillatory_suite(opt);
  if (name == "coefficients") return {coefficient_identity()};
  if (name == "funceq") return {functional_equation_grid()};
  if (name == "all") {
    std::vector<VerdictRecord> out;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw DomainError("unknown suite '" + name + "'");
}

std::vector<std::filesystem::path> write_record(VerdictRecord& rec,
                                                const std::filesystem::path& dir) {
  const std::string stem = rec.suite + "_" + io::hex64(io::fnv1a64(rec.suite + "|" + rec.grid));
  const auto csv = dir / (stem + ".csv");
  const auto json = dir / (stem + ".json");
  rec.artifacts = csv.filename().string();

  std::vector<std::vector<std::string>> rows;
  rows.reserve(rec.sweep.rows.size());
  for (const auto& r : rec.sweep.rows) {
    std::vector<std::string> cells;
    cells.reserve(r.size());
    for (double v : r) cells.push_back(io::format_double(v));
    rows.push_back(std::move(cells));
  }
  io::write_csv(csv, rec.sweep.columns, rows);

  nlohmann::ordered_json j;
  j["suite"] = rec.suite;
  j["grid"] = rec.grid;
  j["observed_constant"] = io::format_double(rec.observed_constant);
  j["threshold"] = io::format_double(rec.threshold);
  j["pass"] = rec.pass;
  j["artifacts"] = rec.artifacts;
  if (rec.seed) {
    j["seed"] = *rec.seed;
  } else {
    j["seed"] = nullptr;
  }
  j["evaluated"] = rec.evaluated;
  j["excluded"] = rec.excluded;
  j["notes"] = rec.notes;
  std::ofstream os(json, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + json.string() + " for writing");
  os << j.dump(2) << '\n';
  if (!os) throw IoError("failed writing " + json.string());
  return {csv, json};
}

}  // namespace mvzeta::verify
