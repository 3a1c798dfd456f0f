#include "mvzeta/output.hpp"

#include "mvzeta/errors.hpp"
#include "mvzeta/version.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

namespace mvzeta::io {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  ensure_parent(path);
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  return os;
}

void finish(std::ofstream& os, const std::filesystem::path& path) {
  os.flush();
  if (!os) throw IoError("failed writing " + path.string());
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json number(double x) {
  if (!std::isfinite(x)) return format_double(x);
  return x;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 17);
  return {buf.data(), res.ptr};
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[x & 0xf];
    x >>= 4;
  }
  return out;
}

void ensure_parent(const std::filesystem::path& path) {
  const auto parent = path.parent_path();
  if (parent.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(parent, ec);
  if (ec) throw IoError("cannot create directory " + parent.string() + ": " + ec.message());
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto os = open_for_write(path);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << csv_cell(cells[i]);
    }
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  finish(os, path);
}

std::string request_params(const mv::MeanSquareRequest& req) {
  switch (req.kind) {
    case mv::Kind::hurwitz: return "";
    case mv::Kind::lerch: return "lambda=" + format_double(req.lambda.value_or(1.0));
    case mv::Kind::multi_hurwitz: return "r=" + std::to_string(req.r);
    case mv::Kind::barnes: {
      std::string out = "w=";
      if (req.w) {
        for (std::size_t i = 0; i < req.w->w.size(); ++i) {
          if (i) out += ';';
          out += format_double(req.w->w[i]);
        }
      }
      return out;
    }
  }
  return "";
}

void write_meansquare_csv(const std::filesystem::path& path, const mv::MeanSquareRequest& req,
                          const std::vector<mv::MeanSquareResult>& results) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : results) {
    rows.push_back({format_double(r.T), format_double(req.sigma), format_double(req.a),
                    mv::to_string(req.kind), request_params(req), format_double(r.value),
                    format_double(r.step), format_double(r.richardson_err)});
  }
  write_csv(path, {"T", "sigma", "a", "kind", "params", "value", "step", "richardson_err"}, rows);
}

void write_residual_report(const std::filesystem::path& path, const mv::ResidualReport& rep,
                           const mv::Prediction& pred) {
  nlohmann::ordered_json j;
  j["branch"] = rep.branch;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : pred.terms) {
    terms.push_back({{"coefficient", number(t.coefficient)},
                     {"T_power", number(t.t_power)},
                     {"log_power", t.log_power}});
  }
  j["prediction"] = {{"terms", terms},
                     {"error_exponent", number(pred.error_exponent)},
                     {"error_log", pred.error_log}};
  auto points = nlohmann::ordered_json::array();
  for (const auto& p : rep.points) {
    points.push_back({{"T", number(p.T)},
                      {"measured", number(p.measured)},
                      {"predicted", number(p.predicted)},
                      {"ratio", number(p.ratio)},
                      {"residual", number(p.residual)}});
  }
  j["points"] = points;
  j["fitted_exponent"] = number(rep.fitted_exponent);
  j["fitted_constant"] = number(rep.fitted_constant);
  j["allowed_exponent"] = number(rep.allowed_exponent);
  j["monotone"] = rep.monotone;
  j["pass"] = rep.pass;
  auto os = open_for_write(path);
  os << j.dump(2) << '\n';
  finish(os, path);
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["command_line"] = manifest.command_line;
  j["parameters"] = manifest.parameters;
  j["library_version"] = std::string(kVersion);
  j["outputs"] = manifest.outputs;
  j["determinism"] =
      "outputs depend only on the parameters; random coefficients use the recorded seed";
  j["timing"] = {{"wall_seconds", manifest.wall_seconds}};
  auto os = open_for_write(path);
  os << j.dump(2) << '\n';
  finish(os, path);
}

}  // namespace mvzeta::io
