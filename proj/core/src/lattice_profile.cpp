#include "mvzeta/barnes.hpp"

#include "mvzeta/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <utility>

namespace mvzeta::barnes {

namespace {

constexpr std::array<char, 4> kMagic{'M', 'Z', 'L', 'P'};
constexpr std::uint32_t kFormatVersion = 1;
constexpr double kBinTolerance = 1e-12;

using Bin = std::pair<double, std::uint64_t>;

void merge_sorted(std::vector<Bin>& bins) {
  std::sort(bins.begin(), bins.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < bins.size();) {
    const double start = bins[i].first;
    std::uint64_t count = 0;
    std::size_t j = i;
    while (j < bins.size() && bins[j].first - start <= kBinTolerance * bins[j].first) {
      count += bins[j].second;
      ++j;
    }
    bins[out++] = {start, count};
    i = j;
  }
  bins.resize(out);
}

template <typename T>
void put(std::ostream& os, T value) {
  std::array<unsigned char, sizeof(T)> bytes{};
  if constexpr (std::is_floating_point_v<T>) {
    auto bits = std::bit_cast<std::uint64_t>(value);
    for (auto& b : bytes) { b = static_cast<unsigned char>(bits & 0xff); bits >>= 8; }
  } else {
    auto bits = static_cast<std::uint64_t>(value);
    for (auto& b : bytes) { b = static_cast<unsigned char>(bits & 0xff); bits >>= 8; }
  }
  os.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

template <typename T>
T get(std::istream& is) {
  std::array<unsigned char, sizeof(T)> bytes{};
  if (!is.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw IoError("lattice profile cache is truncated");
  }
  std::uint64_t bits = 0;
  for (std::size_t i = bytes.size(); i-- > 0;) bits = (bits << 8) | bytes[i];
  if constexpr (std::is_floating_point_v<T>) {
    return std::bit_cast<T>(bits);
  } else {
    return static_cast<T>(bits);
  }
}

}  // namespace

LatticeProfile::LatticeProfile(double a, Weights w, double x, std::vector<double> values,
                               std::vector<std::uint64_t> counts)
    : a_(a), w_(std::move(w)), x_(x), values_(std::move(values)), counts_(std::move(counts)) {
  if (values_.size() != counts_.size()) throw DomainError("profile values/counts size mismatch");
}

std::uint64_t LatticeProfile::mass() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

bool LatticeProfile::matches(double a, const Weights& w, double x) const noexcept {
  return a_ == a && w_.w == w.w && x_ == x;
}

LatticeProfile build_lattice_profile(double a, const Weights& w, double x, std::uint64_t budget) {
  zeta::HurwitzParams{a}.validate();
  if (!(x >= 1.0 && std::isfinite(x))) throw DomainError("lattice profile needs x >= 1");
  const auto side = static_cast<std::uint64_t>(std::floor(x)) + 1;
  std::uint64_t points = 1;
  for (int i = 0; i < w.r(); ++i) {
    if (points > budget / side) {
      throw ResourceError("lattice of (floor(x)+1)^r points exceeds the budget of " +
                          std::to_string(budget) + "; lower T or r");
    }
    points *= side;
  }

  std::vector<Bin> bins{{a, 1}};
  for (double wk : w.w) {
    std::vector<Bin> next;
    next.reserve(bins.size() * side);
    for (std::uint64_t m = 0; m < side; ++m) {
      const double shift = static_cast<double>(m) * wk;
      for (const auto& [v, c] : bins) next.emplace_back(v + shift, c);
    }
    merge_sorted(next);
    bins = std::move(next);
  }
  std::vector<double> values(bins.size());
  std::vector<std::uint64_t> counts(bins.size());
  for (std::size_t i = 0; i < bins.size(); ++i) {
    values[i] = bins[i].first;
    counts[i] = bins[i].second;
  }
  return {a, w, x, std::move(values), std::move(counts)};
}

void save_profile(const LatticeProfile& profile, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(os, kFormatVersion);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(profile.weights().r()));
  put<double>(os, profile.a());
  for (double wk : profile.weights().w) put<double>(os, wk);
  put<double>(os, profile.x());
  put<std::uint64_t>(os, profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    put<double>(os, profile.values()[i]);
    put<std::uint64_t>(os, profile.counts()[i]);
  }
  if (!os) throw IoError("failed writing " + path.string());
}

LatticeProfile load_profile(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string());
  std::array<char, 4> magic{};
  if (!is.read(magic.data(), magic.size()) || magic != kMagic) {
    throw IoError(path.string() + " is not a lattice profile cache");
  }
  if (get<std::uint32_t>(is) != kFormatVersion) {
    throw IoError(path.string() + ": unsupported cache version");
  }
  const auto r = get<std::uint32_t>(is);
  if (r == 0 || r > 64) throw IoError(path.string() + ": bad dimension");
  const double a = get<double>(is);
  std::vector<double> w(r);
  for (auto& wk : w) wk = get<double>(is);
  const double x = get<double>(is);
  const auto count = get<std::uint64_t>(is);
  std::vector<double> values;
  std::vector<std::uint64_t> counts;
  values.reserve(std::min<std::uint64_t>(count, kDefaultLatticeBudget));
  counts.reserve(values.capacity());
  for (std::uint64_t i = 0; i < count; ++i) {
    values.push_back(get<double>(is));
    counts.push_back(get<std::uint64_t>(is));
  }
  return {a, Weights::make(std::move(w)), x, std::move(values), std::move(counts)};
}

LatticeProfile cached_profile(double a, const Weights& w, double x,
                              const std::filesystem::path& path, std::uint64_t budget) {
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    LatticeProfile loaded = load_profile(path);
    if (loaded.matches(a, w, x)) return loaded;
  }
  LatticeProfile built = build_lattice_profile(a, w, x, budget);
  save_profile(built, path);
  return built;
}

}  // namespace mvzeta::barnes
