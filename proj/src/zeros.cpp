#include "lzw/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string_view>

#include "lzw/error.hpp"
#include "lzw/parallel.hpp"
#include "lzw/specfun.hpp"

namespace lzw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTolerance = 1e-9;
constexpr double kScanStart = 10.0;

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_number(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto r = std::from_chars(token.data(), token.data() + token.size(), out);
  return r.ec == std::errc{} && r.ptr == token.data() + token.size() && std::isfinite(out);
}

// Metadata comment "# key: value"; returns false for ordinary comments.
bool parse_meta(std::string_view line, std::string_view key, std::string_view& value) {
  line = trim(line.substr(1));
  if (line.substr(0, key.size()) != key) return false;
  line.remove_prefix(key.size());
  if (line.empty() || line.front() != ':') return false;
  value = trim(line.substr(1));
  return true;
}

double scan_step(double t, double refinement) {
  const double spacing = kTwoPi / std::log(t / kTwoPi);
  return std::min(0.25, spacing / 8.0) / refinement;
}

bool same_sign(double a, double b) { return std::signbit(a) == std::signbit(b); }

struct Bracket {
  double lo, hi, f_lo, f_hi;
};

// Illinois false position, falling back to bisection when the bracket stalls.
double refine(Bracket b) {
  int side = 0;
  double checkpoint = b.hi - b.lo;
  for (int iter = 0; iter < 400 && b.hi - b.lo > kTolerance; ++iter) {
    double c;
    if (iter % 4 == 3 && b.hi - b.lo > 0.5 * checkpoint) {
      c = 0.5 * (b.lo + b.hi);
    } else {
      c = (b.lo * b.f_hi - b.hi * b.f_lo) / (b.f_hi - b.f_lo);
      if (!(c > b.lo && c < b.hi)) c = 0.5 * (b.lo + b.hi);
    }
    if (iter % 4 == 3) checkpoint = b.hi - b.lo;
    const double fc = hardy_z(c);
    if (fc == 0.0) return c;
    if (same_sign(fc, b.f_lo)) {
      b.lo = c;
      b.f_lo = fc;
      if (side == -1) b.f_hi *= 0.5;
      side = -1;
    } else {
      b.hi = c;
      b.f_hi = fc;
      if (side == 1) b.f_lo *= 0.5;
      side = 1;
    }
  }
  return 0.5 * (b.lo + b.hi);
}

// Samples [lo, hi] more finely around a local minimum of |Z| without a sign
// change; a close pair of zeros shows up as two new sign changes.
void resolve_dip(double lo, double hi, int depth, std::vector<Bracket>& out) {
  constexpr int kSub = 16;
  std::vector<double> t(kSub + 1), z(kSub + 1);
  for (int i = 0; i <= kSub; ++i) {
    t[i] = lo + (hi - lo) * i / kSub;
    z[i] = hardy_z(t[i]);
  }
  for (int i = 0; i < kSub; ++i) {
    if (!same_sign(z[i], z[i + 1])) out.push_back({t[i], t[i + 1], z[i], z[i + 1]});
  }
  if (depth == 0) return;
  bool any = false;
  for (int i = 0; i < kSub; ++i) any = any || !same_sign(z[i], z[i + 1]);
  if (any) return;
  for (int i = 1; i < kSub; ++i) {
    if (std::fabs(z[i]) < std::fabs(z[i - 1]) && std::fabs(z[i]) < std::fabs(z[i + 1])) {
      resolve_dip(t[i - 1], t[i + 1], depth - 1, out);
    }
  }
}

std::vector<Bracket> scan(double T_max, double refinement, unsigned threads) {
  std::vector<double> grid;
  for (double t = kScanStart; t < T_max; t += scan_step(t, refinement)) grid.push_back(t);
  grid.push_back(T_max);

  std::vector<double> z(grid.size());
  parallel_for(grid.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) z[i] = hardy_z(grid[i]);
  }, threads);

  std::vector<Bracket> brackets;
  std::vector<std::size_t> dips;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!same_sign(z[i], z[i + 1])) brackets.push_back({grid[i], grid[i + 1], z[i], z[i + 1]});
    if (i > 0 && same_sign(z[i - 1], z[i]) && same_sign(z[i], z[i + 1]) &&
        std::fabs(z[i]) < std::fabs(z[i - 1]) && std::fabs(z[i]) < std::fabs(z[i + 1])) {
      dips.push_back(i);
    }
  }

  std::vector<std::vector<Bracket>> found(dips.size());
  parallel_for(dips.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) {
      resolve_dip(grid[dips[k] - 1], grid[dips[k] + 1], 3, found[k]);
    }
  }, threads);
  for (const auto& f : found) brackets.insert(brackets.end(), f.begin(), f.end());
  std::sort(brackets.begin(), brackets.end(), [](const Bracket& a, const Bracket& b) { return a.lo < b.lo; });
  return brackets;
}

bool within_band(const ZeroTable& table) {
  try {
    check_rvm(table);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

double rvm_estimate(double T) noexcept {
  const double u = T / kTwoPi;
  return u * std::log(u) - u + 0.875;
}

double rvm_slack(double T) noexcept { return 2.0 + 0.5 * std::log(T); }

void check_rvm(const ZeroTable& table) {
  auto check = [](double T, double n) {
    if (T <= 1.0) return;
    if (std::fabs(n - rvm_estimate(T)) > rvm_slack(T)) {
      throw Error(Errc::count_inconsistent, "N(" + format_double(T) + ") = " + format_double(n) +
                                                " is outside the Riemann-von Mangoldt band around " +
                                                format_double(rvm_estimate(T)));
    }
  };
  const auto& g = table.ordinates;
  for (std::size_t k = 0; k < g.size(); ++k) {
    check(g[k], static_cast<double>(k + 1));
    check(std::nextafter(g[k], 0.0), static_cast<double>(k));
  }
  if (!g.empty() && std::isfinite(table.coverage)) check(table.coverage, static_cast<double>(g.size()));
}

ZeroTable parse_zeros(std::istream& in, const std::string& name) {
  ZeroTable table;
  bool have_coverage = false;
  int min_digits = 40;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](Errc code, const std::string& what) {
    return Error(code, name + ":" + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      std::string_view value;
      double v = 0.0;
      if (parse_meta(view, "coverage", value)) {
        if (!parse_number(value, v)) throw fail(Errc::parse_error, "bad coverage value");
        table.coverage = v;
        have_coverage = true;
      } else if (parse_meta(view, "precision", value)) {
        if (!parse_number(value, v) || v < 0.0) throw fail(Errc::parse_error, "bad precision value");
        table.precision = v;
        min_digits = -1;
      } else if (parse_meta(view, "source", value)) {
        table.source = value == "computed" ? ZeroSource::computed : ZeroSource::file;
      }
      continue;
    }
    while (!view.empty()) {
      const auto end = view.find_first_of(" \t");
      const auto token = view.substr(0, end);
      view = end == std::string_view::npos ? std::string_view{} : trim(view.substr(end));
      double v = 0.0;
      if (!parse_number(token, v)) throw fail(Errc::parse_error, "'" + std::string(token) + "' is not a number");
      if (!(v > 10.0)) throw fail(Errc::parse_error, "ordinate " + std::string(token) + " is not above 10");
      if (!table.ordinates.empty() && !(v > table.ordinates.back())) {
        throw fail(Errc::non_monotonic, "ordinate " + std::string(token) + " does not exceed its predecessor");
      }
      if (min_digits >= 0) {
        const auto dot = token.find('.');
        const int digits = dot == std::string_view::npos ? 0 : static_cast<int>(token.size() - dot - 1);
        min_digits = std::min(min_digits, digits);
      }
      table.ordinates.push_back(v);
    }
  }
  if (min_digits >= 0 && !table.ordinates.empty()) table.precision = 0.5 * std::pow(10.0, -min_digits);
  const auto& g = table.ordinates;
  for (std::size_t k = 1; k < g.size(); ++k) {
    if (g[k] - g[k - 1] <= table.precision) {
      throw Error(Errc::non_monotonic, name + ": ordinates " + format_double(g[k - 1]) + " and " +
                                           format_double(g[k]) + " coincide within the stated precision");
    }
  }
  if (!have_coverage) {
    table.coverage = g.empty() ? std::numeric_limits<double>::infinity() : g.back();
  } else if (!g.empty() && table.coverage < g.back()) {
    throw Error(Errc::parse_error, name + ": coverage below the last ordinate");
  }
  check_rvm(table);
  return table;
}

ZeroTable load_zeros(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open zero table " + path.string());
  return parse_zeros(in, path.string());
}

void write_zeros(const ZeroTable& table, std::ostream& out) {
  out << "# source: " << (table.source == ZeroSource::computed ? "computed" : "file") << '\n';
  out << "# precision: " << format_double(table.precision) << '\n';
  if (std::isfinite(table.coverage)) out << "# coverage: " << format_double(table.coverage) << '\n';
  for (const double g : table.ordinates) out << format_double(g) << '\n';
}

void save_zeros(const ZeroTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot write zero table " + path.string());
  write_zeros(table, out);
  if (!out) throw Error(Errc::io_error, "write failed for " + path.string());
}

ZeroTable compute_zeros(double T_max, unsigned threads) {
  if (!(T_max >= 15.0 && T_max <= 1e4)) {
    throw Error(Errc::invalid_argument, "compute_zeros needs 15 <= T <= 10000, got " + format_double(T_max));
  }
  ZeroTable table;
  table.source = ZeroSource::computed;
  table.precision = kTolerance;
  table.coverage = T_max;
  for (double refinement = 1.0; refinement <= 8.0; refinement *= 2.0) {
    const auto brackets = scan(T_max, refinement, threads);
    table.ordinates.assign(brackets.size(), 0.0);
    parallel_for(brackets.size(), [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) table.ordinates[i] = refine(brackets[i]);
    }, threads);
    if (within_band(table)) return table;
  }
  throw Error(Errc::missed_zero, "zero count up to " + format_double(T_max) +
                                     " stays outside the Riemann-von Mangoldt band after refinement");
}

std::size_t count(const ZeroTable& table, double T) {
  if (T > table.coverage) {
    throw Error(Errc::range_exceeded, "T = " + format_double(T) + " beyond table coverage " +
                                          format_double(table.coverage));
  }
  return static_cast<std::size_t>(
      std::upper_bound(table.ordinates.begin(), table.ordinates.end(), T) - table.ordinates.begin());
}

}  // namespace lzw
