#include "lzw/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "lzw/parallel.hpp"

namespace lzw {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

namespace {

void row(std::ostream& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out << ',';
    out << c;
    first = false;
  }
  out << '\n';
}

std::string num(double v) { return format_number(v); }
std::string num(std::size_t v) { return std::to_string(v); }

}  // namespace

LandauRow landau_row(const RationalPoint& x, const ZeroTable& zeros, double T, unsigned threads) {
  return {x, T, count(zeros, T), landau_zero_sum(x, zeros, T, 1, threads), landau_main_term(x, T),
          landau_error_budget(x, T)};
}

std::vector<AfeCase> afe_grid() {
  std::vector<DirichletCharacter> chars;
  for (std::int64_t q : {3, 5}) {
    for (std::int64_t j = 1; j < q - 1; ++j) chars.push_back(character(q, j));
  }
  std::vector<AfeCase> grid;
  for (double sigma : {0.55, 0.6, 0.75, 0.9}) {
    for (double t : {100.0, 500.0, 1000.0, 2000.0, 5000.0}) {
      for (const auto& chi : chars) {
        for (double delta : {1.0, std::sqrt(static_cast<double>(chi.modulus())), 2.0}) {
          grid.push_back({sigma, t, chi, delta});
        }
      }
    }
  }
  return grid;
}

std::vector<AfeCheck> afe_verify(const std::vector<AfeCase>& grid, unsigned threads) {
  std::vector<AfeCheck> out;
  for (const auto& g : grid) out.push_back({g, {}, {}, 0.0});
  parallel_for(grid.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const auto& g = grid[i];
      const StripPoint s{g.sigma, g.t};
      const LValue a = l_afe(s, g.chi, g.delta);
      out[i].afe = a.value;
      out[i].oracle = l_oracle(s.s(), g.chi).value;
      out[i].bound = a.bound;
    }
  }, threads);
  return out;
}

void write_thm1_csv(std::ostream& out, const std::vector<MeanValueReport>& rows) {
  row(out, {"T", "N", "re_sumA", "im_sumA", "sumAbsA2", "re_C", "im_C", "lowerBound", "lowerBound_over_N"});
  for (const auto& r : rows) {
    row(out, {num(r.T), num(r.N), num(r.sumA.real()), num(r.sumA.imag()), num(r.sumAbsA2), num(r.predictedC.real()),
              num(r.predictedC.imag()), num(r.lowerBoundCount), num(r.lower_bound_ratio())});
  }
}

void write_thm2_csv(std::ostream& out, const std::vector<CriticalLineReport>& rows) {
  row(out, {"T", "N", "re_sumA", "im_sumA", "re_sum1", "im_sum1", "re_sum2", "im_sum2", "re_M", "im_M", "sumAbsA2",
            "sumAbsA2_over_TlogT2", "lowerBound", "lowerBound_over_T"});
  for (const auto& r : rows) {
    row(out, {num(r.T), num(r.N), num(r.sumA.real()), num(r.sumA.imag()), num(r.sum1.real()), num(r.sum1.imag()),
              num(r.sum2.real()), num(r.sum2.imag()), num(r.M.real()), num(r.M.imag()), num(r.sumAbsA2),
              num(r.second_moment_ratio()), num(r.lowerBoundCount), num(r.lower_bound_ratio())});
  }
}

void write_landau_csv(std::ostream& out, const std::vector<LandauRow>& rows) {
  row(out, {"x", "T", "N", "re_sum", "im_sum", "main", "budget"});
  for (const auto& r : rows) {
    row(out, {r.x.to_string(), num(r.T), num(r.N), num(r.sum.real()), num(r.sum.imag()), num(r.main), num(r.budget)});
  }
}

void write_afe_csv(std::ostream& out, const std::vector<AfeCheck>& rows) {
  row(out, {"sigma", "t", "chi", "delta", "re_afe", "im_afe", "re_oracle", "im_oracle", "error", "bound", "ok"});
  for (const auto& r : rows) {
    row(out, {num(r.point.sigma), num(r.point.t), r.point.chi.to_string(), num(r.point.delta), num(r.afe.real()),
              num(r.afe.imag()), num(r.oracle.real()), num(r.oracle.imag()), num(r.error()), num(r.bound),
              r.ok() ? "1" : "0"});
  }
}

}  // namespace lzw
