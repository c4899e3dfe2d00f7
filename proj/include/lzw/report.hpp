#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "lzw/characters.hpp"
#include "lzw/criticalline.hpp"
#include "lzw/landau.hpp"
#include "lzw/lfunc.hpp"
#include "lzw/meanvalues.hpp"

namespace lzw {

/// Shortest decimal that reads back to the same double. Locale independent.
std::string format_number(double v);

struct LandauRow {
  RationalPoint x;
  double T = 0.0;
  std::size_t N = 0;
  std::complex<double> sum;
  double main = 0.0;
  double budget = 0.0;
};

LandauRow landau_row(const RationalPoint& x, const ZeroTable& zeros, double T, unsigned threads = 0);

/// One point of the AFE verification sweep.
struct AfeCase {
  double sigma = 0.0;
  double t = 0.0;
  DirichletCharacter chi{3, 1};
  double delta = 1.0;
};

struct AfeCheck {
  AfeCase point;
  std::complex<double> afe;
  std::complex<double> oracle;
  double bound = 0.0;
  double error() const { return std::abs(afe - oracle); }
  bool ok() const { return error() <= bound; }
};

/// sigma in {0.55, 0.6, 0.75, 0.9}, t in {100, 500, 1000, 2000, 5000}, every
/// non-principal character mod 3 and mod 5, delta in {1, sqrt q, 2}: 240 points.
std::vector<AfeCase> afe_grid();

std::vector<AfeCheck> afe_verify(const std::vector<AfeCase>& grid, unsigned threads = 0);

void write_thm1_csv(std::ostream& out, const std::vector<MeanValueReport>& rows);
void write_thm2_csv(std::ostream& out, const std::vector<CriticalLineReport>& rows);
void write_landau_csv(std::ostream& out, const std::vector<LandauRow>& rows);
void write_afe_csv(std::ostream& out, const std::vector<AfeCheck>& rows);

}  // namespace lzw
