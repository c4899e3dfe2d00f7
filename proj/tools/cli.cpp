#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "lzw/characters.hpp"
#include "lzw/criticalline.hpp"
#include "lzw/error.hpp"
#include "lzw/kernels.hpp"
#include "lzw/landau.hpp"
#include "lzw/lfunc.hpp"
#include "lzw/meanvalues.hpp"
#include "lzw/parallel.hpp"
#include "lzw/report.hpp"
#include "lzw/specfun.hpp"
#include "lzw/zeros.hpp"

namespace lzw::cli {

namespace {

// A failure tied to one command line field.
struct FieldError {
  ErrorClass cls;
  std::string text;
};

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw FieldError{ErrorClass::config, "ConfigError: " + field + ": " + what};
}

template <class F>
auto field(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    const ErrorClass cls = classify(e.code());
    throw FieldError{cls, (cls == ErrorClass::config ? "ConfigError: " : "") + name + ": " + e.what()};
  }
}

struct Options {
  std::string zeros;
  std::string T = "";
  double sigma = 0.75;
  std::string char1 = "3:1";
  std::string char2 = "5:2";
  std::string P = "auto";
  std::string p = "auto";
  std::string x = "2";
  std::string out;
  std::string method = "afe";
  double audit_rate = 0.01;
  unsigned threads = 0;
  std::string simd = "auto";
  bool seed_check = false;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

double parse_real(const std::string& name, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    bad(name, "'" + text + "' is not a number");
  }
  if (used != text.size() || !std::isfinite(v)) bad(name, "'" + text + "' is not a number");
  return v;
}

std::vector<double> parse_heights(const std::string& text) {
  if (text.empty()) bad("--T", "required");
  std::vector<double> Ts;
  for (const auto& part : split(text)) {
    const double T = parse_real("--T", part);
    if (!(T > 10.0)) bad("--T", "heights must exceed 10");
    Ts.push_back(T);
  }
  if (Ts.empty()) bad("--T", "required");
  std::sort(Ts.begin(), Ts.end());
  Ts.erase(std::unique(Ts.begin(), Ts.end()), Ts.end());
  return Ts;
}

std::int64_t parse_prime_or_auto(const std::string& name, const std::string& text) {
  if (text == "auto") return 0;
  const double v = parse_real(name, text);
  if (v != std::floor(v) || v < 2 || v > 1e9) bad(name, "'" + text + "' is not a prime");
  const auto n = static_cast<std::int64_t>(v);
  if (!is_prime(n)) bad(name, std::to_string(n) + " is not a prime");
  return n;
}

Method parse_method(const std::string& text) {
  if (text == "afe") return Method::afe;
  if (text == "oracle") return Method::oracle;
  bad("--method", "expected afe or oracle, got '" + text + "'");
}

ZeroTable obtain_zeros(const std::string& source, double T_max) {
  std::string where = source;
  if (where.empty()) {
    const char* env = std::getenv("ZETA_ZEROS_PATH");
    where = env && *env ? env : "compute";
  }
  if (where == "compute") {
    if (T_max > 1e4) bad("--T", "computed zero tables stop at 10000; pass --zeros with a file");
    return field("--zeros", [&] { return compute_zeros(std::max(T_max, 15.0)); });
  }
  ZeroTable z = load_zeros(where);
  if (z.coverage < T_max) {
    throw FieldError{ErrorClass::config, "ConfigError: --zeros: " + where + " covers only up to " +
                                             format_number(z.coverage) + ", below T = " + format_number(T_max)};
  }
  return z;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error(Errc::io_error, "cannot open " + o.out + " for writing");
  f << text;
  f.close();
  if (!f) throw Error(Errc::io_error, "write to " + o.out + " failed");
}

std::string cmd_zeros(const Options& o) {
  const auto Ts = parse_heights(o.T);
  const ZeroTable z = obtain_zeros(o.zeros, Ts.back());
  ZeroTable cut = z;
  cut.ordinates.resize(count(z, Ts.back()));
  cut.coverage = Ts.back();
  std::ostringstream s;
  write_zeros(cut, s);
  return s.str();
}

std::string cmd_landau(const Options& o) {
  const auto Ts = parse_heights(o.T);
  std::vector<RationalPoint> xs;
  for (const auto& part : split(o.x)) xs.push_back(field("--x", [&] { return RationalPoint::parse(part); }));
  if (xs.empty()) bad("--x", "required");
  const ZeroTable z = obtain_zeros(o.zeros, Ts.back());
  std::vector<LandauRow> rows;
  for (const auto& x : xs) {
    for (double T : Ts) rows.push_back(landau_row(x, z, T, o.threads));
  }
  std::ostringstream s;
  write_landau_csv(s, rows);
  return s.str();
}

std::string cmd_afe_verify(const Options& o, bool& breach) {
  const auto rows = afe_verify(afe_grid(), o.threads);
  breach = std::any_of(rows.begin(), rows.end(), [](const AfeCheck& c) { return !c.ok(); });
  std::ostringstream s;
  write_afe_csv(s, rows);
  return s.str();
}

std::string cmd_thm1(const Options& o) {
  const auto Ts = parse_heights(o.T);
  const auto chi1 = field("--char1", [&] { return DirichletCharacter::parse(o.char1); });
  const auto chi2 = field("--char2", [&] { return DirichletCharacter::parse(o.char2); });
  std::int64_t P = parse_prime_or_auto("--P", o.P);
  if (P == 0) P = default_cutoff(chi1, chi2);
  const auto b = field("--P", [&] { return build_b_polynomial(P, chi1, chi2); });
  if (!(o.sigma > 0.5 && o.sigma < 1.0)) bad("--sigma", "must lie strictly between 1/2 and 1");
  Thm1Options opt;
  opt.sigma = o.sigma;
  opt.method = parse_method(o.method);
  opt.audit_rate = o.audit_rate;
  opt.threads = o.threads;
  const ZeroTable z = obtain_zeros(o.zeros, Ts.back());
  std::ostringstream s;
  write_thm1_csv(s, thm1_reports(z, Ts, b, opt));
  return s.str();
}

std::string cmd_thm2(const Options& o) {
  const auto Ts = parse_heights(o.T);
  const auto chi1 = field("--char1", [&] { return DirichletCharacter::parse(o.char1); });
  const auto chi2 = field("--char2", [&] { return DirichletCharacter::parse(o.char2); });
  const std::int64_t p = parse_prime_or_auto("--p", o.p);
  const auto cfg = field("--p", [&] { return CriticalLineConfig::make(chi1, chi2, p); });
  Thm2Options opt;
  opt.method = parse_method(o.method);
  opt.audit_rate = o.audit_rate;
  opt.threads = o.threads;
  const ZeroTable z = obtain_zeros(o.zeros, Ts.back());
  std::ostringstream s;
  write_thm2_csv(s, thm2_reports(z, Ts, cfg, opt));
  return s.str();
}

void apply_simd(const std::string& level) {
  if (level == "auto") return;
  if (level == "scalar") return simd::force_level(simd::Level::scalar);
  if (level == "avx2") return field("--simd", [] { simd::force_level(simd::Level::avx2); });
  bad("--simd", "expected auto, scalar or avx2, got '" + level + "'");
}

int exit_code(ErrorClass c) {
  switch (c) {
    case ErrorClass::config: return 1;
    case ErrorClass::numerical: return 2;
    case ErrorClass::io: return 3;
  }
  return 2;
}

}  // namespace

int seed_check() {
  int checks = 0;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::accuracy_loss, "seed check failed: " + what);
    ++checks;
  };
  for (std::int64_t q : {3, 5, 7, 11, 13}) {
    for (std::int64_t j = 1; j < q - 1; ++j) {
      const auto chi = character(q, j);
      require(std::abs(std::norm(gauss_sum(1, chi)) - static_cast<double>(q)) < 1e-12,
              "|G(1, chi)|^2 = q for " + chi.to_string());
    }
  }
  const double pi2 = std::numbers::pi * std::numbers::pi;
  require(std::abs(hurwitz_zeta({2.0, 0.0}, 1, 1).value - pi2 / 6.0) < 1e-13, "zeta(2)");
  const ZeroTable z = compute_zeros(100.0);
  require(z.size() == 29, "29 zeros up to 100");
  require(std::abs(z.ordinates.front() - 14.134725141734693) < 1e-8, "first zero");
  for (const auto& [q, j] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{5, 2}}) {
    const auto chi = character(q, j);
    const StripPoint s{0.6, 300.0};
    const LValue a = l_afe(s, chi, 1.0);
    require(std::abs(a.value - l_oracle(s.s(), chi).value) <= a.bound, "AFE bound for " + chi.to_string());
  }
  auto b = std::make_shared<const BPolynomial>(5, character(3, 1), character(5, 2));
  for (SeriesKind k : {SeriesKind::d, SeriesKind::e}) {
    CoefficientSeries series(b, k);
    for (std::uint64_t n = 1; n <= 1000; ++n) series.exact(n);
    ++checks;
  }
  return checks;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero sums of zeta against Dirichlet L-functions"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "worker threads (0 = hardware)");
  app.add_option("--simd", o.simd, "kernel level: auto, scalar, avx2");
  app.add_flag("--seed-check", o.seed_check, "run fast invariant checks first");

  auto zeros_opt = [&](CLI::App* c) {
    c->add_option("--zeros", o.zeros, "zero file or 'compute' (default $ZETA_ZEROS_PATH, then compute)");
    c->add_option("--out", o.out, "output file (default stdout)");
  };
  auto* zeros = app.add_subcommand("zeros", "write the zero table up to T");
  zeros_opt(zeros);
  zeros->add_option("--T", o.T, "height")->required();

  auto* landau = app.add_subcommand("landau", "sums of x^rho over zeros");
  zeros_opt(landau);
  landau->add_option("--T", o.T, "heights, comma separated")->required();
  landau->add_option("--x", o.x, "points a or a/b, comma separated");

  auto* afe = app.add_subcommand("afe-verify", "approximate functional equation against the Hurwitz oracle");
  afe->add_option("--out", o.out, "output file (default stdout)");

  auto* thm1 = app.add_subcommand("thm1", "mean of zeta' L-quotients off the line");
  zeros_opt(thm1);
  thm1->add_option("--T", o.T, "heights, comma separated")->required();
  thm1->add_option("--sigma", o.sigma, "real part, 1/2 < sigma < 1");
  thm1->add_option("--char1", o.char1, "first character q:j");
  thm1->add_option("--char2", o.char2, "second character q:j");
  thm1->add_option("--P", o.P, "mollifier cutoff prime or auto");
  thm1->add_option("--method", o.method, "afe or oracle");
  thm1->add_option("--audit-rate", o.audit_rate, "fraction of AFE values rechecked by the oracle")
      ->check(CLI::Range(0.0, 1.0));

  auto* thm2 = app.add_subcommand("thm2", "sums of p^rho L(rho, chi) on the line");
  zeros_opt(thm2);
  thm2->add_option("--T", o.T, "heights, comma separated")->required();
  thm2->add_option("--char1", o.char1, "first character q:j");
  thm2->add_option("--char2", o.char2, "second character q:j");
  thm2->add_option("--p", o.p, "prime or auto");
  thm2->add_option("--method", o.method, "afe or oracle");
  thm2->add_option("--audit-rate", o.audit_rate, "fraction of AFE values rechecked by the oracle")
      ->check(CLI::Range(0.0, 1.0));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ConfigError: " << e.what() << '\n';
    return 1;
  }

  try {
    apply_simd(o.simd);
    set_thread_count(o.threads);
    if (o.seed_check) err << "seed-check: " << seed_check() << " checks passed\n";
    std::string text;
    bool breach = false;
    if (*zeros) text = cmd_zeros(o);
    else if (*landau) text = cmd_landau(o);
    else if (*afe) text = cmd_afe_verify(o, breach);
    else if (*thm1) text = cmd_thm1(o);
    else text = cmd_thm2(o);
    emit(o, out, text);
    if (breach) {
      err << "BoundViolation: AFE error exceeded its bound on the grid\n";
      return 2;
    }
    return 0;
  } catch (const FieldError& e) {
    err << e.text << '\n';
    return exit_code(e.cls);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code(classify(e.code()));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace lzw::cli
