#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "lzw/kernels.hpp"
#include "lzw/report.hpp"
#include "lzw/zeros.hpp"

using namespace lzw;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lzw_test_" + name);
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1e300) == "1e+300");
  for (double v : {1.0 / 3.0, 14.134725141734693, -2.5e-17, 6.02214076e23}) {
    CHECK(std::stod(format_number(v)) == v);
  }
}

TEST_CASE("mean value CSV") {
  const auto r = run({"thm1", "--zeros", "compute", "--T", "2000", "--sigma", "0.75", "--char1", "3:1", "--char2", "5:1"});
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("T,N,re_sumA,im_sumA,sumAbsA2,re_C,im_C,lowerBound,lowerBound_over_N\n", 0) == 0);
  CHECK(lines(r.out) == 2);
  CHECK(r.out.find("\n2000,1517,") != std::string::npos);

  const auto t2 = run({"thm2", "--T", "1000,2000", "--zeros", "compute"});
  REQUIRE(t2.status == 0);
  CHECK(lines(t2.out) == 3);
}

TEST_CASE("landau row") {
  const auto r = run({"landau", "--x", "2", "--T", "1000", "--zeros", "compute"});
  REQUIRE(r.status == 0);
  CHECK(lines(r.out) == 2);
  CHECK(r.out.find("\n2,1000,649,") != std::string::npos);
}

TEST_CASE("byte identical output") {
  const std::vector<std::string> base = {"thm1", "--T", "500,1000", "--zeros", "compute"};
  auto with_threads = [&](const char* n) {
    auto a = base;
    a.insert(a.begin(), {"--threads", n});
    return run(a);
  };
  const auto first = with_threads("1");
  REQUIRE(first.status == 0);
  CHECK(with_threads("1").out == first.out);
  CHECK(with_threads("4").out == first.out);
  CHECK(with_threads("7").out == first.out);

  const auto l1 = run({"--threads", "1", "landau", "--x", "2,15/2,6", "--T", "1000,2000"});
  const auto l8 = run({"--threads", "8", "landau", "--x", "2,15/2,6", "--T", "1000,2000"});
  CHECK(l1.status == 0);
  CHECK(l1.out == l8.out);

  const auto t1 = run({"--threads", "1", "thm2", "--T", "1000"});
  const auto t8 = run({"--threads", "8", "thm2", "--T", "1000"});
  CHECK(t1.out == t8.out);
  simd::force_level(simd::level_supported(simd::Level::avx2) ? simd::Level::avx2 : simd::Level::scalar);
}

TEST_CASE("zero tables through files and the environment") {
  const auto path = temp_file("zeros.txt");
  const auto z = run({"zeros", "--T", "200", "--out", path.string()});
  REQUIRE(z.status == 0);
  CHECK(z.out.empty());
  const auto table = load_zeros(path);
  CHECK(table.size() == 79);
  CHECK(table.coverage == 200.0);

  const auto from_file = run({"landau", "--T", "200", "--zeros", path.string()});
  CHECK(from_file.status == 0);
  ::setenv("ZETA_ZEROS_PATH", path.c_str(), 1);
  const auto from_env = run({"landau", "--T", "200"});
  CHECK(from_env.out == from_file.out);
  const auto too_high = run({"landau", "--T", "300"});
  CHECK(too_high.status == 1);
  CHECK(too_high.err.find("--zeros") != std::string::npos);
  ::unsetenv("ZETA_ZEROS_PATH");
  CHECK(run({"landau", "--T", "300"}).status == 0);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  const auto bad_char = run({"thm1", "--T", "1000", "--char1", "4:1"});
  CHECK(bad_char.status == 1);
  CHECK(bad_char.err.find("--char1") != std::string::npos);
  CHECK(bad_char.err.find("NonPrimeModulus") != std::string::npos);

  CHECK(run({"thm1", "--T", "1000", "--P", "3"}).status == 1);
  CHECK(run({"thm1", "--T", "1000", "--P", "4"}).status == 1);
  CHECK(run({"thm1", "--T", "1000", "--sigma", "1.2"}).status == 1);
  CHECK(run({"thm2", "--T", "1000", "--char2", "3:1"}).status == 1);
  CHECK(run({"thm2", "--T", "1000", "--p", "5"}).status == 1);
  CHECK(run({"thm2", "--T", "abc"}).status == 1);
  CHECK(run({"landau", "--T", "100", "--x", "1"}).status == 1);
  CHECK(run({"landau", "--T", "20000"}).status == 1);
  CHECK(run({"--simd", "sse9", "afe-verify"}).status == 1);
  CHECK(run({"frobnicate"}).status == 1);
  CHECK(run({"thm1", "--T", "100", "--zeros", "/nonexistent/zeros.txt"}).status == 3);
  CHECK(run({"thm1", "--T", "100", "--out", "/nonexistent/dir/out.csv"}).status == 3);

  const auto garbled = temp_file("garbled.txt");
  std::ofstream(garbled) << "14.13\n21.02\nnot-a-number\n";
  const auto parse = run({"landau", "--T", "20", "--zeros", garbled.string()});
  CHECK(parse.status == 3);
  CHECK(parse.err.find("garbled.txt:3:") != std::string::npos);
  std::filesystem::remove(garbled);
}

TEST_CASE("verification sweep and seed check") {
  const auto grid = afe_grid();
  CHECK(grid.size() == 240);
  const auto r = run({"--seed-check", "afe-verify"});
  CHECK(r.status == 0);
  CHECK(lines(r.out) == 241);
  CHECK(r.out.find(",0\n") == std::string::npos);
  CHECK(r.err.find("seed-check") != std::string::npos);
  CHECK(cli::seed_check() > 30);
}
