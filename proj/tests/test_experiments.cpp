#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dpplab/error.hpp"
#include "dpplab/experiments.hpp"

using namespace dpplab;
using namespace dpplab::experiments;

namespace {

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

int count_of(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

SweepConfig small(Ensemble e, std::vector<int> ns) {
  SweepConfig c;
  c.ensemble = e;
  c.n_values = std::move(ns);
  c.grid_size = 60;
  return c;
}

}  // namespace

TEST_CASE("bound shapes") {
  CHECK(bound_shape(Ensemble::U, 10, 1.0) == doctest::Approx(100.0 / 9984.0));
  CHECK(bound_shape(Ensemble::SO_even, 10, 2.0) == doctest::Approx(0.4));
  CHECK(bound_shape(Ensemble::SP, 1000, 0.5) == doctest::Approx(0.5 / 1000));
  CHECK(bound_shape(Ensemble::U, 2000, 1.0) * 2000.0 * 2000.0 == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(bound_shape(Ensemble::U, 2, 1.0), DomainError);
}

TEST_CASE("series bound dominates the measured trace norm") {
  for (int n : {8, 16, 64}) {
    const double b = cue_series_bound(n, 1.0);
    CHECK(b > 0.0);
    const auto r = rate_sweep(small(Ensemble::U, {n, 2 * n, 4 * n}));
    CHECK(r.rows[0].trace_norm <= b);
  }
}

TEST_CASE("slope fits") {
  const std::vector<double> xs{1, 2, 4, 8};
  std::vector<double> ys, flat{5, 5, 5, 5}, three;
  for (double x : xs) {
    ys.push_back(1 / (x * x));
    three.push_back(3 / x);
  }
  auto f = slope_fit(xs, ys);
  CHECK(f.slope == doctest::Approx(-2.0));
  CHECK(f.r_squared == doctest::Approx(1.0));
  CHECK(slope_fit(xs, flat).slope == doctest::Approx(0.0).scale(1.0));
  f = slope_fit(xs, three);
  CHECK(f.slope == doctest::Approx(-1.0));
  CHECK(f.intercept == doctest::Approx(std::log(3.0)));
  CHECK_THROWS_AS(slope_fit(std::vector<double>{1, 2}, std::vector<double>{1, 2}), DomainError);
  CHECK_THROWS_AS(slope_fit(std::vector<double>{1, 2, 3}, std::vector<double>{1, 0, 2}), DomainError);
}

TEST_CASE("config parsing") {
  std::istringstream in("# sweep\nensemble = SP\nn-list = 8, 16,32\ns=0.5\ngrid = 40\nseed = 7\nmc_samples = 0\n");
  const auto c = parse_sweep_config(in);
  CHECK(c.ensemble == Ensemble::SP);
  CHECK(c.n_values == std::vector<int>{8, 16, 32});
  CHECK(c.s == 0.5);
  CHECK(c.grid_size == 40);
  CHECK(c.seed == 7);
  std::istringstream bad("colour = blue\n");
  CHECK_THROWS(parse_sweep_config(bad));
  CHECK_THROWS(parse_int_list("4,x"));

  SweepConfig v;
  v.n_values = {2, 4};
  CHECK_THROWS_AS(v.validate(), DomainError);
  v.n_values = {32, 16};
  CHECK_THROWS_AS(v.validate(), DomainError);
  v.n_values = {16, 32};
  v.ensemble = Ensemble::SINE;
  CHECK_THROWS_AS(v.validate(), DomainError);
}

TEST_CASE("rate sweep invariants") {
  for (Ensemble e : kGroupEnsembles) {
    const auto r = rate_sweep(small(e, {16, 32, 64}));
    CAPTURE(to_string(e));
    CHECK(r.ok());
    REQUIRE(r.rows.size() == 3);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      const auto& row = r.rows[i];
      CHECK(row.dtv <= row.w1 + 1e-9);
      CHECK(row.w1 <= row.trace_norm + 1e-9);
      if (i) {
        CHECK(row.n > r.rows[i - 1].n);
        CHECK(row.trace_norm < r.rows[i - 1].trace_norm);
      }
    }
  }
}

TEST_CASE("rate slopes") {
  const auto u = rate_sweep(small(Ensemble::U, {16, 32, 64, 128}));
  CHECK(u.w1_fit.slope == doctest::Approx(-2.0).epsilon(0.1));
  CHECK(u.tnorm_fit.slope == doctest::Approx(-2.0).epsilon(0.1));
  const auto even = rate_sweep(small(Ensemble::SO_even, {16, 32, 64, 128}));
  const auto odd = rate_sweep(small(Ensemble::SO_even, {17, 33, 65, 129}));
  CHECK(even.w1_fit.slope == doctest::Approx(-1.0).epsilon(0.1));
  CHECK(std::abs(even.w1_fit.slope - odd.w1_fit.slope) <= 0.2);
  CHECK(std::abs(even.tnorm_fit.slope - odd.tnorm_fit.slope) <= 0.2);
}

TEST_CASE("monte carlo cross-check in a sweep") {
  auto c = small(Ensemble::U, {16, 32, 64});
  c.mc_samples = 400;
  const auto r = rate_sweep(c);
  CHECK(r.ok());
  for (const auto& row : r.rows) {
    REQUIRE(row.mc.has_value());
    CHECK(row.mc->exact_mean == doctest::Approx(2.0));
  }
}

TEST_CASE("reports") {
  RateReport empty;
  std::ostringstream header;
  emit_report(empty, ReportFormat::csv, header);
  CHECK(header.str() == "ensemble,N,s,w1,dtv,trace_norm,bound_shape,ratio\n");

  const auto r = rate_sweep(small(Ensemble::SP, {16, 32, 64, 128, 256}));
  std::ostringstream csv, again, json, svg;
  emit_report(r, ReportFormat::csv, csv);
  CHECK(count_lines(csv.str()) == 6);
  emit_report(rate_sweep(small(Ensemble::SP, {16, 32, 64, 128, 256})), ReportFormat::csv, again);
  CHECK(csv.str() == again.str());

  emit_report(r, ReportFormat::json, json);
  CHECK(json.str().find("\"rows\"") != std::string::npos);

  emit_report(r, ReportFormat::svg, svg);
  CHECK(count_of(svg.str(), "<polyline") == 2);
  CHECK(svg.str().find("slope") != std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "dpplab_report_test.csv";
  write_report(r, ReportFormat::csv, path.string());
  std::ifstream in(path);
  std::stringstream back;
  back << in.rdbuf();
  CHECK(back.str() == csv.str());
  std::filesystem::remove(path);
  CHECK_THROWS(write_report(r, ReportFormat::csv, "/nonexistent-dir/x.csv"));
  CHECK(parse_report_format("svg") == ReportFormat::svg);
}
