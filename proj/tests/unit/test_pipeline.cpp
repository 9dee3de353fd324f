#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pipeline.hpp"
#include "rpm/errors.hpp"

using namespace rpm;
using namespace rpm::harness;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("rpm_pipeline_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig small(const fs::path& out) {
  RunConfig c;
  c.d_max = 8;
  c.window_hi = "50";
  c.out_dir = out.string();
  return c;
}

void expect_field(const RunConfig& c, const std::string& field) {
  try {
    c.validate();
    FAIL("expected ConfigError for " << field);
  } catch (const ConfigError& e) {
    CHECK(e.field() == field);
  }
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("config validation names the field") {
    RunConfig c;
    CHECK_NOTHROW(c.validate());
    CHECK(c.working_digits() == 78);
    auto with = [](auto edit) {
      RunConfig r;
      edit(r);
      return r;
    };
    expect_field(with([](RunConfig& r) { r.lambda = "one"; }), "lambda");
    expect_field(with([](RunConfig& r) { r.weight = "walls"; }), "weight");
    expect_field(with([](RunConfig& r) { r.d = -1; }), "d");
    expect_field(with([](RunConfig& r) { r.d_max = 1; }), "dmax");
    expect_field(with([](RunConfig& r) { r.digits = 3; }), "digits");
    expect_field(with([](RunConfig& r) { r.window_lo = "5", r.window_hi = "1"; }), "window");
    expect_field(with([](RunConfig& r) { r.outputs = {"plots"}; }), "outputs");
    expect_field(with([](RunConfig& r) { r.format = "xml"; }), "format");
    expect_field(with([](RunConfig& r) { r.out_dir = ""; }), "out");
  }

  TEST_CASE("JSON config round trip and unknown keys") {
    const RunConfig c = RunConfig::from_json_text(
        R"({"lambda": "1/2", "weight": "half-line", "dmax": 9, "window": [0, "75/2"], "format": "json"})");
    CHECK(c.lambda == "1/2");
    CHECK(c.weight == "half-line");
    CHECK(c.d_max == 9);
    CHECK(c.hi() == mpq_class(75, 2));
    const RunConfig back = RunConfig::from_json_text(c.to_json_text());
    CHECK(back.to_json_text() == c.to_json_text());
    CHECK_THROWS_AS(RunConfig::from_json_text(R"({"lamda": 1})"), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json_text("[1, 2]"), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json_text("{"), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json_text(R"({"d": "x"})"), ConfigError);
  }

  TEST_CASE("certified formatting") {
    const Precision p = Precision::digits(60);
    const RootRecord r{BigFloat("10.368507161836337126550886", p), BigFloat("1e-50", p), {16, 0}, true};
    CHECK(format_certified(r) == "10.368507161836337127");
    const RootRecord loose{BigFloat("10.3679", p), BigFloat("0.004", p), {5, 0}, true};
    CHECK(format_certified(loose) == "10.37");
  }

  TEST_CASE("small run writes tables, sequences, figures and report") {
    const fs::path out = scratch("small");
    const std::string summary = run(small(out));
    CHECK(summary.find("bounded_0") != std::string::npos);
    for (const char* f : {"bounded.csv", "unbounded.csv", "report.json", "fig1.csv", "fig2.csv", "fig3.csv", "fig1.svg"})
      CHECK_MESSAGE(fs::exists(out / f), f);
    const std::string table = slurp(out / "bounded.csv");
    CHECK(table.rfind("D,eps_0", 0) == 0);
    CHECK(table.find("\n2,8.9646356172112203708") != std::string::npos);
    CHECK(table.find("Exact,10.368507161836337127") != std::string::npos);
    CHECK(fs::exists(out / "seq_bounded_0_1.csv"));
    const std::string fig2 = slurp(out / "fig2.csv");
    CHECK(fig2.find("\n") != fig2.size() - 1);  // header plus data
  }

  TEST_CASE("identical configs give byte-identical outputs") {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    RunConfig ca = small(a), cb = small(b);
    ca.outputs = cb.outputs = {"table", "sequences"};
    ca.format = cb.format = "json";
    run(ca);
    run(cb);
    for (const char* f : {"bounded.json", "unbounded.json", "seq_unbounded_0_1.csv"}) CHECK(slurp(a / f) == slurp(b / f));
    // report.json echoes the output directory; everything else must agree.
    std::string ra = slurp(a / "report.json"), rb = slurp(b / "report.json");
    const auto strip = [](std::string s, const std::string& dir) {
      for (auto pos = s.find(dir); pos != std::string::npos; pos = s.find(dir)) s.erase(pos, dir.size());
      return s;
    };
    CHECK(strip(ra, a.string()) == strip(rb, b.string()));
  }

  TEST_CASE("tables agree with the report") {
    const fs::path out = scratch("agree");
    RunConfig c = small(out);
    c.outputs = {"table"};
    run(c);
    const std::string report = slurp(out / "report.json");
    int cells = 0;
    for (const char* name : {"bounded.csv", "unbounded.csv"}) {
    std::istringstream table(slurp(out / name));
    std::string line;
    std::getline(table, line);
    while (std::getline(table, line)) {
      if (line.rfind("Exact", 0) == 0) continue;
      std::stringstream row(line);
      std::string cell;
      std::getline(row, cell, ',');
      while (std::getline(row, cell, ',')) {
        if (cell.empty()) continue;
        ++cells;
        CHECK_MESSAGE(report.find("\"cell\": \"" + cell + "\"") != std::string::npos, cell);
      }
    }
    }
    CHECK(cells > 5);
  }

  TEST_CASE("failure removes partial outputs") {
    const fs::path out = scratch("partial");
    fs::create_directories(out / "report.json");  // a directory where the report should go
    RunConfig c = small(out);
    c.outputs = {"table"};
    CHECK_THROWS_AS(run(c), StageError);
    CHECK(!fs::exists(out / "bounded.csv"));
    CHECK(!fs::exists(out / "unbounded.csv"));
  }

  TEST_CASE("stage errors carry the stage and config") {
    RunConfig c = small(scratch("stage"));
    c.d_max = 3;
    c.digits = 10;
    c.window_lo = "-1000000";
    c.window_hi = "1000000";
    try {
      (void)compute(c);
    } catch (const StageError& e) {
      CHECK(std::string(e.what()).find("config:") != std::string::npos);
    } catch (...) {
      FAIL("unexpected exception type");
    }
  }

  TEST_CASE("zero field converges to pi^2") {
    RunConfig c = small(scratch("flat"));
    c.lambda = "0";
    c.d_max = 12;
    const RunResult r = compute(c);
    const auto idx = fastest(r.sequences, SequenceLabel::bounded(0));
    REQUIRE(idx);
    const BigFloat& v = r.sequences[*idx].last().value;
    const Precision p = v.precision();
    CHECK(abs(v - pi(p) * pi(p)) < pow10(-8, p));
  }

  TEST_CASE("figures") {
    const fs::path out = scratch("figs");
    RunConfig c = small(out);
    c.d_max = 6;
    c.outputs = {"table"};
    run(c);
    const FigureData f2 = figure_from_run_dir(out, Figure::Fig2);
    CHECK(!f2.series.empty());
    const FigureData f1 = figure_from_run_dir(out, Figure::Fig1);
    for (const auto& s : f1.series) CHECK(!s.points.empty());
    const FigureData f3 = figure_from_run_dir(out, Figure::Fig3);
    REQUIRE(f3.series.size() == 2);
    CHECK(f3.series[0].name == "box-walls");
    CHECK(f3.series[1].name == "half-line");
    CHECK(figure_svg(f3).find("<svg") == 0);
    CHECK(figure_csv(f3).rfind("series,D,log10_error\n", 0) == 0);
    try {
      (void)figure_from_run_dir(scratch("nothing"), Figure::Fig1);
      FAIL("expected StageError");
    } catch (const StageError& e) {
      CHECK(std::string(e.what()).find("run") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_figure("fig9"), ConfigError);
  }
}
