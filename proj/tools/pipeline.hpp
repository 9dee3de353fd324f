#pragma once

#include <gmpxx.h>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rpm/airy.hpp"
#include "rpm/errors.hpp"
#include "rpm/hankel.hpp"
#include "rpm/riccati.hpp"
#include "rpm/sequences.hpp"

namespace rpm::harness {

/// Invalid run configuration; `field` names the offending setting.
class ConfigError : public InvalidArgument {
 public:
  ConfigError(std::string field, const std::string& message)
      : InvalidArgument(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// A pipeline stage failed; the message carries the stage and a config echo.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& message) : Error(message), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct RunConfig {
  std::string lambda = "1";
  std::string weight = "box-walls";
  int d = 0;
  int d_max = 16;
  std::optional<int> digits;  ///< default 30 + 3 * d_max
  std::string window_lo = "0";
  std::string window_hi = "200";
  std::vector<std::string> outputs = {"table", "sequences", "figure-data"};
  std::string format = "csv";
  std::string out_dir = "rpm_out";
  double match_tol = kDefaultMatchTol;
  int oracle_digits = 40;

  /// Throws ConfigError naming the first invalid field.
  void validate() const;

  mpq_class lambda_value() const;
  WeightSpec weight_spec() const;
  mpq_class lo() const;
  mpq_class hi() const;
  int working_digits() const { return digits.value_or(default_digits(d_max)); }
  bool wants(const std::string& output) const;

  /// Reads a JSON object; unknown keys are rejected.
  static RunConfig from_json_text(const std::string& text);
  static RunConfig from_json_file(const std::filesystem::path& path);
  std::string to_json_text() const;
};

/// First D of every run.
inline constexpr int kFirstDimension = 2;

struct RunResult {
  RunConfig config;
  std::map<int, std::vector<RootRecord>> roots;  ///< D -> roots in the window
  std::vector<RootSequence> sequences;
  /// Per-sequence remark (empty when none), e.g. oracle range exceeded.
  std::vector<std::string> notes;
};

/// coefficients -> isolate_roots per D -> cluster_roots -> classify. No I/O.
/// Throws ConfigError or StageError.
RunResult compute(const RunConfig& config);

/// Tables 1-2 layout: rows are D, columns eps_n, plus an Exact row.
struct TableView {
  Model model = Model::Bounded;
  std::vector<int> columns;                        ///< eigenvalue indices n
  std::map<int, std::map<int, std::string>> cells;  ///< D -> n -> printed value
  std::map<int, std::string> exact;                ///< n -> oracle value
};

/// Largest number of significant digits printed in any table cell.
inline constexpr int kMaxCellDigits = 20;

/// Decimal rendering of a root keeping only the digits its radius certifies,
/// at most kMaxCellDigits significant.
std::string format_certified(const RootRecord& root);

/// Each cell is the member at D of the labeled sequence closest to the
/// oracle at that D.
TableView make_table(const RunResult& result, Model model);

enum class Figure { Fig1, Fig2, Fig3 };
Figure parse_figure(const std::string& name);
std::string to_string(Figure f);

struct FigureSeries {
  std::string name;
  std::vector<std::pair<int, double>> points;  ///< (D, log10 error)
};

struct FigureData {
  Figure which = Figure::Fig1;
  std::vector<FigureSeries> series;
};

/// fig1: every Bounded(0) sequence. fig2: every Unbounded(0) sequence with
/// D <= 16. fig3: the fastest Unbounded(0) sequence for each weight; the
/// other weight is computed when `other` is null.
FigureData make_figure(const RunResult& result, Figure which, const RunResult* other = nullptr);

std::string figure_csv(const FigureData& fig);
std::string figure_svg(const FigureData& fig);

/// Writes the requested outputs plus report.json into config.out_dir and
/// returns the written paths. Files written before a failure are removed.
std::vector<std::filesystem::path> write_outputs(const RunResult& result, const RunResult* other_weight = nullptr);

/// compute + write_outputs; returns a short human-readable summary.
std::string run(const RunConfig& config);

/// Rebuilds figure data from a run directory. Throws StageError (stage
/// "figure") suggesting `run` when the directory holds no report.
FigureData figure_from_run_dir(const std::filesystem::path& dir, Figure which);

}  // namespace rpm::harness
