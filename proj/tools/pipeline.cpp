#include "pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rpm/rational_poly.hpp"

namespace rpm::harness {
namespace {

using ordered_json = nlohmann::ordered_json;

const std::set<std::string> kOutputs = {"table", "sequences", "figure-data"};
constexpr int kFigureMaxDimension = 16;

template <class Fn>
auto stage(const std::string& name, const RunConfig& config, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, "stage " + name + " failed: " + e.what() + "; config: " + config.to_json_text());
  }
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string model_key(Model m) { return m == Model::Bounded ? "bounded" : "unbounded"; }

void write_file(const std::filesystem::path& path, const std::string& content, std::vector<std::filesystem::path>& written) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  written.push_back(path);
  out << content;
  if (!out) throw Error("failed writing " + path.string());
}

std::string table_csv(const TableView& t) {
  std::ostringstream os;
  os << "D";
  for (int n : t.columns) os << ",eps_" << n;
  os << "\n";
  for (const auto& [d, row] : t.cells) {
    os << d;
    for (int n : t.columns) {
      os << ",";
      if (auto it = row.find(n); it != row.end()) os << it->second;
    }
    os << "\n";
  }
  os << "Exact";
  for (int n : t.columns) os << "," << t.exact.at(n);
  os << "\n";
  return os.str();
}

std::string table_json(const TableView& t) {
  ordered_json j;
  j["model"] = model_key(t.model);
  ordered_json cols = ordered_json::array();
  for (int n : t.columns) cols.push_back("eps_" + std::to_string(n));
  j["columns"] = cols;
  ordered_json rows = ordered_json::array();
  for (const auto& [d, row] : t.cells) {
    ordered_json r;
    r["D"] = d;
    for (int n : t.columns)
      if (auto it = row.find(n); it != row.end()) r["eps_" + std::to_string(n)] = it->second;
    rows.push_back(r);
  }
  j["rows"] = rows;
  ordered_json exact;
  for (int n : t.columns) exact["eps_" + std::to_string(n)] = t.exact.at(n);
  j["exact"] = exact;
  return j.dump(2) + "\n";
}

std::string sequence_csv(const RootSequence& s, int floor_digits) {
  std::ostringstream os;
  os << "D,root,log10_error\n";
  const auto report = convergence_report(s, floor_digits);
  for (const auto& [d, err] : report) os << d << "," << format_certified(s.members.at(d)) << "," << fixed(err, 6) << "\n";
  return os.str();
}

std::string report_json(const RunResult& r) {
  const RunConfig& c = r.config;
  ordered_json j;
  j["config"] = ordered_json::parse(c.to_json_text());
  ordered_json settings;
  settings["d"] = c.d;
  settings["digits"] = c.working_digits();
  settings["hankel_guard_digits"] = hankel_guard_digits(c.d_max);
  settings["first_dimension"] = kFirstDimension;
  settings["match_tol"] = c.match_tol;
  const ClassifyPolicy policy;
  settings["classify_factor"] = policy.factor;
  settings["classify_converged_step"] = policy.converged_step;
  settings["classify_min_members"] = policy.min_members;
  settings["oracle_digits"] = c.oracle_digits;
  settings["max_cell_digits"] = kMaxCellDigits;
  j["settings"] = settings;

  ordered_json counts = ordered_json::object();
  for (const auto& [d, roots] : r.roots) counts[std::to_string(d)] = roots.size();
  j["roots_per_dimension"] = counts;

  std::map<std::string, size_t> fastest_of;
  for (size_t i = 0; i < r.sequences.size(); ++i) {
    const auto& lab = r.sequences[i].label;
    if (lab.resolved() && !fastest_of.count(lab.to_string())) fastest_of[lab.to_string()] = *fastest(r.sequences, lab);
  }

  ordered_json seqs = ordered_json::array();
  const int value_digits = c.working_digits();
  for (size_t i = 0; i < r.sequences.size(); ++i) {
    const RootSequence& s = r.sequences[i];
    ordered_json js;
    js["id"] = i;
    js["label"] = s.label.to_string();
    js["fastest"] = s.label.resolved() && fastest_of.at(s.label.to_string()) == i;
    if (s.limit) js["limit"] = s.limit->to_string(c.oracle_digits);
    if (!r.notes[i].empty()) js["note"] = r.notes[i];
    std::map<int, double> log_err;
    if (s.label.resolved())
      for (const auto& [d, e] : convergence_report(s, c.oracle_digits)) log_err[d] = e;
    ordered_json members = ordered_json::array();
    for (const auto& [d, rec] : s.members) {
      ordered_json m;
      m["D"] = d;
      m["value"] = rec.value.to_string(value_digits);
      m["cell"] = format_certified(rec);
      m["radius"] = rec.radius.is_zero() ? std::string("0") : rec.radius.to_scientific(3);
      if (auto it = log_err.find(d); it != log_err.end()) m["log10_error"] = fixed(it->second, 6);
      members.push_back(m);
    }
    js["members"] = members;
    seqs.push_back(js);
  }
  j["sequences"] = seqs;

  for (Model m : {Model::Bounded, Model::Unbounded}) {
    const TableView t = make_table(r, m);
    ordered_json exact;
    for (int n : t.columns) exact["eps_" + std::to_string(n)] = t.exact.at(n);
    j["exact_" + model_key(m)] = exact;
  }
  return j.dump(2) + "\n";
}

RunConfig other_weight(const RunConfig& c) {
  RunConfig o = c;
  o.weight = c.weight == "box-walls" ? "half-line" : "box-walls";
  return o;
}

FigureSeries series_of(const RootSequence& s, const std::string& name, int floor_digits, int max_d) {
  FigureSeries fs{name, {}};
  for (const auto& pt : convergence_report(s, floor_digits))
    if (pt.first <= max_d) fs.points.push_back(pt);
  return fs;
}

}  // namespace

// ---- RunConfig ----------------------------------------------------------------

void RunConfig::validate() const {
  try {
    (void)parse_rational(lambda);
  } catch (const std::exception&) {
    throw ConfigError("lambda", "not a rational number: \"" + lambda + "\"");
  }
  if (weight != "box-walls" && weight != "half-line") {
    throw ConfigError("weight", "must be \"box-walls\" or \"half-line\", got \"" + weight + "\"");
  }
  if (d < 0) throw ConfigError("d", "must be >= 0");
  if (d_max < kFirstDimension) throw ConfigError("dmax", "must be >= " + std::to_string(kFirstDimension));
  if (d_max > 40) throw ConfigError("dmax", "must be <= 40");
  if (digits && (*digits < 10 || *digits > 2000)) throw ConfigError("digits", "must lie in [10, 2000]");
  mpq_class a, b;
  try {
    a = parse_rational(window_lo);
    b = parse_rational(window_hi);
  } catch (const std::exception&) {
    throw ConfigError("window", "bounds must be rational numbers");
  }
  if (!(a < b)) throw ConfigError("window", "lower bound must be below upper bound");
  for (const auto& o : outputs)
    if (!kOutputs.count(o)) throw ConfigError("outputs", "unknown output \"" + o + "\" (table, sequences, figure-data)");
  if (format != "csv" && format != "json") throw ConfigError("format", "must be \"csv\" or \"json\"");
  if (out_dir.empty()) throw ConfigError("out", "output directory must not be empty");
  if (!(match_tol > 0 && match_tol < 1)) throw ConfigError("match_tol", "must lie in (0, 1)");
  if (oracle_digits < 20 || oracle_digits > 500) throw ConfigError("oracle_digits", "must lie in [20, 500]");
}

mpq_class RunConfig::lambda_value() const { return parse_rational(lambda); }
WeightSpec RunConfig::weight_spec() const { return WeightSpec::parse(weight); }
mpq_class RunConfig::lo() const { return parse_rational(window_lo); }
mpq_class RunConfig::hi() const { return parse_rational(window_hi); }
bool RunConfig::wants(const std::string& output) const {
  return std::find(outputs.begin(), outputs.end(), output) != outputs.end();
}

RunConfig RunConfig::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config", "top level must be an object");
  RunConfig c;
  for (const auto& [key, v] : j.items()) {
    try {
      if (key == "lambda") {
        c.lambda = v.is_string() ? v.get<std::string>() : v.dump();
      } else if (key == "weight") {
        c.weight = v.get<std::string>();
      } else if (key == "d") {
        c.d = v.get<int>();
      } else if (key == "dmax" || key == "d_max") {
        c.d_max = v.get<int>();
      } else if (key == "digits") {
        if (!v.is_null()) c.digits = v.get<int>();
      } else if (key == "window") {
        if (!v.is_array() || v.size() != 2) throw ConfigError("window", "must be a two-element array");
        c.window_lo = v[0].is_string() ? v[0].get<std::string>() : v[0].dump();
        c.window_hi = v[1].is_string() ? v[1].get<std::string>() : v[1].dump();
      } else if (key == "outputs") {
        c.outputs = v.get<std::vector<std::string>>();
      } else if (key == "format") {
        c.format = v.get<std::string>();
      } else if (key == "out" || key == "out_dir") {
        c.out_dir = v.get<std::string>();
      } else if (key == "match_tol") {
        c.match_tol = v.get<double>();
      } else if (key == "oracle_digits") {
        c.oracle_digits = v.get<int>();
      } else {
        throw ConfigError(key, "unknown configuration key");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(key, std::string("wrong type: ") + e.what());
    }
  }
  return c;
}

RunConfig RunConfig::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string RunConfig::to_json_text() const {
  ordered_json j;
  j["lambda"] = lambda;
  j["weight"] = weight;
  j["d"] = d;
  j["dmax"] = d_max;
  j["digits"] = working_digits();
  j["window"] = {window_lo, window_hi};
  j["outputs"] = outputs;
  j["format"] = format;
  j["out"] = out_dir;
  j["match_tol"] = match_tol;
  j["oracle_digits"] = oracle_digits;
  return j.dump();
}

// ---- compute --------------------------------------------------------------------

RunResult compute(const RunConfig& config) {
  config.validate();
  RunResult r;
  r.config = config;
  const int digits = config.working_digits();
  const HankelSpec top{config.d_max, config.d};

  const CoefficientTable table = stage("riccati-series", config, [&] {
    return coefficients(config.weight_spec(), LinearPotential{config.lambda_value()}, top.max_index());
  });

  stage("hankel-quantization", config, [&] {
    const mpq_class lo = config.lo(), hi = config.hi();
    std::vector<std::future<std::vector<RootRecord>>> jobs;
    for (int dim = kFirstDimension; dim <= config.d_max; ++dim) {
      jobs.push_back(std::async(std::launch::async, [&table, dim, &config, &lo, &hi, digits] {
        return isolate_roots(table, HankelSpec{dim, config.d}, lo, hi, digits);
      }));
    }
    int dim = kFirstDimension;
    for (auto& job : jobs) r.roots[dim++] = job.get();
    return 0;
  });

  r.sequences = stage("sequence-analysis", config, [&] { return cluster_roots(r.roots, config.match_tol); });
  r.notes.assign(r.sequences.size(), "");
  stage("airy-oracle", config, [&] {
    SpectrumOracle oracle(config.lambda_value(), config.oracle_digits);
    for (size_t i = 0; i < r.sequences.size(); ++i) {
      try {
        r.sequences[i] = classify(std::move(r.sequences[i]), oracle);
      } catch (const OracleRange& e) {
        r.notes[i] = std::string("oracle range: ") + e.what();
      }
    }
    return 0;
  });
  return r;
}

// ---- tables -----------------------------------------------------------------------

std::string format_certified(const RootRecord& root) {
  const BigFloat& v = root.value;
  if (v.is_zero()) return "0";
  const double mag = std::floor(std::log10(std::abs(v.to_double()))) + 1;
  int sig = kMaxCellDigits;
  if (!root.radius.is_zero()) {
    const double decimals = std::floor(-log10(root.radius * 2L).to_double());
    sig = static_cast<int>(std::clamp(mag + decimals, 1.0, static_cast<double>(kMaxCellDigits)));
  }
  return v.to_string(sig);
}

TableView make_table(const RunResult& result, Model model) {
  TableView t;
  t.model = model;
  std::set<int> ns;
  for (const auto& s : result.sequences) {
    const bool match = model == Model::Bounded ? s.label.kind == SequenceLabel::Kind::Bounded
                                               : s.label.kind == SequenceLabel::Kind::Unbounded;
    if (match) ns.insert(s.label.n);
  }
  t.columns.assign(ns.begin(), ns.end());
  for (const auto& [d, roots] : result.roots) {
    (void)roots;
    for (int n : t.columns) {
      const SequenceLabel lab = model == Model::Bounded ? SequenceLabel::bounded(n) : SequenceLabel::unbounded(n);
      if (auto idx = best_at(result.sequences, lab, d)) t.cells[d][n] = format_certified(result.sequences[*idx].members.at(d));
    }
  }
  for (int n : t.columns) {
    const SequenceLabel lab = model == Model::Bounded ? SequenceLabel::bounded(n) : SequenceLabel::unbounded(n);
    for (const auto& s : result.sequences) {
      if (s.label == lab) {
        t.exact[n] = s.limit->to_string(kMaxCellDigits);
        break;
      }
    }
  }
  return t;
}

// ---- figures ----------------------------------------------------------------------

Figure parse_figure(const std::string& name) {
  if (name == "fig1") return Figure::Fig1;
  if (name == "fig2") return Figure::Fig2;
  if (name == "fig3") return Figure::Fig3;
  throw ConfigError("figure", "must be fig1, fig2 or fig3, got \"" + name + "\"");
}

std::string to_string(Figure f) {
  switch (f) {
    case Figure::Fig1: return "fig1";
    case Figure::Fig2: return "fig2";
    case Figure::Fig3: break;
  }
  return "fig3";
}

FigureData make_figure(const RunResult& result, Figure which, const RunResult* other) {
  FigureData fig{which, {}};
  const int floor = result.config.oracle_digits;
  if (which == Figure::Fig1 || which == Figure::Fig2) {
    const SequenceLabel lab = which == Figure::Fig1 ? SequenceLabel::bounded(0) : SequenceLabel::unbounded(0);
    const int max_d = which == Figure::Fig1 ? result.config.d_max : kFigureMaxDimension;
    for (size_t i = 0; i < result.sequences.size(); ++i) {
      if (result.sequences[i].label == lab)
        fig.series.push_back(series_of(result.sequences[i], "seq" + std::to_string(i), floor, max_d));
    }
    return fig;
  }
  RunResult computed;
  if (!other) {
    computed = compute(other_weight(result.config));
    other = &computed;
  }
  for (const RunResult* r : {&result, other}) {
    const auto idx = fastest(r->sequences, SequenceLabel::unbounded(0));
    if (!idx) continue;
    fig.series.push_back(series_of(r->sequences[*idx], r->config.weight, floor, kFigureMaxDimension));
  }
  std::sort(fig.series.begin(), fig.series.end(),
            [](const FigureSeries& a, const FigureSeries& b) { return a.name < b.name; });
  return fig;
}

std::string figure_csv(const FigureData& fig) {
  std::ostringstream os;
  os << "series,D,log10_error\n";
  for (const auto& s : fig.series)
    for (const auto& [d, e] : s.points) os << s.name << "," << d << "," << fixed(e, 6) << "\n";
  return os.str();
}

std::string figure_svg(const FigureData& fig) {
  constexpr double W = 640, H = 420, L = 60, R = 20, T = 30, B = 50;
  int dmin = 1000, dmax = -1000;
  double emin = 0, emax = 0;
  bool any = false;
  for (const auto& s : fig.series)
    for (const auto& [d, e] : s.points) {
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
      emin = any ? std::min(emin, e) : e;
      emax = any ? std::max(emax, e) : e;
      any = true;
    }
  if (!any) {
    dmin = 0;
    dmax = 1;
  }
  if (dmax == dmin) ++dmax;
  emin = std::floor(emin) - 1;
  emax = std::ceil(emax) + 1;
  const auto px = [&](double d) { return L + (d - dmin) / (dmax - dmin) * (W - L - R); };
  const auto py = [&](double e) { return T + (emax - e) / (emax - emin) * (H - T - B); };
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">" << to_string(fig.which)
     << ": log10 |eps(D) - eps_exact|</text>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  for (int d = dmin; d <= dmax; ++d)
    os << "<text x=\"" << fixed(px(d), 1) << "\" y=\"" << H - B + 18 << "\" text-anchor=\"middle\" font-size=\"11\">" << d
       << "</text>\n";
  const int estep = std::max(1, static_cast<int>((emax - emin) / 8));
  for (int e = static_cast<int>(emin); e <= static_cast<int>(emax); e += estep)
    os << "<text x=\"" << L - 6 << "\" y=\"" << fixed(py(e) + 4, 1) << "\" text-anchor=\"end\" font-size=\"11\">" << e
       << "</text>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" font-size=\"12\">D</text>\n";
  for (size_t i = 0; i < fig.series.size(); ++i) {
    const char* color = kColors[i % (sizeof kColors / sizeof *kColors)];
    for (const auto& [d, e] : fig.series[i].points)
      os << "<circle cx=\"" << fixed(px(d), 1) << "\" cy=\"" << fixed(py(e), 1) << "\" r=\"3.5\" fill=\"" << color
         << "\"/>\n";
    os << "<text x=\"" << W - R - 4 << "\" y=\"" << T + 14 * (i + 1) << "\" text-anchor=\"end\" font-size=\"11\" fill=\""
       << color << "\">" << fig.series[i].name << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// ---- outputs ----------------------------------------------------------------------

std::vector<std::filesystem::path> write_outputs(const RunResult& result, const RunResult* other_weight_result) {
  namespace fs = std::filesystem;
  const RunConfig& c = result.config;
  const fs::path dir(c.out_dir);
  std::vector<fs::path> written;
  const bool created_dir = !fs::exists(dir);
  try {
    fs::create_directories(dir);
    if (c.wants("table")) {
      for (Model m : {Model::Bounded, Model::Unbounded}) {
        const TableView t = make_table(result, m);
        const std::string body = c.format == "csv" ? table_csv(t) : table_json(t);
        write_file(dir / (model_key(m) + "." + c.format), body, written);
      }
    }
    if (c.wants("sequences")) {
      std::map<std::string, int> seen;
      for (const auto& s : result.sequences) {
        if (!s.label.resolved()) continue;
        const std::string name = s.label.to_string();
        const int k = ++seen[name];
        write_file(dir / ("seq_" + name + "_" + std::to_string(k) + ".csv"), sequence_csv(s, c.oracle_digits), written);
      }
    }
    if (c.wants("figure-data")) {
      for (Figure f : {Figure::Fig1, Figure::Fig2, Figure::Fig3}) {
        const FigureData fig = make_figure(result, f, other_weight_result);
        write_file(dir / (to_string(f) + ".csv"), figure_csv(fig), written);
        write_file(dir / (to_string(f) + ".svg"), figure_svg(fig), written);
      }
    }
    write_file(dir / "report.json", report_json(result), written);
  } catch (...) {
    std::error_code ec;
    for (const auto& p : written) fs::remove(p, ec);
    if (created_dir) fs::remove(dir, ec);
    throw;
  }
  return written;
}

std::string run(const RunConfig& config) {
  const RunResult result = compute(config);
  std::optional<RunResult> other;
  if (config.wants("figure-data")) other = compute(other_weight(config));
  const auto written =
      stage("output", config, [&] { return write_outputs(result, other ? &*other : nullptr); });

  std::ostringstream os;
  size_t total = 0;
  for (const auto& [d, roots] : result.roots) total += roots.size();
  os << "weight " << config.weight << ", lambda " << config.lambda << ", d " << config.d << ", D " << kFirstDimension
     << ".." << config.d_max << ", " << config.working_digits() << " digits\n";
  os << total << " roots in [" << config.window_lo << ", " << config.window_hi << "], " << result.sequences.size()
     << " sequences\n";
  std::map<std::string, int> per_label;
  for (const auto& s : result.sequences) ++per_label[s.label.to_string()];
  for (const auto& [label, count] : per_label) {
    os << "  " << label << ": " << count;
    if (label != "unresolved") {
      const auto& s = result.sequences;
      const auto lab = std::find_if(s.begin(), s.end(), [&](const RootSequence& q) { return q.label.to_string() == label; })->label;
      const RootSequence& best = s[*fastest(s, lab)];
      os << " (fastest reaches " << best.last().value.to_string(kMaxCellDigits) << " at D=" << best.last_dimension()
         << ", error " << best.errors.rbegin()->second.to_scientific(2) << ")";
    }
    os << "\n";
  }
  os << "wrote " << written.size() << " files to " << config.out_dir << "\n";
  return os.str();
}

FigureData figure_from_run_dir(const std::filesystem::path& dir, Figure which) {
  const auto report = dir / "report.json";
  if (!std::filesystem::exists(report)) {
    throw StageError("figure", "no run found in " + dir.string() + " (report.json missing); run `rpm run --out " +
                                   dir.string() + "` first");
  }
  std::ifstream in(report);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const std::exception& e) {
    throw StageError("figure", "unreadable report " + report.string() + ": " + e.what());
  }
  const RunConfig config = RunConfig::from_json_text(j.at("config").dump());

  const auto load_series = [&](const nlohmann::json& seq, const std::string& name, int max_d) {
    FigureSeries fs{name, {}};
    for (const auto& m : seq.at("members")) {
      const int d = m.at("D").get<int>();
      if (d <= max_d && m.contains("log10_error")) fs.points.emplace_back(d, std::stod(m.at("log10_error").get<std::string>()));
    }
    return fs;
  };

  FigureData fig{which, {}};
  if (which == Figure::Fig1 || which == Figure::Fig2) {
    const std::string want = which == Figure::Fig1 ? "bounded_0" : "unbounded_0";
    const int max_d = which == Figure::Fig1 ? config.d_max : kFigureMaxDimension;
    for (const auto& seq : j.at("sequences"))
      if (seq.at("label") == want) fig.series.push_back(load_series(seq, "seq" + std::to_string(seq.at("id").get<int>()), max_d));
    return fig;
  }
  for (const auto& seq : j.at("sequences"))
    if (seq.at("label") == "unbounded_0" && seq.at("fastest").get<bool>())
      fig.series.push_back(load_series(seq, config.weight, kFigureMaxDimension));
  const RunResult other = compute(other_weight(config));
  if (const auto idx = fastest(other.sequences, SequenceLabel::unbounded(0)))
    fig.series.push_back(series_of(other.sequences[*idx], other.config.weight, config.oracle_digits, kFigureMaxDimension));
  std::sort(fig.series.begin(), fig.series.end(),
            [](const FigureSeries& a, const FigureSeries& b) { return a.name < b.name; });
  return fig;
}

}  // namespace rpm::harness
