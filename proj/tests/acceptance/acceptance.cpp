// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pipeline.hpp"
#include "rpm/airy.hpp"
#include "rpm/hankel.hpp"
#include "rpm/riccati.hpp"
#include "rpm/sequences.hpp"
#include "support/oracles.hpp"
#include "support/reference_tables.hpp"

using namespace rpm;
using namespace rpm::harness;
using namespace rpm::testing;

namespace {

constexpr int kDMax = 16;
constexpr int kTableDigits = 78;          // >= 60 required
constexpr int kOracleDigits = 40;
constexpr int kOracleCompareDigits = 20;  // significant digits
constexpr double kAiryZeroBound = 1e-18;
constexpr int kFig3Dimension = 10;
constexpr double kZeroFieldRelError = 1e-12;
constexpr double kDecadesD5toD16 = 8.0;
constexpr int kPadeDigits = 40;
constexpr int kWronskianDigits = 50;
constexpr int kWronskianCorrect = 48;

struct Outcome {
  bool pass;
  std::string detail;
};

RunResult run_for(const std::string& lambda, const std::string& weight) {
  RunConfig c;
  c.lambda = lambda;
  c.weight = weight;
  c.d_max = kDMax;
  c.digits = kTableDigits;
  return compute(c);
}

double log10_error(const RunResult& r, SequenceLabel label, int dimension) {
  const auto idx = best_at(r.sequences, label, dimension);
  if (!idx) return NAN;
  const BigFloat& e = r.sequences[*idx].errors.at(dimension);
  return e.is_zero() ? -INFINITY : std::log10(e.to_double());
}

Outcome table_match(const RunResult& r, const Cells& cells, SequenceLabel (*label)(int)) {
  int checked = 0;
  std::vector<std::string> misses;
  for (const auto& [n, column] : cells) {
    for (const auto& [d, cell] : column) {
      ++checked;
      const auto idx = best_at(r.sequences, label(n), d);
      if (!idx) {
        misses.push_back("n=" + std::to_string(n) + " D=" + std::to_string(d) + " missing (printed " + cell + ")");
        continue;
      }
      const BigFloat& v = r.sequences[*idx].members.at(d).value;
      if (!matches_cell(v, cell))
        misses.push_back("n=" + std::to_string(n) + " D=" + std::to_string(d) + " printed " + cell + ", computed " +
                         v.to_string(22));
    }
  }
  std::ostringstream os;
  os << (checked - static_cast<int>(misses.size())) << "/" << checked << " cells match";
  for (const auto& m : misses) os << "; " << m;
  return {misses.empty(), os.str()};
}

Outcome oracle_agreement() {
  int ok = 0, total = 0;
  std::ostringstream os;
  const auto compare = [&](Model model, const std::map<int, std::string>& exact) {
    const auto evs = oracle_eigenvalues(model, 1, static_cast<int>(exact.size()), kOracleDigits);
    for (const auto& [n, s] : exact) {
      ++total;
      const std::string got = evs.at(static_cast<size_t>(n)).eps.to_string(kOracleCompareDigits);
      if (got == s) ++ok;
      else os << "; " << to_string(model) << " n=" << n << " expected " << s << " got " << got;
    }
  };
  compare(Model::Bounded, bounded_exact());
  compare(Model::Unbounded, unbounded_exact());
  const BigFloat ai = abs(airy_ai(BigFloat("-2.3381074104597670385", Precision::digits(kOracleDigits)), kOracleDigits));
  const bool zero = ai < BigFloat(kAiryZeroBound, Precision::digits(kOracleDigits));
  std::ostringstream head;
  head << ok << "/" << total << " exact values to " << kOracleCompareDigits << " digits, |Ai(-2.3381074104597670385)| = "
       << ai.to_string(3);
  return {ok == total && zero, head.str() + os.str()};
}

Outcome fig3_property(const RunResult& box, const RunResult& half) {
  const double b = log10_error(box, SequenceLabel::unbounded(0), kFig3Dimension);
  const double h = log10_error(half, SequenceLabel::unbounded(0), kFig3Dimension);
  char buf[160];
  std::snprintf(buf, sizeof buf, "D=%d log10|error|: half-line %.3f, box-walls %.3f", kFig3Dimension, h, b);
  return {!std::isnan(b) && !std::isnan(h) && h < b, buf};
}

Outcome cluster_counts(const RunResult& r) {
  int bounded0 = 0, unbounded0 = 0;
  for (const auto& s : r.sequences) {
    bounded0 += s.label == SequenceLabel::bounded(0);
    unbounded0 += s.label == SequenceLabel::unbounded(0);
  }
  return {bounded0 == 2 && unbounded0 > 2,
          "Bounded(0): " + std::to_string(bounded0) + " (need 2), Unbounded(0): " + std::to_string(unbounded0) + " (need > 2)"};
}

Outcome zero_field(const RunResult& r) {
  bool pass = true;
  std::ostringstream os;
  for (int n : {0, 1}) {
    const auto idx = fastest(r.sequences, SequenceLabel::bounded(n));
    if (!idx || r.sequences[*idx].last_dimension() != kDMax) {
      pass = false;
      os << "n=" << n << ": no sequence reaching D=" << kDMax << "; ";
      continue;
    }
    const BigFloat& v = r.sequences[*idx].members.at(kDMax).value;
    const Precision p = v.precision();
    const BigFloat exact = BigFloat(static_cast<long>((n + 1) * (n + 1)), p) * pi(p) * pi(p);
    const double rel = (abs(v - exact) / exact).to_double();
    pass = pass && rel < kZeroFieldRelError;
    char buf[120];
    std::snprintf(buf, sizeof buf, "n=%d relative error %.2e; ", n, rel);
    os << buf;
  }
  return {pass, os.str() + "need < 1e-12 at D=16"};
}

Outcome property_suites() {
  std::vector<std::string> fails;
  int checks = 0;

  for (const auto kind : {WeightKind::BoxWalls, WeightKind::HalfLine})
    for (const mpq_class& lambda : {mpq_class(0), mpq_class(1), mpq_class(1, 2), mpq_class(3)})
      for (int n_max : {1, 7, 40}) {
        ++checks;
        const auto t = coefficients(WeightSpec{kind}, {lambda}, n_max);
        for (const auto& c : riccati_series_residual(kind, lambda, t.coeffs()))
          if (!c.is_zero()) {
            fails.push_back("riccati residual lambda=" + lambda.get_str() + " n_max=" + std::to_string(n_max));
            break;
          }
      }

  const auto points = random_rationals(20, 20240611u);
  for (const auto kind : {WeightKind::BoxWalls, WeightKind::HalfLine}) {
    const auto t = coefficients(WeightSpec{kind}, {mpq_class(1)}, required_n_max(4, 1));
    for (int offset : {0, 1})
      for (int dim = 1; dim <= 4; ++dim) {
        const HankelEvaluator ev(t, {dim, offset});
        for (const auto& e : points) {
          ++checks;
          if (ev.exact(e) != hankel_by_cofactors(t, {dim, offset}, e))
            fails.push_back("cofactor D=" + std::to_string(dim) + " eps=" + e.get_str());
        }
      }
  }

  {
    const auto t = coefficients(WeightSpec::box_walls(), {1}, required_n_max(8, 0) + 1);
    const Precision p = Precision::digits(kPadeDigits + 20);
    for (const char* s : {"1.5", "9.25", "17.25", "60.5", "-3.75"})
      for (int n : {1, 2, 3, 4}) {
        ++checks;
        const BigFloat e(s, p);
        const BigFloat r = pade_backsub_residual(pade_approximant(t, n, 0, e, kPadeDigits), t, e);
        if (!(r < pow10(-kPadeDigits + 5, p))) fails.push_back("pade N=" + std::to_string(n) + " eps=" + s);
      }
  }

  const Precision wp = Precision::digits(kWronskianDigits + 10);
  for (double z : wronskian_points()) {
    ++checks;
    if (!(wronskian_defect(BigFloat(z, wp), kWronskianDigits) < pow10(-kWronskianCorrect, wp)))
      fails.push_back("wronskian z=" + std::to_string(z));
  }

  std::ostringstream os;
  os << (checks - static_cast<int>(fails.size())) << "/" << checks << " property checks";
  for (const auto& f : fails) os << "; " << f;
  return {fails.empty(), os.str()};
}

Outcome convergence_rate(const RunResult& r) {
  const double e5 = log10_error(r, SequenceLabel::bounded(0), 5);
  const double e16 = log10_error(r, SequenceLabel::bounded(0), 16);
  char buf[160];
  std::snprintf(buf, sizeof buf, "log10|error| D=5 %.3f, D=16 %.3f, drop %.2f decades (need >= %.0f)", e5, e16, e5 - e16,
                kDecadesD5toD16);
  return {e5 - e16 >= kDecadesD5toD16, buf};
}

}  // namespace

int main() {
  int failures = 0;
  const auto report = [&](int id, const std::string& what, const std::function<Outcome()>& check) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s criterion %d: %s [%.1fs] %s\n", o.pass ? "PASS" : "FAIL", id, what.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  };

  std::optional<RunResult> box, half, flat;
  const auto box_run = [&]() -> const RunResult& {
    if (!box) box = run_for("1", "box-walls");
    return *box;
  };

  report(1, "bounded table, lambda=1, box walls, D=2..16",
         [&] { return table_match(box_run(), bounded_cells(), &SequenceLabel::bounded); });
  report(2, "unbounded table, lambda=1, box walls, D=2..16",
         [&] { return table_match(box_run(), unbounded_cells(), &SequenceLabel::unbounded); });
  report(3, "oracle exact values and Airy zero", oracle_agreement);
  report(4, "half-line weight beats box walls for unbounded eps_0 at D=10", [&] {
    if (!half) half = run_for("1", "half-line");
    return fig3_property(box_run(), *half);
  });
  report(5, "cluster counts at D_max=16", [&] { return cluster_counts(box_run()); });
  report(6, "zero field converges to (n+1)^2 pi^2", [&] {
    if (!flat) flat = run_for("0", "box-walls");
    return zero_field(*flat);
  });
  report(7, "property suites", property_suites);
  report(8, "bounded eps_0 convergence from D=5 to D=16", [&] { return convergence_rate(box_run()); });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
