#include "rpm/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "rpm/errors.hpp"

namespace rpm {
namespace {

double relative_gap(const BigFloat& a, const BigFloat& b) {
  const double scale = std::max({std::abs(a.to_double()), std::abs(b.to_double()), 1e-300});
  return std::abs((a - b).to_double()) / scale;
}

bool root_less(const RootRecord& a, const RootRecord& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.radius < b.radius;
}

}  // namespace

std::string SequenceLabel::to_string() const {
  switch (kind) {
    case Kind::Bounded: return "bounded_" + std::to_string(n);
    case Kind::Unbounded: return "unbounded_" + std::to_string(n);
    case Kind::Unresolved: break;
  }
  return "unresolved";
}

std::vector<RootSequence> cluster_roots(const std::map<int, std::vector<RootRecord>>& roots_by_dimension,
                                        double match_tol) {
  if (!(match_tol >= 0)) throw InvalidArgument("cluster_roots: match_tol must be >= 0");
  std::vector<RootSequence> seqs;
  std::vector<size_t> open;  // indices into seqs ending at the previous D
  int previous_d = 0;
  bool first = true;

  for (const auto& [d, unsorted] : roots_by_dimension) {
    std::vector<RootRecord> roots = unsorted;
    std::sort(roots.begin(), roots.end(), root_less);
    if (!first && d != previous_d + 1) open.clear();

    std::vector<std::tuple<double, size_t, size_t>> pairs;  // (gap, open slot, root)
    for (size_t s = 0; s < open.size(); ++s) {
      const BigFloat& last = seqs[open[s]].last().value;
      for (size_t r = 0; r < roots.size(); ++r) {
        const double gap = relative_gap(roots[r].value, last);
        if (gap <= match_tol) pairs.emplace_back(gap, s, r);
      }
    }
    std::sort(pairs.begin(), pairs.end());

    std::vector<bool> seq_taken(open.size(), false);
    std::vector<bool> root_taken(roots.size(), false);
    std::vector<size_t> next_open;
    for (const auto& [gap, s, r] : pairs) {
      if (seq_taken[s] || root_taken[r]) continue;
      seq_taken[s] = root_taken[r] = true;
      seqs[open[s]].members.emplace(d, roots[r]);
    }
    for (size_t s = 0; s < open.size(); ++s)
      if (seq_taken[s]) next_open.push_back(open[s]);
    for (size_t r = 0; r < roots.size(); ++r) {
      if (root_taken[r]) continue;
      RootSequence fresh;
      fresh.members.emplace(d, roots[r]);
      seqs.push_back(std::move(fresh));
      next_open.push_back(seqs.size() - 1);
    }
    open = std::move(next_open);
    previous_d = d;
    first = false;
  }

  // Canonical order: by first D, then by the value of the first member.
  std::stable_sort(seqs.begin(), seqs.end(), [](const RootSequence& a, const RootSequence& b) {
    if (a.first_dimension() != b.first_dimension()) return a.first_dimension() < b.first_dimension();
    return root_less(a.members.begin()->second, b.members.begin()->second);
  });
  return seqs;
}

RootSequence classify(RootSequence seq, SpectrumOracle& oracle, const ClassifyPolicy& policy) {
  seq.label = SequenceLabel::unresolved();
  seq.errors.clear();
  seq.limit.reset();
  if (static_cast<int>(seq.members.size()) < policy.min_members) return seq;

  const auto last_it = seq.members.rbegin();
  const BigFloat& last = last_it->second.value;
  const BigFloat& previous = std::next(last_it)->second.value;
  const Precision p = last.precision();
  const BigFloat step = abs(last - previous);
  if (step.to_double() > policy.converged_step * std::max(1.0, std::abs(last.to_double()))) return seq;

  std::optional<OracleEigenvalue> best;
  for (Model model : {Model::Bounded, Model::Unbounded}) {
    std::optional<OracleEigenvalue> cand = oracle.nearest(model, last);
    if (cand && (!best || abs(cand->eps - last) < abs(best->eps - last))) best = std::move(cand);
  }
  if (!best) return seq;

  const BigFloat reach = max(last_it->second.radius, step) * BigFloat(policy.factor, p);
  if (abs(best->eps - last) > reach) return seq;

  seq.label = best->model == Model::Bounded ? SequenceLabel::bounded(best->n) : SequenceLabel::unbounded(best->n);
  for (const auto& [d, rec] : seq.members) seq.errors.emplace(d, abs(rec.value - best->eps));
  seq.limit = best->eps;
  return seq;
}

std::vector<std::pair<int, double>> convergence_report(const RootSequence& seq, int floor_digits) {
  if (!seq.label.resolved()) throw UnlabeledSequence("convergence_report needs a labeled sequence");
  std::vector<std::pair<int, double>> out;
  const double floor = -static_cast<double>(floor_digits);
  for (const auto& [d, err] : seq.errors) {
    double v = floor;
    if (!err.is_zero()) v = std::max(floor, log10(err).to_double());
    out.emplace_back(d, v);
  }
  return out;
}

std::optional<size_t> best_at(const std::vector<RootSequence>& seqs, const SequenceLabel& label, int dimension) {
  std::optional<size_t> best;
  for (size_t i = 0; i < seqs.size(); ++i) {
    if (!(seqs[i].label == label)) continue;
    auto it = seqs[i].errors.find(dimension);
    if (it == seqs[i].errors.end()) continue;
    if (!best || it->second < seqs[*best].errors.at(dimension)) best = i;
  }
  return best;
}

std::optional<size_t> fastest(const std::vector<RootSequence>& seqs, const SequenceLabel& label) {
  std::optional<size_t> best;
  for (size_t i = 0; i < seqs.size(); ++i) {
    const RootSequence& s = seqs[i];
    if (!(s.label == label)) continue;
    if (!best) {
      best = i;
      continue;
    }
    const RootSequence& b = seqs[*best];
    const BigFloat& es = s.errors.rbegin()->second;
    const BigFloat& eb = b.errors.rbegin()->second;
    if (s.last_dimension() != b.last_dimension() ? s.last_dimension() > b.last_dimension()
        : es != eb                               ? es < eb
                                                 : s.members.size() > b.members.size()) {
      best = i;
    }
  }
  return best;
}

}  // namespace rpm
