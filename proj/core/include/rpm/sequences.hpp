#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rpm/airy.hpp"
#include "rpm/bigfloat.hpp"
#include "rpm/hankel.hpp"

namespace rpm {

struct SequenceLabel {
  enum class Kind { Unresolved, Bounded, Unbounded };
  Kind kind = Kind::Unresolved;
  int n = 0;

  static SequenceLabel bounded(int n) { return {Kind::Bounded, n}; }
  static SequenceLabel unbounded(int n) { return {Kind::Unbounded, n}; }
  static SequenceLabel unresolved() { return {}; }

  bool resolved() const { return kind != Kind::Unresolved; }
  /// "bounded_0", "unbounded_2", "unresolved".
  std::string to_string() const;

  friend bool operator==(const SequenceLabel&, const SequenceLabel&) = default;
};

struct RootSequence {
  std::map<int, RootRecord> members;  ///< D -> root
  SequenceLabel label;
  /// |eps(D) - eps_oracle| for every member once labeled.
  std::map<int, BigFloat> errors;
  /// Oracle eigenvalue the sequence converges to, when labeled.
  std::optional<BigFloat> limit;

  int first_dimension() const { return members.begin()->first; }
  int last_dimension() const { return members.rbegin()->first; }
  const RootRecord& last() const { return members.rbegin()->second; }
};

/// Default relative tolerance for linking a root at D to one at D + 1.
inline constexpr double kDefaultMatchTol = 0.15;

/// Links roots at consecutive D into sequences. At each D every open
/// sequence competes for the roots at D + 1; candidate pairs within
/// match_tol (relative) are accepted in order of increasing distance, so each
/// sequence takes at most one root and each root joins at most one sequence.
/// Unmatched roots start new sequences; a sequence that misses a D is closed.
/// The result does not depend on the order of the per-D lists.
std::vector<RootSequence> cluster_roots(const std::map<int, std::vector<RootRecord>>& roots_by_dimension,
                                        double match_tol = kDefaultMatchTol);

/// Thresholds used by classify.
struct ClassifyPolicy {
  /// A candidate is accepted within factor * max(radius, |last - previous|).
  double factor = 1e3;
  /// The last step must be below this fraction of max(1, |last|).
  double converged_step = 1e-3;
  int min_members = 3;
};

/// Labels a sequence by the nearer of the bounded and half-line oracle
/// eigenvalues to its last member and fills the per-D error map. Sequences
/// that are too short, still moving, or too far from both spectra come back
/// Unresolved. Propagates OracleRange from the oracle.
RootSequence classify(RootSequence seq, SpectrumOracle& oracle, const ClassifyPolicy& policy = {});

/// (D, log10 |eps(D) - eps_oracle|); exact agreement is clamped to -floor_digits.
/// Throws UnlabeledSequence for unresolved sequences.
std::vector<std::pair<int, double>> convergence_report(const RootSequence& seq, int floor_digits);

/// Index of the labeled sequence with the smallest error at dimension D
/// (nullopt when no sequence with that label has a member at D).
std::optional<size_t> best_at(const std::vector<RootSequence>& seqs, const SequenceLabel& label, int dimension);

/// Index of the fastest-converging sequence with the label: among those
/// reaching the largest D, smallest error there; ties go to the longer one.
std::optional<size_t> fastest(const std::vector<RootSequence>& seqs, const SequenceLabel& label);

}  // namespace rpm
