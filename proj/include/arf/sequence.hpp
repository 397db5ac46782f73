#pragma once

#include <compare>
#include <span>
#include <vector>

#include "arf/semigroup.hpp"

namespace arf {

/// True iff xs is an Arf sequence: 2 <= x_1 <= ... <= x_n and every
/// x_{i+1} equals one of the suffix sums x_i, x_i + x_{i-1}, ..., x_i + ... + x_1
/// or strictly exceeds the full one. Throws EmptyInput on an empty list.
bool validate_sequence(std::span<const int> xs);

/// A sequence that passed validate_sequence.
class ArfSequence {
 public:
  /// Throws InvalidSequence (or EmptyInput) when xs is not an Arf sequence.
  explicit ArfSequence(std::vector<int> xs);

  const std::vector<int>& values() const noexcept { return xs_; }
  std::size_t size() const noexcept { return xs_.size(); }
  /// x_1 + ... + x_n; the associated semigroup has Frobenius number total() - 1.
  long long total() const noexcept;

  friend bool operator==(const ArfSequence&, const ArfSequence&) = default;
  friend auto operator<=>(const ArfSequence&, const ArfSequence&) = default;

 private:
  struct Trusted {};
  ArfSequence(std::vector<int> xs, Trusted) : xs_(std::move(xs)) {}
  std::vector<int> xs_;

  friend std::vector<ArfSequence> arf_sequences_with_total(int, int);
};

/// {0, x_n, x_n + x_{n-1}, ..., x_n + ... + x_1, ->}.
NumericalSemigroup semigroup_of_sequence(const ArfSequence& seq);
/// Validating overload; throws InvalidSequence.
NumericalSemigroup semigroup_of_sequence(std::span<const int> xs);

/// The difference sequence of an Arf semigroup. Throws NotArf (and NoGaps for N).
ArfSequence sequence_of_semigroup(const NumericalSemigroup& s);

/// Whether splitting x_position (1-based) into (a, x_position - a) keeps the
/// Arf axioms, decided by the closed-form conditions without revalidating.
/// Throws InvalidRefinement unless 1 <= position <= n and 2 <= a < x_position.
bool can_refine(const ArfSequence& seq, int position, int a);

/// (x_1, ..., x_{i-1}, a, x_i - a, x_{i+1}, ..., x_n) with no validity check.
std::vector<int> split_entry(std::span<const int> xs, int position, int a);

struct Refinement {
  int position;
  int a;
  ArfSequence result;
};

/// Every single-split proper refinement, ordered by (position, a).
std::vector<Refinement> proper_refinements(const ArfSequence& seq);
bool admits_proper_refinement(const ArfSequence& seq);

/// All Arf sequences whose entries sum to total, in lexicographic order.
/// The first-entry branches are spread over `threads` OpenMP workers.
std::vector<ArfSequence> arf_sequences_with_total(int total, int threads = 1);

/// Refinement-free Arf sequences with total F+1, lexicographic.
std::vector<ArfSequence> refinement_free_sequences(int frobenius, int threads = 1);

/// The inclusion-maximal Arf semigroups with Frobenius number F, one per
/// refinement-free sequence, in lexicographic sequence order.
std::vector<NumericalSemigroup> maximal_elements(int frobenius, int threads = 1);

}  // namespace arf
