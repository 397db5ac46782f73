#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "arf/semigroup.hpp"

namespace arf {

/// One vertex of G(F) with the data its children are derived from.
struct TreeNode {
  NumericalSemigroup semigroup;
  GeneratorSet generators;
  AperyTable apery;  // modulus F+1
  int parent = -1;   // index into CovarietyTree::nodes, -1 for the root
  int depth = 0;
};

struct EnumerationReport {
  int frobenius = 0;
  std::size_t node_count = 0;
  std::vector<std::size_t> per_depth;
  std::size_t maximal_count = 0;
  double wall_seconds = 0.0;
};

/// The tree G(F) on Ar(F): root Delta(F), edges S -> S \ {m(S)}.
/// Nodes are ordered by depth, then by the canonical semigroup order.
struct CovarietyTree {
  int frobenius = 0;
  std::vector<TreeNode> nodes;
  EnumerationReport report;

  static constexpr int root = 0;

  /// (child, parent) index pairs in node order.
  std::vector<std::pair<int, int>> edges() const;
};

struct EnumerateOptions {
  int threads = 1;
  /// Fail with LimitExceeded once the tree would exceed this many nodes.
  std::size_t max_nodes = 10'000'000;
  /// Redundant check that no node is produced twice.
  bool check_duplicates = false;
};

/// Whether S u {x} is MED, by testing a + b - x in S over pairs of minimal
/// generators. Throws InvalidAdjunction unless x is a special gap below m(S).
bool med_adjunction_test(const NumericalSemigroup& s, int x);
bool med_adjunction_test(const NumericalSemigroup& s, const GeneratorSet& gens, int x);

/// Ap(S u {x}, n) from Ap(S, n): the entry x + n becomes x.
/// Throws InconsistentTable if x + n is not in the table.
AperyTable apery_after_adjoin(const AperyTable& ap, int x);

/// msg(S u {x}) = {x, alpha(1), ..., alpha(x-1)} with alpha(i) the least
/// minimal generator of S congruent to i mod x. Throws Contradiction if a
/// residue class has no generator.
GeneratorSet msg_after_adjoin(const GeneratorSet& gens, int x);

/// Children of S in G(F(S)), in canonical order. Throws NotInCovariety unless
/// S is Arf and different from N.
std::vector<NumericalSemigroup> children(const NumericalSemigroup& s);

/// F(S) == F and S is Arf.
bool is_member_ar(const NumericalSemigroup& s, int frobenius);

/// Whether no element of Ar(F(S)) strictly contains S. Throws NotArf unless S is Arf.
bool is_maximal_in_ar(const NumericalSemigroup& s);

/// Level-synchronous expansion of G(F) with each level's nodes expanded by
/// `options.threads` OpenMP workers. Output is independent of the thread count.
CovarietyTree enumerate_ar(int frobenius, const EnumerateOptions& options = {});

/// Single-threaded reference: recomputes every node's generators, Apery set
/// and special gaps from scratch and tests candidate children with is_arf.
CovarietyTree enumerate_ar_serial(int frobenius, const EnumerateOptions& options = {});

}  // namespace arf
