#include "arf/tree.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <string>

#include "arf/sequence.hpp"
#include "tree_internal.hpp"

namespace arf {

namespace {

bool adjoin_keeps_med(const NumericalSemigroup& s, const GeneratorSet& gens, int x) {
  const auto& g = gens.gens;
  const std::int64_t f = s.frobenius();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i; j < g.size(); ++j) {
      const std::int64_t v = static_cast<std::int64_t>(g[i]) + g[j] - x;
      if (v > f) break;  // gens are increasing, so the rest of the row is above F too
      if (!s.contains(v)) return false;
    }
  }
  return true;
}

// x < m(S) is a gap; it is pseudo-Frobenius iff x + g is in S for every
// minimal generator g, and special iff moreover 2x is in S.
bool special_below_multiplicity(const NumericalSemigroup& s, const GeneratorSet& gens, int x) {
  if (!s.contains(2 * static_cast<std::int64_t>(x))) return false;
  for (int g : gens.gens) {
    if (g + x > s.frobenius()) break;
    if (!s.contains(g + x)) return false;
  }
  return true;
}

// theta(S): special gaps below m(S), other than F, whose adjunction keeps S MED.
std::vector<TreeNode> expand(const TreeNode& node) {
  const NumericalSemigroup& s = node.semigroup;
  const int f = s.frobenius();
  const int m = s.multiplicity();
  std::vector<TreeNode> out;
  for (int x = 1; x < m; ++x) {
    if (x == f || !special_below_multiplicity(s, node.generators, x)) continue;
    if (!adjoin_keeps_med(s, node.generators, x)) continue;
    out.push_back(TreeNode{
        s.with_member(x),
        msg_after_adjoin(node.generators, x),
        apery_after_adjoin(node.apery, x),
        -1,
        node.depth + 1,
    });
  }
  return out;
}

TreeNode make_root(int frobenius) {
  NumericalSemigroup root = NumericalSemigroup::delta(frobenius);
  GeneratorSet gens;
  for (int x = frobenius + 1; x <= 2 * frobenius + 1; ++x) gens.gens.push_back(x);
  AperyTable ap = apery_set(root, frobenius + 1);
  return TreeNode{std::move(root), std::move(gens), std::move(ap), -1, 0};
}

// A one-element Arf extension with the same Frobenius number is the same thing
// as a single split of the associated sequence.
bool maximal_in_ar(const NumericalSemigroup& s) {
  return !admits_proper_refinement(sequence_of_semigroup(s));
}

}  // namespace

namespace detail {

void sort_level(std::vector<TreeNode>& level, bool check_duplicates) {
  std::sort(level.begin(), level.end(),
            [](const TreeNode& a, const TreeNode& b) { return a.semigroup < b.semigroup; });
  if (check_duplicates) {
    auto dup = std::adjacent_find(level.begin(), level.end(), [](const TreeNode& a, const TreeNode& b) {
      return a.semigroup == b.semigroup;
    });
    if (dup != level.end()) throw Error(ErrorCode::Contradiction, "node generated twice");
  }
}

void check_frobenius(int frobenius) {
  if (frobenius < 1) throw Error(ErrorCode::InvalidFrobenius, "Frobenius number must be positive");
}

void check_budget(std::size_t count, const EnumerateOptions& options) {
  if (count > options.max_nodes) {
    throw Error(ErrorCode::LimitExceeded,
                "tree exceeds --max-nodes (" + std::to_string(options.max_nodes) + ")");
  }
}

}  // namespace detail

std::vector<std::pair<int, int>> CovarietyTree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 1; i < nodes.size(); ++i) out.emplace_back(static_cast<int>(i), nodes[i].parent);
  return out;
}

bool med_adjunction_test(const NumericalSemigroup& s, const GeneratorSet& gens, int x) {
  if (s.is_naturals() || x <= 0 || x >= s.multiplicity() || s.contains(x)) {
    throw Error(ErrorCode::InvalidAdjunction, "x must be a gap below the multiplicity");
  }
  const std::vector<int> sg = special_gaps(s);
  if (!std::binary_search(sg.begin(), sg.end(), x)) {
    throw Error(ErrorCode::InvalidAdjunction, std::to_string(x) + " is not a special gap");
  }
  return adjoin_keeps_med(s, gens, x);
}

bool med_adjunction_test(const NumericalSemigroup& s, int x) {
  if (s.is_naturals()) throw Error(ErrorCode::InvalidAdjunction, "N has no gaps");
  return med_adjunction_test(s, minimal_generators(s), x);
}

AperyTable apery_after_adjoin(const AperyTable& ap, int x) {
  if (x <= 0 || ap.modulus <= 0) throw Error(ErrorCode::InconsistentTable, "bad adjunction input");
  const auto r = static_cast<std::size_t>(x % ap.modulus);
  if (r >= ap.entries.size() || static_cast<std::int64_t>(ap.entries[r]) != static_cast<std::int64_t>(x) + ap.modulus) {
    throw Error(ErrorCode::InconsistentTable, std::to_string(x + ap.modulus) + " is not in the Apery table");
  }
  AperyTable out = ap;
  out.entries[r] = x;
  return out;
}

GeneratorSet msg_after_adjoin(const GeneratorSet& gens, int x) {
  if (x < 1) throw Error(ErrorCode::Contradiction, "adjoined element must be positive");
  std::vector<int> alpha(static_cast<std::size_t>(x), -1);
  for (int a : gens.gens) {  // increasing, so the first hit per class is the minimum
    int& slot = alpha[static_cast<std::size_t>(a % x)];
    if (slot < 0) slot = a;
  }
  GeneratorSet out{{x}};
  for (int i = 1; i < x; ++i) {
    if (alpha[static_cast<std::size_t>(i)] < 0) {
      throw Error(ErrorCode::Contradiction, "no minimal generator congruent to " + std::to_string(i) +
                                                " mod " + std::to_string(x));
    }
    out.gens.push_back(alpha[static_cast<std::size_t>(i)]);
  }
  std::sort(out.gens.begin(), out.gens.end());
  return out;
}

std::vector<NumericalSemigroup> children(const NumericalSemigroup& s) {
  if (s.is_naturals() || !is_arf(s)) throw Error(ErrorCode::NotInCovariety, "semigroup is not Arf");
  const int f = s.frobenius();
  TreeNode node{s, minimal_generators(s), apery_set(s, f + 1), -1, 0};
  std::vector<TreeNode> kids = expand(node);
  detail::sort_level(kids, false);
  std::vector<NumericalSemigroup> out;
  for (auto& kid : kids) out.push_back(std::move(kid.semigroup));
  return out;
}

bool is_member_ar(const NumericalSemigroup& s, int frobenius) {
  return !s.is_naturals() && s.frobenius() == frobenius && is_arf(s);
}

bool is_maximal_in_ar(const NumericalSemigroup& s) {
  if (s.is_naturals()) return true;
  return maximal_in_ar(s);
}

CovarietyTree enumerate_ar(int frobenius, const EnumerateOptions& options) {
  detail::check_frobenius(frobenius);
  const auto start = std::chrono::steady_clock::now();
  const int threads = std::max(1, options.threads);

  CovarietyTree tree;
  tree.frobenius = frobenius;
  tree.nodes.push_back(make_root(frobenius));

  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  while (level_begin < level_end) {
    const auto width = static_cast<std::ptrdiff_t>(level_end - level_begin);
    std::vector<std::vector<TreeNode>> buckets(static_cast<std::size_t>(width));

#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t k = 0; k < width; ++k) {
      auto& bucket = buckets[static_cast<std::size_t>(k)];
      bucket = expand(tree.nodes[level_begin + static_cast<std::size_t>(k)]);
      for (TreeNode& child : bucket) child.parent = static_cast<int>(level_begin) + static_cast<int>(k);
    }

    std::vector<TreeNode> next;
    for (auto& bucket : buckets) std::move(bucket.begin(), bucket.end(), std::back_inserter(next));
    detail::sort_level(next, options.check_duplicates);
    detail::check_budget(tree.nodes.size() + next.size(), options);

    level_begin = level_end;
    std::move(next.begin(), next.end(), std::back_inserter(tree.nodes));
    level_end = tree.nodes.size();
  }

  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  detail::fill_report(tree, threads, elapsed.count());
  return tree;
}

namespace detail {

void fill_report(CovarietyTree& tree, int threads, double seconds) {
  EnumerationReport& report = tree.report;
  report.frobenius = tree.frobenius;
  report.node_count = tree.nodes.size();
  report.per_depth.clear();
  for (const TreeNode& node : tree.nodes) {
    if (report.per_depth.size() <= static_cast<std::size_t>(node.depth)) report.per_depth.resize(node.depth + 1, 0);
    ++report.per_depth[static_cast<std::size_t>(node.depth)];
  }
  const auto n = static_cast<std::ptrdiff_t>(tree.nodes.size());
  std::size_t maximal = 0;
#pragma omp parallel for schedule(dynamic) num_threads(threads) reduction(+ : maximal)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (maximal_in_ar(tree.nodes[static_cast<std::size_t>(i)].semigroup)) ++maximal;
  }
  report.maximal_count = maximal;
  report.wall_seconds = seconds;
}

}  // namespace detail

}  // namespace arf
