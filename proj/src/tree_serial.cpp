#include <chrono>

#include "arf/tree.hpp"
#include "tree_internal.hpp"

namespace arf {

namespace {

TreeNode make_node(NumericalSemigroup s, int parent, int depth) {
  const int modulus = s.frobenius() + 1;
  GeneratorSet gens = minimal_generators(s);
  AperyTable ap = apery_set(s, modulus);
  return TreeNode{std::move(s), std::move(gens), std::move(ap), parent, depth};
}

}  // namespace

CovarietyTree enumerate_ar_serial(int frobenius, const EnumerateOptions& options) {
  detail::check_frobenius(frobenius);
  const auto start = std::chrono::steady_clock::now();

  CovarietyTree tree;
  tree.frobenius = frobenius;
  tree.nodes.push_back(make_node(NumericalSemigroup::delta(frobenius), -1, 0));

  std::size_t level_begin = 0;
  while (level_begin < tree.nodes.size()) {
    const std::size_t level_end = tree.nodes.size();
    std::vector<TreeNode> next;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const NumericalSemigroup& s = tree.nodes[i].semigroup;
      const int m = s.multiplicity();
      for (int x : special_gaps(s)) {
        if (x >= m || x == frobenius) continue;
        NumericalSemigroup candidate = s.with_member(x);
        if (is_arf(candidate)) next.push_back(make_node(std::move(candidate), static_cast<int>(i), tree.nodes[i].depth + 1));
      }
    }
    detail::sort_level(next, options.check_duplicates);
    detail::check_budget(tree.nodes.size() + next.size(), options);
    level_begin = level_end;
    for (TreeNode& node : next) tree.nodes.push_back(std::move(node));
  }

  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  detail::fill_report(tree, 1, elapsed.count());
  return tree;
}

}  // namespace arf
