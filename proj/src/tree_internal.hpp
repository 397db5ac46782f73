#pragma once

#include <vector>

#include "arf/tree.hpp"

namespace arf::detail {

void sort_level(std::vector<TreeNode>& level, bool check_duplicates);
void check_frobenius(int frobenius);
void check_budget(std::size_t count, const EnumerateOptions& options);
void fill_report(CovarietyTree& tree, int threads, double seconds);

}  // namespace arf::detail
