#include "arf/sequence.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <string>

namespace arf {

namespace {

// prefix[k] = x_1 + ... + x_k over a 0-based list, prefix[0] = 0.
std::vector<long long> prefix_sums(std::span<const int> xs) {
  std::vector<long long> prefix(xs.size() + 1, 0);
  for (std::size_t k = 0; k < xs.size(); ++k) prefix[k + 1] = prefix[k] + xs[k];
  return prefix;
}

// Whether value lies in {x_i, x_i + x_{i-1}, ..., x_i + ... + x_1, ->} where the
// arrow stands for every integer strictly above x_i + ... + x_1. `i` counts the
// entries taken into account (1-based index of x_i).
bool in_suffix_set(const std::vector<long long>& prefix, std::size_t i, long long value) {
  const long long full = prefix[i];
  if (value > full) return true;
  // Suffix sums x_i + ... + x_j = prefix[i] - prefix[j-1] for 1 <= j <= i.
  const long long wanted = full - value;
  auto first = prefix.begin();
  auto last = prefix.begin() + static_cast<std::ptrdiff_t>(i);
  return std::binary_search(first, last, wanted);
}

// {2a, 2a + x_{i-1}, ..., 2a + x_{i-1} + ... + x_1, ->}: the suffix-sum set of
// the first i entries shifted by base, plus base itself.
bool in_offset_suffix_set(const std::vector<long long>& prefix, std::size_t i, long long base, long long value) {
  return value == base || (value > base && in_suffix_set(prefix, i, value - base));
}

// Closed-form split test for x_position -> (a, x_position - a), 2 <= a < x_position.
bool refinable(std::span<const int> xs, const std::vector<long long>& prefix, int position, int a) {
  const int xi = xs[static_cast<std::size_t>(position) - 1];
  if (position == 1) return 2LL * a <= xi;
  const auto before = static_cast<std::size_t>(position) - 1;  // entries x_1 .. x_{i-1}
  return in_suffix_set(prefix, before, a) && in_offset_suffix_set(prefix, before, 2LL * a, xi);
}

void extend(std::vector<int>& current, std::vector<long long>& prefix, int remaining,
            std::vector<ArfSequence>& out, const auto& make) {
  if (remaining == 0) {
    out.push_back(make(current));
    return;
  }
  const std::size_t i = current.size();
  for (int next = current.back(); next <= remaining; ++next) {
    if (next != remaining && remaining - next < next) continue;
    if (!in_suffix_set(prefix, i, next)) continue;
    current.push_back(next);
    prefix.push_back(prefix.back() + next);
    extend(current, prefix, remaining - next, out, make);
    prefix.pop_back();
    current.pop_back();
  }
}

}  // namespace

bool validate_sequence(std::span<const int> xs) {
  if (xs.empty()) throw Error(ErrorCode::EmptyInput, "empty sequence");
  if (xs.front() < 2) return false;
  const std::vector<long long> prefix = prefix_sums(xs);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] < xs[i - 1]) return false;
    if (!in_suffix_set(prefix, i, xs[i])) return false;
  }
  return true;
}

ArfSequence::ArfSequence(std::vector<int> xs) : xs_(std::move(xs)) {
  if (!validate_sequence(xs_)) throw Error(ErrorCode::InvalidSequence, "not an Arf sequence");
}

long long ArfSequence::total() const noexcept { return std::accumulate(xs_.begin(), xs_.end(), 0LL); }

NumericalSemigroup semigroup_of_sequence(const ArfSequence& seq) {
  const long long total = seq.total();
  if (total - 1 > kMaxRepresentableFrobenius) throw Error(ErrorCode::ScaleLimit, "sequence total too large");
  std::vector<int> small;
  small.reserve(seq.size());
  small.push_back(0);
  long long acc = 0;
  const auto& xs = seq.values();
  for (std::size_t k = xs.size(); k-- > 1;) {
    acc += xs[k];
    small.push_back(static_cast<int>(acc));
  }
  return NumericalSemigroup::from_small_elements(static_cast<int>(total - 1), small);
}

NumericalSemigroup semigroup_of_sequence(std::span<const int> xs) {
  return semigroup_of_sequence(ArfSequence(std::vector<int>(xs.begin(), xs.end())));
}

ArfSequence sequence_of_semigroup(const NumericalSemigroup& s) {
  if (s.is_naturals()) throw Error(ErrorCode::NoGaps, "N has no associated sequence");
  std::vector<int> diffs = difference_sequence(s);
  if (!validate_sequence(diffs)) throw Error(ErrorCode::NotArf, "semigroup is not Arf");
  return ArfSequence(std::move(diffs));
}

bool can_refine(const ArfSequence& seq, int position, int a) {
  const auto& xs = seq.values();
  if (position < 1 || position > static_cast<int>(xs.size())) {
    throw Error(ErrorCode::InvalidRefinement, "position " + std::to_string(position) + " out of range");
  }
  const int xi = xs[static_cast<std::size_t>(position) - 1];
  if (a < 2 || a >= xi) {
    throw Error(ErrorCode::InvalidRefinement, "split value " + std::to_string(a) + " outside [2, x_i)");
  }
  return refinable(xs, prefix_sums(xs), position, a);
}

std::vector<int> split_entry(std::span<const int> xs, int position, int a) {
  std::vector<int> out;
  out.reserve(xs.size() + 1);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (static_cast<int>(k) + 1 == position) {
      out.push_back(a);
      out.push_back(xs[k] - a);
    } else {
      out.push_back(xs[k]);
    }
  }
  return out;
}

std::vector<Refinement> proper_refinements(const ArfSequence& seq) {
  std::vector<Refinement> out;
  const auto& xs = seq.values();
  const std::vector<long long> prefix = prefix_sums(xs);
  for (int pos = 1; pos <= static_cast<int>(xs.size()); ++pos) {
    for (int a = 2; a < xs[static_cast<std::size_t>(pos) - 1]; ++a) {
      if (refinable(xs, prefix, pos, a)) out.push_back({pos, a, ArfSequence(split_entry(xs, pos, a))});
    }
  }
  return out;
}

bool admits_proper_refinement(const ArfSequence& seq) {
  const auto& xs = seq.values();
  const std::vector<long long> prefix = prefix_sums(xs);
  for (int pos = 1; pos <= static_cast<int>(xs.size()); ++pos) {
    for (int a = 2; a < xs[static_cast<std::size_t>(pos) - 1]; ++a) {
      if (refinable(xs, prefix, pos, a)) return true;
    }
  }
  return false;
}

std::vector<ArfSequence> arf_sequences_with_total(int total, int threads) {
  if (total < 2) return {};
  const auto make = [](const std::vector<int>& xs) { return ArfSequence(xs, ArfSequence::Trusted{}); };
  const int roots = total - 1;  // x_1 ranges over [2, total]
  std::vector<std::vector<ArfSequence>> per_root(static_cast<std::size_t>(roots));

#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, threads))
  for (int r = 0; r < roots; ++r) {
    const int first = r + 2;
    std::vector<int> current{first};
    std::vector<long long> prefix{0, first};
    extend(current, prefix, total - first, per_root[static_cast<std::size_t>(r)], make);
  }

  std::vector<ArfSequence> out;
  for (auto& bucket : per_root) {
    // Each bucket is already lexicographic and buckets are ordered by x_1.
    std::move(bucket.begin(), bucket.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<ArfSequence> refinement_free_sequences(int frobenius, int threads) {
  if (frobenius < 1) throw Error(ErrorCode::InvalidFrobenius, "Frobenius number must be positive");
  std::vector<ArfSequence> all = arf_sequences_with_total(frobenius + 1, threads);
  std::vector<char> keep(all.size(), 0);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, threads))
  for (std::size_t k = 0; k < all.size(); ++k) keep[k] = admits_proper_refinement(all[k]) ? 0 : 1;

  std::vector<ArfSequence> out;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (keep[k]) out.push_back(std::move(all[k]));
  }
  return out;
}

std::vector<NumericalSemigroup> maximal_elements(int frobenius, int threads) {
  std::vector<NumericalSemigroup> out;
  for (const ArfSequence& seq : refinement_free_sequences(frobenius, threads)) {
    out.push_back(semigroup_of_sequence(seq));
  }
  return out;
}

}  // namespace arf
