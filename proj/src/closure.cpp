#include "arf/closure.hpp"

#include <algorithm>
#include <string>

#include "arf/error.hpp"

namespace arf {

Bitset arf_fixpoint(Bitset bits, int frobenius) {
  const auto f = static_cast<std::size_t>(frobenius);
  // Only triples x >= y >= z with x + y - z <= F can add anything, and those
  // force x, y, z <= F. z = 0 gives plain sums, so additive closure comes along.
  std::vector<std::size_t> low;
  bool changed = true;
  while (changed && !bits.test(f)) {
    changed = false;
    low.clear();
    for (std::size_t i = bits.find_first(); i != Bitset::npos && i <= f; i = bits.find_next(i + 1)) low.push_back(i);
    for (std::size_t zi = 0; zi < low.size(); ++zi) {
      for (std::size_t yi = zi; yi < low.size(); ++yi) {
        const std::size_t shift = low[yi] - low[zi];
        if (low[yi] + shift > f) break;
        for (std::size_t xi = yi; xi < low.size(); ++xi) {
          const std::size_t target = low[xi] + shift;
          if (target > f) break;
          if (!bits.test(target)) {
            bits.set(target);
            changed = true;
          }
        }
      }
    }
  }
  return bits;
}

ClosureResult ar_closure(std::span<const int> x, int frobenius) {
  if (frobenius < 1) throw Error(ErrorCode::InvalidFrobenius, "Frobenius number must be positive");
  if (frobenius > kMaxRepresentableFrobenius) throw Error(ErrorCode::ScaleLimit, "Frobenius number too large");
  ClosureResult result;
  result.input.assign(x.begin(), x.end());
  std::sort(result.input.begin(), result.input.end());
  result.input.erase(std::unique(result.input.begin(), result.input.end()), result.input.end());
  result.frobenius = frobenius;

  // X must avoid Delta(F) = {0} u [F+1, ->).
  for (int v : result.input) {
    if (v <= 0 || v > frobenius) return result;
  }

  Bitset seed(static_cast<std::size_t>(frobenius) + 2);
  seed.set(0);
  seed.set(static_cast<std::size_t>(frobenius) + 1);
  for (int v : result.input) seed.set(static_cast<std::size_t>(v));
  Bitset closed = arf_fixpoint(std::move(seed), frobenius);
  if (closed.test(static_cast<std::size_t>(frobenius))) return result;

  result.is_ar_set = true;
  result.closure = NumericalSemigroup::from_bits(frobenius, std::move(closed));
  return result;
}

std::vector<int> minimal_ar_generators(const NumericalSemigroup& s) {
  if (s.is_naturals() || !is_arf(s)) throw Error(ErrorCode::NotInCovariety, "semigroup is not Arf");
  std::vector<int> out;
  for (int x : minimal_generators(s).gens) {
    if (x >= s.frobenius()) break;
    if (is_arf(s.without_member(x))) out.push_back(x);
  }
  return out;
}

int ar_rank(const NumericalSemigroup& s) { return static_cast<int>(minimal_ar_generators(s).size()); }

std::vector<NumericalSemigroup> rank_one_catalog(int frobenius) {
  if (frobenius < 1) throw Error(ErrorCode::InvalidFrobenius, "Frobenius number must be positive");
  std::vector<NumericalSemigroup> out;
  for (int m = 2; m < frobenius; ++m) {
    if (frobenius % m == 0) continue;
    std::vector<int> small;
    for (int k = 0; k < frobenius; k += m) small.push_back(k);
    out.push_back(NumericalSemigroup::from_small_elements(frobenius, small));
  }
  return out;
}

std::int64_t divisor_count(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidFrobenius, "divisor count needs a positive integer");
  std::int64_t count = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int exponent = 0;
    while (n % p == 0) {
      n /= p;
      ++exponent;
    }
    count *= exponent + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

std::int64_t count_rank_one(std::int64_t frobenius) {
  if (frobenius < 2) throw Error(ErrorCode::InvalidFrobenius, "rank-one count needs F >= 2");
  return frobenius - divisor_count(frobenius);
}

}  // namespace arf
