#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arf/semigroup.hpp"

namespace arf {

/// Outcome of closing a finite set X inside Ar(F).
struct ClosureResult {
  std::vector<int> input;  // X, sorted and deduplicated
  int frobenius = 0;
  bool is_ar_set = false;
  /// The least element of Ar(F) containing X; empty when X is not an Ar(F)-set.
  std::optional<NumericalSemigroup> closure;
};

/// Ar(F)[X]. X must avoid {0} u [F+1, ->) and lie in some Arf semigroup with
/// Frobenius number F; otherwise is_ar_set is false. Throws InvalidFrobenius for F < 1.
ClosureResult ar_closure(std::span<const int> x, int frobenius);

/// Least Arf semigroup containing every member of `seed` below F plus
/// everything above F, as a membership bitset over [0, F+1]. Bit F is set
/// exactly when no Arf semigroup with Frobenius number F contains the seed.
Bitset arf_fixpoint(Bitset seed, int frobenius);

/// {x in msg(S) : S \ {x} in Ar(F(S))}, increasing. Throws NotInCovariety
/// unless S is Arf and different from N.
std::vector<int> minimal_ar_generators(const NumericalSemigroup& s);

int ar_rank(const NumericalSemigroup& s);

/// <m> u {F+1, ->} for every 2 <= m < F with m not dividing F, ordered by m.
std::vector<NumericalSemigroup> rank_one_catalog(int frobenius);

/// F minus the number of positive divisors of F. Requires F >= 2.
std::int64_t count_rank_one(std::int64_t frobenius);

/// Number of positive divisors via trial-division factorization.
std::int64_t divisor_count(std::int64_t n);

}  // namespace arf
