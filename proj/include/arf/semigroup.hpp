#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "arf/bitset.hpp"
#include "arf/error.hpp"

namespace arf {

/// Largest Frobenius number the bitset representation will materialize.
inline constexpr std::int64_t kMaxRepresentableFrobenius = std::int64_t{1} << 28;

/// A numerical semigroup stored as its Frobenius number F plus a membership
/// bitset over [0, F+1]. Every integer above F is implicitly a member.
/// The set of all nonnegative integers is encoded with F = -1 and members {0}.
class NumericalSemigroup {
 public:
  /// The whole of N.
  static NumericalSemigroup naturals();
  /// {0, F+1, ->}, the minimum of the Arf semigroups with Frobenius number F.
  static NumericalSemigroup delta(int frobenius);
  /// Checked construction from the members below F (0 must be among them).
  /// Throws InvalidSemigroup if the set is not additively closed or F is listed.
  static NumericalSemigroup from_small_elements(int frobenius, std::span<const int> small);
  /// Checked construction from a bitset over [0, frobenius + 1].
  static NumericalSemigroup from_bits(int frobenius, Bitset members);

  int frobenius() const noexcept { return frobenius_; }
  bool is_naturals() const noexcept { return frobenius_ < 0; }

  bool contains(std::int64_t x) const noexcept {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    return members_.test(static_cast<std::size_t>(x));
  }

  /// m(S), the least positive member.
  int multiplicity() const noexcept;
  /// g(S), the number of gaps.
  int genus() const noexcept;
  /// n(S), the number of members below F.
  int small_count() const noexcept;
  /// Members below F in increasing order.
  std::vector<int> small_elements() const;
  /// Gaps in increasing order.
  std::vector<int> gaps() const;

  const Bitset& bits() const noexcept { return members_; }

  /// S with one more member x (0 < x < F). No closure check.
  NumericalSemigroup with_member(int x) const;
  /// S with member x removed (0 < x < F). No closure check.
  NumericalSemigroup without_member(int x) const;

  bool is_subset_of(const NumericalSemigroup& other) const noexcept;

  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

  /// Canonical order: lexicographic on the increasing list of small elements,
  /// Frobenius number breaking ties.
  friend std::strong_ordering operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b);

 private:
  NumericalSemigroup(int frobenius, Bitset members)
      : frobenius_(frobenius), members_(std::move(members)) {}

  int frobenius_ = -1;
  Bitset members_;

  friend NumericalSemigroup intersect(const NumericalSemigroup&, const NumericalSemigroup&);
  friend NumericalSemigroup remove_multiplicity(const NumericalSemigroup&);
  friend NumericalSemigroup from_generators(std::span<const int>);
};

/// Strictly increasing minimal system of generators.
struct GeneratorSet {
  std::vector<int> gens;

  int embedding_dimension() const noexcept { return static_cast<int>(gens.size()); }
  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

/// Residue-class minima of S modulo n: entries[i] is the least member of S
/// congruent to i mod n.
struct AperyTable {
  int modulus = 0;
  std::vector<int> entries;

  /// The entries as a set, in increasing order.
  std::vector<int> sorted() const;
  friend bool operator==(const AperyTable&, const AperyTable&) = default;
};

/// An exact fraction, kept in lowest terms with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct MedFormulaValues {
  int frobenius;
  Rational genus;
};

NumericalSemigroup from_generators(std::span<const int> gens);
inline NumericalSemigroup from_generators(std::initializer_list<int> gens) {
  return from_generators(std::span<const int>(gens.begin(), gens.size()));
}

GeneratorSet minimal_generators(const NumericalSemigroup& s);
inline int embedding_dimension(const NumericalSemigroup& s) {
  return minimal_generators(s).embedding_dimension();
}

/// Ap(S, n). Throws NotAMember unless n is a positive member of S.
AperyTable apery_set(const NumericalSemigroup& s, int n);

/// PF(S) from the maximal elements of Ap(S, m(S)) under <=_S. Throws NoGaps for N.
std::vector<int> pseudo_frobenius(const NumericalSemigroup& s);
/// PF(S) from a precomputed Apery table of S.
std::vector<int> pseudo_frobenius(const NumericalSemigroup& s, const AperyTable& ap);

/// SG(S) = {x in PF(S) : 2x not in PF(S)}. Throws NoGaps for N.
std::vector<int> special_gaps(const NumericalSemigroup& s);
std::vector<int> special_gaps_from_pf(std::span<const int> pf);

int type(const NumericalSemigroup& s);

bool is_med(const NumericalSemigroup& s);
bool is_arf(const NumericalSemigroup& s);

/// The difference sequence (s_n - s_{n-1}, ..., s_1 - s_0) of N(S) u {F+1}.
/// Empty for N.
std::vector<int> difference_sequence(const NumericalSemigroup& s);

/// S \ {m(S)}. Throws NoGaps for N.
NumericalSemigroup remove_multiplicity(const NumericalSemigroup& s);

/// S_0 = S, S_{k+1} = S_k \ {m(S_k)}, stopping at Delta(F(S)); n(S) entries.
std::vector<NumericalSemigroup> associated_chain(const NumericalSemigroup& s);

NumericalSemigroup intersect(const NumericalSemigroup& a, const NumericalSemigroup& b);

/// (n_e - n_1, (n_2 + ... + n_e)/n_1 - (n_1 - 1)/2) for the msg of a MED
/// semigroup. Throws NotMed otherwise.
MedFormulaValues med_frobenius_genus_formula(const GeneratorSet& gens);

}  // namespace arf
