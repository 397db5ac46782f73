#include "arf/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "arf/sequence.hpp"

namespace arf {

namespace {

// Additive closure of a candidate membership bitset over [0, F+1]; sums above F
// are implicitly members, a sum equal to F is a violation.
bool additively_closed(int frobenius, const Bitset& bits) {
  std::vector<int> small;
  for (std::size_t i = bits.find_next(1); i != Bitset::npos && static_cast<int>(i) < frobenius;
       i = bits.find_next(i + 1)) {
    small.push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      int sum = small[i] + small[j];
      if (sum > frobenius) break;
      if (sum == frobenius || !bits.test(static_cast<std::size_t>(sum))) return false;
    }
  }
  return true;
}

void require_gaps(const NumericalSemigroup& s, const char* what) {
  if (s.is_naturals()) throw Error(ErrorCode::NoGaps, std::string(what) + " is undefined for N");
}

}  // namespace

NumericalSemigroup NumericalSemigroup::naturals() {
  Bitset bits(1);
  bits.set(0);
  return NumericalSemigroup(-1, std::move(bits));
}

NumericalSemigroup NumericalSemigroup::delta(int frobenius) {
  if (frobenius < 1) throw Error(ErrorCode::InvalidFrobenius, "Frobenius number must be positive");
  if (frobenius > kMaxRepresentableFrobenius) {
    throw Error(ErrorCode::ScaleLimit, "Frobenius number " + std::to_string(frobenius) + " too large");
  }
  Bitset bits(static_cast<std::size_t>(frobenius) + 2);
  bits.set(0);
  bits.set(static_cast<std::size_t>(frobenius) + 1);
  return NumericalSemigroup(frobenius, std::move(bits));
}

NumericalSemigroup NumericalSemigroup::from_small_elements(int frobenius, std::span<const int> small) {
  if (frobenius == -1) {
    if (std::any_of(small.begin(), small.end(), [](int x) { return x != 0; })) {
      throw Error(ErrorCode::InvalidSemigroup, "N has no small elements");
    }
    return naturals();
  }
  if (frobenius < 1 || frobenius > kMaxRepresentableFrobenius) {
    throw Error(ErrorCode::InvalidSemigroup, "Frobenius number out of range");
  }
  Bitset bits(static_cast<std::size_t>(frobenius) + 2);
  bits.set(0);
  bits.set(static_cast<std::size_t>(frobenius) + 1);
  for (int x : small) {
    if (x < 0 || x >= frobenius) {
      throw Error(ErrorCode::InvalidSemigroup, "small element " + std::to_string(x) + " out of [0, F)");
    }
    bits.set(static_cast<std::size_t>(x));
  }
  return from_bits(frobenius, std::move(bits));
}

NumericalSemigroup NumericalSemigroup::from_bits(int frobenius, Bitset members) {
  if (frobenius == -1) {
    if (members.size() != 1 || !members.test(0)) throw Error(ErrorCode::InvalidSemigroup, "bad encoding of N");
    return naturals();
  }
  if (frobenius < 1 || members.size() != static_cast<std::size_t>(frobenius) + 2) {
    throw Error(ErrorCode::InvalidSemigroup, "membership bitset must cover [0, F+1]");
  }
  if (!members.test(0) || !members.test(static_cast<std::size_t>(frobenius) + 1) ||
      members.test(static_cast<std::size_t>(frobenius))) {
    throw Error(ErrorCode::InvalidSemigroup, "0 and F+1 must be members and F must not");
  }
  if (!additively_closed(frobenius, members)) {
    throw Error(ErrorCode::InvalidSemigroup, "set is not closed under addition");
  }
  return NumericalSemigroup(frobenius, std::move(members));
}

int NumericalSemigroup::multiplicity() const noexcept {
  if (is_naturals()) return 1;
  return static_cast<int>(members_.find_next(1));
}

int NumericalSemigroup::small_count() const noexcept {
  if (is_naturals()) return 0;
  return static_cast<int>(members_.count()) - 1;
}

int NumericalSemigroup::genus() const noexcept { return frobenius_ + 1 - small_count(); }

std::vector<int> NumericalSemigroup::small_elements() const {
  std::vector<int> out;
  if (is_naturals()) return out;
  out.reserve(static_cast<std::size_t>(small_count()));
  for (std::size_t i = members_.find_first(); static_cast<int>(i) < frobenius_; i = members_.find_next(i + 1)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> NumericalSemigroup::gaps() const {
  std::vector<int> out;
  for (int x = 1; x <= frobenius_; ++x) {
    if (!members_.test(static_cast<std::size_t>(x))) out.push_back(x);
  }
  return out;
}

NumericalSemigroup NumericalSemigroup::with_member(int x) const {
  Bitset bits = members_;
  bits.set(static_cast<std::size_t>(x));
  return NumericalSemigroup(frobenius_, std::move(bits));
}

NumericalSemigroup NumericalSemigroup::without_member(int x) const {
  Bitset bits = members_;
  bits.reset(static_cast<std::size_t>(x));
  return NumericalSemigroup(frobenius_, std::move(bits));
}

bool NumericalSemigroup::is_subset_of(const NumericalSemigroup& other) const noexcept {
  if (other.is_naturals()) return true;
  if (is_naturals()) return false;
  // Every integer above F(*this) is in *this, so other must hold them too.
  if (frobenius_ < other.frobenius_) return false;
  for (std::size_t i = members_.find_first(); i != Bitset::npos; i = members_.find_next(i + 1)) {
    if (!other.contains(static_cast<std::int64_t>(i))) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  const Bitset& x = a.members_;
  const Bitset& y = b.members_;
  std::size_t i = x.find_first();
  std::size_t j = y.find_first();
  while (true) {
    bool a_done = i == Bitset::npos || static_cast<int>(i) >= a.frobenius_;
    bool b_done = j == Bitset::npos || static_cast<int>(j) >= b.frobenius_;
    if (a_done || b_done) {
      if (a_done != b_done) return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
      return a.frobenius_ <=> b.frobenius_;
    }
    if (i != j) return i <=> j;
    i = x.find_next(i + 1);
    j = y.find_next(j + 1);
  }
}

std::vector<int> AperyTable::sorted() const {
  std::vector<int> out = entries;
  std::sort(out.begin(), out.end());
  return out;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

NumericalSemigroup from_generators(std::span<const int> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "no generators given");
  int g = 0;
  for (int x : gens) {
    if (x <= 0) throw Error(ErrorCode::InvalidSemigroup, "generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw Error(ErrorCode::NotCofinite, "gcd of generators is " + std::to_string(g));

  const int m = *std::min_element(gens.begin(), gens.end());
  if (m == 1) return NumericalSemigroup::naturals();
  if (m > kMaxRepresentableFrobenius) throw Error(ErrorCode::ScaleLimit, "multiplicity too large");

  // Apery set w.r.t. m as shortest paths over residues mod m.
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(m), kInf);
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (int x : gens) {
      std::int64_t nd = d + x;
      int nr = static_cast<int>(nd % m);
      if (nd < dist[static_cast<std::size_t>(nr)]) {
        dist[static_cast<std::size_t>(nr)] = nd;
        queue.emplace(nd, nr);
      }
    }
  }
  const std::int64_t frob = *std::max_element(dist.begin(), dist.end()) - m;
  if (frob > kMaxRepresentableFrobenius) {
    throw Error(ErrorCode::ScaleLimit, "Frobenius number " + std::to_string(frob) + " too large to represent");
  }
  const int f = static_cast<int>(frob);
  Bitset bits(static_cast<std::size_t>(f) + 2);
  for (int x = 0; x <= f + 1; ++x) {
    if (x >= dist[static_cast<std::size_t>(x % m)]) bits.set(static_cast<std::size_t>(x));
  }
  return NumericalSemigroup(f, std::move(bits));
}

GeneratorSet minimal_generators(const NumericalSemigroup& s) {
  if (s.is_naturals()) return GeneratorSet{{1}};
  const int m = s.multiplicity();
  const int f = s.frobenius();
  const std::vector<int> small = s.small_elements();
  GeneratorSet out;
  // Anything above F + m is m plus a member above F.
  for (int x = m; x <= f + m; ++x) {
    if (!s.contains(x)) continue;
    bool decomposable = false;
    for (int a : small) {
      if (a == 0) continue;
      if (2 * a > x) break;
      if (s.contains(x - a)) {
        decomposable = true;
        break;
      }
    }
    // The smaller summand is at most x/2 <= F, so scanning small elements suffices.
    if (!decomposable) out.gens.push_back(x);
  }
  return out;
}

AperyTable apery_set(const NumericalSemigroup& s, int n) {
  if (n < 1 || !s.contains(n)) {
    throw Error(ErrorCode::NotAMember, std::to_string(n) + " is not a positive element of S");
  }
  AperyTable ap{n, std::vector<int>(static_cast<std::size_t>(n), -1)};
  int missing = n;
  const std::int64_t limit = static_cast<std::int64_t>(s.frobenius()) + n;
  for (std::int64_t x = 0; x <= limit && missing > 0; ++x) {
    if (!s.contains(x)) continue;
    int& slot = ap.entries[static_cast<std::size_t>(x % n)];
    if (slot < 0) {
      slot = static_cast<int>(x);
      --missing;
    }
  }
  return ap;
}

std::vector<int> pseudo_frobenius(const NumericalSemigroup& s, const AperyTable& ap) {
  require_gaps(s, "PF(S)");
  const int top = *std::max_element(ap.entries.begin(), ap.entries.end());
  Bitset in_table(static_cast<std::size_t>(top) + 1);
  for (int w : ap.entries) in_table.set(static_cast<std::size_t>(w));

  std::vector<int> pf;
  for (int w : ap.entries) {
    // w is maximal under <=_S iff w + w' leaves the table for every nonzero w'.
    bool maximal = true;
    for (int other : ap.entries) {
      if (other == 0) continue;
      std::int64_t sum = static_cast<std::int64_t>(w) + other;
      if (sum <= top && in_table.test(static_cast<std::size_t>(sum))) {
        maximal = false;
        break;
      }
    }
    if (maximal) pf.push_back(w - ap.modulus);
  }
  std::sort(pf.begin(), pf.end());
  return pf;
}

std::vector<int> pseudo_frobenius(const NumericalSemigroup& s) {
  require_gaps(s, "PF(S)");
  return pseudo_frobenius(s, apery_set(s, s.multiplicity()));
}

std::vector<int> special_gaps_from_pf(std::span<const int> pf) {
  std::vector<int> sg;
  for (int x : pf) {
    if (!std::binary_search(pf.begin(), pf.end(), 2 * x)) sg.push_back(x);
  }
  return sg;
}

std::vector<int> special_gaps(const NumericalSemigroup& s) {
  require_gaps(s, "SG(S)");
  return special_gaps_from_pf(pseudo_frobenius(s));
}

int type(const NumericalSemigroup& s) { return static_cast<int>(pseudo_frobenius(s).size()); }

bool is_med(const NumericalSemigroup& s) {
  if (s.is_naturals()) return true;
  const int m = s.multiplicity();
  std::vector<int> expected = apery_set(s, m).sorted();
  expected.front() = m;  // drop 0, add m; m is below every other Apery element
  std::sort(expected.begin(), expected.end());
  return minimal_generators(s).gens == expected;
}

std::vector<int> difference_sequence(const NumericalSemigroup& s) {
  std::vector<int> out;
  if (s.is_naturals()) return out;
  std::vector<int> elems = s.small_elements();
  elems.push_back(s.frobenius() + 1);
  for (std::size_t i = elems.size() - 1; i > 0; --i) out.push_back(elems[i] - elems[i - 1]);
  return out;
}

bool is_arf(const NumericalSemigroup& s) {
  if (s.is_naturals()) return true;
  return validate_sequence(difference_sequence(s));
}

NumericalSemigroup remove_multiplicity(const NumericalSemigroup& s) {
  require_gaps(s, "S \\ {m(S)}");
  const int m = s.multiplicity();
  if (m == s.frobenius() + 1) return NumericalSemigroup::delta(m);
  return s.without_member(m);
}

std::vector<NumericalSemigroup> associated_chain(const NumericalSemigroup& s) {
  require_gaps(s, "the associated chain");
  std::vector<NumericalSemigroup> chain{s};
  while (chain.back().small_count() > 1) chain.push_back(remove_multiplicity(chain.back()));
  return chain;
}

NumericalSemigroup intersect(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  const int f = std::max(a.frobenius(), b.frobenius());
  if (f < 0) return NumericalSemigroup::naturals();
  Bitset bits(static_cast<std::size_t>(f) + 2);
  for (int x = 0; x <= f + 1; ++x) {
    if (a.contains(x) && b.contains(x)) bits.set(static_cast<std::size_t>(x));
  }
  return NumericalSemigroup(f, std::move(bits));
}

MedFormulaValues med_frobenius_genus_formula(const GeneratorSet& gens) {
  if (gens.gens.empty()) throw Error(ErrorCode::EmptyInput, "no generators given");
  NumericalSemigroup s = [&] {
    try {
      return from_generators(gens.gens);
    } catch (const Error& e) {
      throw Error(ErrorCode::NotMed, e.what());
    }
  }();
  if (minimal_generators(s) != gens || !is_med(s)) {
    throw Error(ErrorCode::NotMed, "not the minimal generators of a MED semigroup");
  }
  const std::int64_t n1 = gens.gens.front();
  std::int64_t rest = 0;
  for (std::size_t i = 1; i < gens.gens.size(); ++i) rest += gens.gens[i];
  return MedFormulaValues{
      gens.gens.back() - gens.gens.front(),
      Rational::make(2 * rest - n1 * (n1 - 1), 2 * n1),
  };
}

}  // namespace arf
