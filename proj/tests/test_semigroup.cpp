#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "arf/semigroup.hpp"
#include "oracle/oracle.hpp"

using namespace arf;

namespace {

NumericalSemigroup small(int f, std::vector<int> elems) { return NumericalSemigroup::from_small_elements(f, elems); }

std::vector<int> iota_vec(int lo, int hi) {
  std::vector<int> v;
  for (int x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

template <class F>
void for_all_semigroups_upto(int max_f, F&& body) {
  for (int f = 1; f <= max_f; ++f) {
    for (const auto& s : oracle::brute_all_semigroups(f)) body(s);
  }
}

}  // namespace

TEST_SUITE("from_generators") {
  TEST_CASE("<5,7,9>") {
    auto s = from_generators({5, 7, 9});
    CHECK(s.frobenius() == 13);
    CHECK(s.small_elements() == std::vector<int>{0, 5, 7, 9, 10, 12});
    CHECK(s.contains(14));
    CHECK_FALSE(s.contains(13));
  }
  TEST_CASE("<1> is N") {
    auto s = from_generators({1});
    CHECK(s.is_naturals());
    CHECK(s.frobenius() == -1);
    CHECK(s == NumericalSemigroup::naturals());
  }
  TEST_CASE("<6,...,11> is Delta(5)") { CHECK(from_generators({6, 7, 8, 9, 10, 11}) == NumericalSemigroup::delta(5)); }
  TEST_CASE("errors") {
    auto code = [](std::initializer_list<int> g) {
      try {
        (void)from_generators(g);
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::Contradiction;
    };
    CHECK(code({4, 6}) == ErrorCode::NotCofinite);
    CHECK(code({}) == ErrorCode::EmptyInput);
    CHECK(code({0, 3}) == ErrorCode::InvalidSemigroup);
  }
  TEST_CASE("huge Frobenius numbers are refused") {
    CHECK_THROWS_AS(from_generators({2147483646, 2147483647}), Error);
  }
  TEST_CASE("membership matches a knapsack scan on random generator sets") {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 200; ++trial) {
      std::uniform_int_distribution<int> count(1, 5), value(2, 40);
      std::vector<int> gens;
      for (int k = count(rng); k > 0; --k) gens.push_back(value(rng));
      int g = 0;
      for (int x : gens) g = std::gcd(g, x);
      if (g != 1) continue;
      auto s = from_generators(gens);
      const int top = 2000;
      std::vector<char> reach(top + 1, 0);
      reach[0] = 1;
      for (int x = 1; x <= top; ++x) {
        for (int a : gens) {
          if (a <= x && reach[static_cast<std::size_t>(x - a)]) reach[static_cast<std::size_t>(x)] = 1;
        }
      }
      for (int x = 0; x <= top; ++x) REQUIRE(s.contains(x) == static_cast<bool>(reach[static_cast<std::size_t>(x)]));
    }
  }
}

TEST_SUITE("minimal_generators") {
  TEST_CASE("{0,4,7,->}") { CHECK(minimal_generators(small(6, {0, 4})).gens == std::vector<int>{4, 7, 9, 10}); }
  TEST_CASE("N") { CHECK(minimal_generators(NumericalSemigroup::naturals()).gens == std::vector<int>{1}); }
  TEST_CASE("Delta(5)") { CHECK(minimal_generators(NumericalSemigroup::delta(5)).gens == iota_vec(6, 11)); }
  TEST_CASE("agrees with brute force and regenerates S, F <= 12") {
    for_all_semigroups_upto(12, [](const NumericalSemigroup& s) {
      auto gens = minimal_generators(s).gens;
      REQUIRE(gens == oracle::brute_minimal_generators(s));
      REQUIRE(gens.front() == s.multiplicity());
      REQUIRE(from_generators(gens) == s);
    });
  }
}

TEST_SUITE("apery_set") {
  TEST_CASE("Ap(<5,7,9>, 5)") {
    auto ap = apery_set(from_generators({5, 7, 9}), 5);
    CHECK(ap.sorted() == std::vector<int>{0, 7, 9, 16, 18});
    CHECK(ap.entries == std::vector<int>{0, 16, 7, 18, 9});
  }
  TEST_CASE("Ap(N, 1)") { CHECK(apery_set(NumericalSemigroup::naturals(), 1).entries == std::vector<int>{0}); }
  TEST_CASE("Ap(<2,7>, 2)") { CHECK(apery_set(from_generators({2, 7}), 2).sorted() == std::vector<int>{0, 7}); }
  TEST_CASE("modulus outside S") {
    auto s = from_generators({5, 7, 9});
    CHECK_THROWS_AS(apery_set(s, 6), Error);
    CHECK_THROWS_AS(apery_set(s, 0), Error);
  }
  TEST_CASE("one entry per residue class, agreeing with scan, F <= 10") {
    for_all_semigroups_upto(10, [](const NumericalSemigroup& s) {
      for (int n = 1; n <= s.frobenius() + 3; ++n) {
        if (!s.contains(n)) continue;
        auto ap = apery_set(s, n);
        REQUIRE(ap.entries.size() == static_cast<std::size_t>(n));
        REQUIRE(ap.entries[0] == 0);
        for (int i = 0; i < n; ++i) {
          REQUIRE(ap.entries[static_cast<std::size_t>(i)] % n == i);
          REQUIRE_FALSE(s.contains(ap.entries[static_cast<std::size_t>(i)] - n));
        }
        REQUIRE(ap.sorted() == oracle::brute_apery(s, n));
      }
    });
  }
}

TEST_SUITE("pseudo-Frobenius and special gaps") {
  TEST_CASE("<5,7,9>") {
    auto s = from_generators({5, 7, 9});
    CHECK(pseudo_frobenius(s) == std::vector<int>{11, 13});
    CHECK(type(s) == 2);
    CHECK(special_gaps(s) == std::vector<int>{11, 13});
  }
  TEST_CASE("<5,8,9,12> has special gap 4") {
    auto sg = special_gaps(from_generators({5, 8, 9, 12}));
    CHECK(std::find(sg.begin(), sg.end(), 4) != sg.end());
  }
  TEST_CASE("<2,7>") { CHECK(pseudo_frobenius(from_generators({2, 7})) == std::vector<int>{5}); }
  TEST_CASE("Delta(F)") {
    for (int f = 1; f <= 15; ++f) {
      auto d = NumericalSemigroup::delta(f);
      CHECK(pseudo_frobenius(d) == iota_vec(1, f));
      CHECK(special_gaps(d) == iota_vec((f + 2) / 2, f));
    }
  }
  TEST_CASE("N has no gaps") {
    CHECK_THROWS_AS(pseudo_frobenius(NumericalSemigroup::naturals()), Error);
    CHECK_THROWS_AS(special_gaps(NumericalSemigroup::naturals()), Error);
  }
  TEST_CASE("special gaps are exactly the gaps whose adjunction stays closed, F <= 12") {
    for_all_semigroups_upto(12, [](const NumericalSemigroup& s) {
      REQUIRE(pseudo_frobenius(s) == oracle::brute_pseudo_frobenius(s));
      REQUIRE(special_gaps(s) == oracle::brute_special_gaps(s));
      // Any Apery modulus gives the same PF.
      const int n = s.frobenius() + 1;
      REQUIRE(pseudo_frobenius(s, apery_set(s, n)) == oracle::brute_pseudo_frobenius(s));
    });
  }
}

TEST_SUITE("MED and Arf predicates") {
  TEST_CASE("examples") {
    CHECK(is_med(from_generators({4, 6, 21, 23})));
    CHECK_FALSE(is_med(from_generators({5, 7, 9})));
    CHECK(is_med(from_generators({4, 7, 9, 10})));
    CHECK(is_med(NumericalSemigroup::naturals()));
    CHECK(is_arf(from_generators({4, 6, 21, 23})));
    CHECK_FALSE(is_arf(from_generators({4, 17, 18, 23})));
    CHECK(is_arf(NumericalSemigroup::naturals()));
    for (int f = 1; f <= 10; ++f) CHECK(is_arf(NumericalSemigroup::delta(f)));
  }
  TEST_CASE("difference sequences") {
    CHECK(difference_sequence(from_generators({4, 6, 21, 23})) == std::vector<int>{2, 2, 2, 2, 2, 2, 2, 2, 4});
    CHECK(difference_sequence(from_generators({4, 17, 18, 23})) == std::vector<int>{2, 1, 1, 4, 4, 4, 4});
  }
  TEST_CASE("predicates agree with definitions and chain characterization, F <= 12") {
    for_all_semigroups_upto(12, [](const NumericalSemigroup& s) {
      const bool med = is_med(s);
      const bool arf = is_arf(s);
      REQUIRE(med == oracle::brute_is_med(s));
      REQUIRE(med == (embedding_dimension(s) == s.multiplicity()));
      REQUIRE(arf == oracle::brute_is_arf(s));
      if (arf) REQUIRE(med);
      const auto chain = associated_chain(s);
      const bool chain_med = std::all_of(chain.begin(), chain.end(), [](const auto& t) { return is_med(t); });
      REQUIRE(arf == chain_med);
      if (med) REQUIRE(type(s) == s.multiplicity() - 1);
    });
  }
}

TEST_SUITE("remove_multiplicity and associated_chain") {
  TEST_CASE("examples") {
    CHECK(remove_multiplicity(from_generators({2, 7})) == from_generators({4, 6, 7, 9}));
    CHECK(remove_multiplicity(NumericalSemigroup::delta(5)) == NumericalSemigroup::delta(6));
    CHECK(remove_multiplicity(from_generators({3, 7, 8})) == NumericalSemigroup::delta(5));
    CHECK_THROWS_AS(remove_multiplicity(NumericalSemigroup::naturals()), Error);
  }
  TEST_CASE("chains") {
    CHECK(associated_chain(NumericalSemigroup::delta(7)) == std::vector{NumericalSemigroup::delta(7)});
    CHECK(associated_chain(from_generators({2, 7})) ==
          std::vector{from_generators({2, 7}), from_generators({4, 6, 7, 9}), NumericalSemigroup::delta(5)});
    CHECK(associated_chain(from_generators({5, 7, 9})).size() == 6);
  }
  TEST_CASE("chain has n(S) links ending at Delta(F), F <= 11") {
    for_all_semigroups_upto(11, [](const NumericalSemigroup& s) {
      auto chain = associated_chain(s);
      REQUIRE(chain.size() == static_cast<std::size_t>(s.small_count()));
      REQUIRE(chain.back() == NumericalSemigroup::delta(s.frobenius()));
      for (std::size_t i = 1; i < chain.size(); ++i) {
        REQUIRE(chain[i].frobenius() == s.frobenius());
        REQUIRE(chain[i] == remove_multiplicity(chain[i - 1]));
      }
    });
  }
}

TEST_SUITE("accessors") {
  TEST_CASE("<5,7,9>") {
    auto s = from_generators({5, 7, 9});
    CHECK(s.multiplicity() == 5);
    CHECK(embedding_dimension(s) == 3);
    CHECK(s.frobenius() == 13);
    CHECK(s.genus() == 8);
    CHECK(s.small_count() == 6);
  }
  TEST_CASE("Delta(5)") {
    auto s = NumericalSemigroup::delta(5);
    CHECK(s.multiplicity() == 6);
    CHECK(embedding_dimension(s) == 6);
    CHECK(s.genus() == 5);
    CHECK(s.small_count() == 1);
  }
  TEST_CASE("<5> u {18,->}") { CHECK(small(17, {0, 5, 10, 15}).genus() == 14); }
  TEST_CASE("N") {
    auto n = NumericalSemigroup::naturals();
    CHECK(n.genus() == 0);
    CHECK(n.small_count() == 0);
    CHECK(n.multiplicity() == 1);
  }
  TEST_CASE("g + n = F + 1 and e <= m, F <= 12") {
    for_all_semigroups_upto(12, [](const NumericalSemigroup& s) {
      REQUIRE(s.genus() + s.small_count() == s.frobenius() + 1);
      REQUIRE(s.genus() == static_cast<int>(s.gaps().size()));
      REQUIRE(embedding_dimension(s) <= s.multiplicity());
    });
  }
}

TEST_SUITE("MED Frobenius/genus formula") {
  TEST_CASE("examples") {
    auto a = med_frobenius_genus_formula(GeneratorSet{{4, 6, 7, 9}});
    CHECK(a.frobenius == 5);
    CHECK(a.genus == Rational{4, 1});
    auto b = med_frobenius_genus_formula(GeneratorSet{{2, 7}});
    CHECK(b.frobenius == 5);
    CHECK(b.genus == Rational{3, 1});
    auto c = med_frobenius_genus_formula(GeneratorSet{{4, 7, 9, 10}});
    CHECK(c.frobenius == 6);
    CHECK(c.genus == Rational{5, 1});
  }
  TEST_CASE("non-MED input") {
    CHECK_THROWS_AS(med_frobenius_genus_formula(GeneratorSet{{5, 7, 9}}), Error);
    CHECK_THROWS_AS(med_frobenius_genus_formula(GeneratorSet{{4, 6, 7, 9, 11}}), Error);
  }
  TEST_CASE("matches accessors on every MED semigroup, F <= 12") {
    for_all_semigroups_upto(12, [](const NumericalSemigroup& s) {
      if (!is_med(s)) return;
      auto v = med_frobenius_genus_formula(minimal_generators(s));
      REQUIRE(v.frobenius == s.frobenius());
      REQUIRE(v.genus == Rational{s.genus(), 1});
    });
  }
}

TEST_SUITE("representation") {
  TEST_CASE("checked construction rejects non-semigroups") {
    CHECK_THROWS_AS(small(7, {0, 3}), Error);     // 6 missing
    CHECK_THROWS_AS(small(6, {0, 3}), Error);     // 3 + 3 = F
    CHECK_THROWS_AS(small(5, {0, 5}), Error);     // F listed
    CHECK_NOTHROW(small(7, {0, 3, 6}));
  }
  TEST_CASE("intersection keeps the larger Frobenius number, F <= 8") {
    std::vector<NumericalSemigroup> all;
    for (int f = 1; f <= 8; ++f) {
      auto level = oracle::brute_all_semigroups(f);
      all.insert(all.end(), level.begin(), level.end());
    }
    for (const auto& a : all) {
      for (const auto& b : all) {
        auto c = intersect(a, b);
        REQUIRE(c.frobenius() == std::max(a.frobenius(), b.frobenius()));
        for (int x = 0; x <= c.frobenius() + 1; ++x) REQUIRE(c.contains(x) == (a.contains(x) && b.contains(x)));
      }
    }
  }
  TEST_CASE("subset relation") {
    CHECK(NumericalSemigroup::delta(5).is_subset_of(from_generators({2, 7})));
    CHECK_FALSE(from_generators({2, 7}).is_subset_of(NumericalSemigroup::delta(5)));
    CHECK(NumericalSemigroup::delta(6).is_subset_of(NumericalSemigroup::delta(5)));
    CHECK(from_generators({3, 5}).is_subset_of(NumericalSemigroup::naturals()));
  }
  TEST_CASE("canonical order is lexicographic on small elements") {
    CHECK(from_generators({2, 7}) < from_generators({3, 7, 8}));
    CHECK(NumericalSemigroup::delta(5) < from_generators({2, 7}));
    CHECK(from_generators({3, 7, 8}) < from_generators({4, 6, 7, 9}));
  }
}
