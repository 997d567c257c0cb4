#include <doctest.h>

#include "fractal/catalog.hpp"
#include "fractal/subshift.hpp"

using namespace fractal;

TEST_CASE("substitution application and fixed point") {
  Substitution sigma = sigma_substitution();
  CHECK(apply_substitution(sigma, "a") == "aca");
  CHECK(apply_substitution(sigma, "aca") == "acabaca");
  CHECK(apply_substitution(sigma, "bcd") == "dbc");

  std::string w = "a";
  for (int n = 0; n <= 10; ++n) {
    CHECK(w.size() == (1u << (n + 1)) - 1);
    w = apply_substitution(sigma, w);
  }

  std::string eta = fixed_point_prefix(sigma, 'a', 16);
  CHECK(eta == "acabacadacabacac");
  // nested prefixes
  std::string eta2 = fixed_point_prefix(sigma, 'a', 64);
  CHECK(eta2.substr(0, 16) == eta);

  CHECK_THROWS_AS(fixed_point_prefix(sigma, 'b', 8), PrefixConditionViolated);
  Substitution bad{"ab", {{'a', "ba"}, {'b', "a"}}};
  CHECK_THROWS_AS(fixed_point_prefix(bad, 'a', 8), PrefixConditionViolated);
  Substitution malformed{"ab", {{'a', "ab"}}};
  CHECK_THROWS_AS(apply_substitution(malformed, "a"), MalformedTable);
}

TEST_CASE("toeplitz structure of the fixed point") {
  std::string eta = fixed_point_prefix(sigma_substitution(), 'a', 1u << 14);
  auto res = toeplitz_periods(eta);
  REQUIRE(res.period.count(0));
  CHECK(res.period.at(0) == 2);  // every other letter is a
  for (const auto& [pos, p] : res.period) {
    CHECK((p & (p - 1)) == 0);  // power of two
  }
  CHECK(res.period.size() + res.skipped == (1u << 14) / 4);

  // constant substitution: everything has period 1
  Substitution constant{"a", {{'a', "aa"}}};
  auto rc = toeplitz_periods(fixed_point_prefix(constant, 'a', 256));
  for (const auto& [pos, p] : rc.period) CHECK(p == 1);
  CHECK(rc.skipped == 0);
}

TEST_CASE("primitivity") {
  auto s = is_primitive(sigma_substitution());
  CHECK_FALSE(s.primitive);  // b,c,d never reproduce a
  auto sp = is_primitive(sigma_prime_substitution());
  CHECK(sp.primitive);
  auto tm = is_primitive(thue_morse_substitution());
  CHECK(tm.primitive);
  CHECK(tm.witness_k == 1);  // the incidence matrix is already positive

  auto M = substitution_matrix(sigma_substitution());
  // column a: aca contains two a's and one c
  CHECK(M[0][0] == 2);
  CHECK(M[2][0] == 1);
  CHECK(M[1][0] == 0);
  // |sigma^n(a)| equals the column sum of the n-th matrix power
  Substitution sigma = sigma_substitution();
  std::string w = "a";
  std::vector<long long> counts = {1, 0, 0, 0};
  for (int n = 0; n < 8; ++n) {
    w = apply_substitution(sigma, w);
    std::vector<long long> next(4, 0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) next[i] += M[i][j] * counts[j];
    counts = next;
    CHECK(w.size() == (std::size_t)(counts[0] + counts[1] + counts[2] +
                                    counts[3]));
  }
}

TEST_CASE("factor language and repetitivity") {
  auto lang1 = language(sigma_substitution(), 'a', 1);
  std::set<std::string> letters(lang1.factors.begin(), lang1.factors.end());
  CHECK(letters == std::set<std::string>{"a", "b", "c", "d"});

  // sigma and sigma' generate the same subshift language up to length 20,
  // after identifying the two fixed points by the letter exchange b <-> d
  auto l1 = language(sigma_substitution(), 'a', 20);
  auto l2 = language(sigma_prime_substitution(), 'a', 20);
  CHECK(l1.factors.size() == l2.factors.size());
  CHECK(l1.factors != l2.factors);  // raw languages differ...
  auto perm = language_match_permutation(l2, l1, "abcd");
  REQUIRE(!perm.empty());  // ...but a relabeling matches them exactly
  CHECK(perm.at('a') == 'a');
  CHECK(perm.at('b') == 'd');
  CHECK(perm.at('c') == 'c');
  CHECK(perm.at('d') == 'b');
  // equal languages match under the identity
  auto idp = language_match_permutation(l1, l1, "abcd");
  REQUIRE(!idp.empty());
  for (char c : std::string("abcd")) CHECK(idp.at(c) == c);

  double c16 = repetitivity_bound(sigma_substitution(), 'a', 16);
  CHECK(c16 >= 1.0);
  CHECK(c16 < 64.0);  // finite, desk-scale sanity bound

  Substitution constant{"a", {{'a', "aa"}}};
  CHECK(repetitivity_bound(constant, 'a', 4) == doctest::Approx(1.0));
}

TEST_CASE("presentation relators") {
  auto rels = presentation_relators(4);
  REQUIRE(rels.size() == 10);
  CHECK(rels[0] == "adadadad");
  CHECK(rels[1] == "acacacacacacacac");  // sigma((ad)^4) = (acac)^4
  CHECK(rels[5] == "adacacadacacadacacadacac");
  auto g = catalog_get("grigorchuk");
  for (const auto& r : rels) CHECK(g.word(r).is_identity());
  // perturbing one letter overwhelmingly breaks the relation
  int broken = 0, total = 0;
  for (const auto& r : {rels[0], rels[1], rels[5]}) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (char c : {'a', 'b', 'c', 'd'}) {
        if (c == r[i]) continue;
        std::string w = r;
        w[i] = c;
        ++total;
        if (!g.word(w).is_identity()) ++broken;
      }
    }
  }
  CHECK(broken > total * 9 / 10);
}
