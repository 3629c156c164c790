#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "avoidance/bijections.hpp"
#include "avoidance/combnum.hpp"
#include "avoidance/errors.hpp"
#include "avoidance/oracle.hpp"
#include "support/brute.hpp"

using namespace avoidance;

namespace {
Word W(const char* text, int k = -1) { return Word::parse(text, k); }
PatternSet S(const char* text) { return PatternSet::parse(text); }

std::vector<Letter> sorted(const Word& w) {
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> excess_counts(const Word& w) {
  std::vector<int> out(static_cast<std::size_t>(w.alphabet_size()) + 1, 0);
  for (Letter a : w.letters()) ++out[a];
  for (auto& c : out) c = std::max(0, c - 1);
  return out;
}

const Permutation kExample = Permutation::parse("6,2,1,9,3,5,7,4,8,10");
}  // namespace

TEST_CASE("permutations") {
  CHECK(kExample.size() == 10);
  CHECK(kExample.to_string() == "6,2,1,9,3,5,7,4,8,10");
  CHECK(Permutation::parse("312") == Permutation({3, 1, 2}));
  CHECK_THROWS_AS(Permutation({1, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({2, 3}), InvalidArgument);
}

TEST_CASE("right-to-left minima") {
  CHECK(rl_minima(kExample) == std::vector<int>{10, 8, 4, 3, 1});
  CHECK(rl_minima(Permutation::identity(5)).size() == 5);
  CHECK(rl_minima(Permutation({4, 3, 2, 1})) == std::vector<int>{1});
  CHECK(rl_nonminima_count(kExample) == 5);
}

TEST_CASE("rho examples") {
  CHECK(rho_121_to_112(W("112")) == W("121"));
  // The excess 2 joins the end of the reduced word 22; the 1s do not move.
  CHECK(rho_121_to_112(W("2211")) == W("2211"));
  CHECK(rho_112_to_121(W("2121")) == W("2112"));
  CHECK(rho_121_to_112(W("12")) == W("12"));
  CHECK(rho_121_to_112(W("221")) != rho_121_to_112(W("212")));
  CHECK_THROWS_AS(rho_121_to_112(W("121")), PreconditionViolation);
  CHECK_THROWS_AS(rho_112_to_121(W("112")), PreconditionViolation);
}

TEST_CASE("rho is a bijection from 121-avoiders to 112-avoiders") {
  const auto p112 = Pattern::parse("112");
  const auto p121 = Pattern::parse("121");
  for (int k = 0; k <= 4; ++k) {
    for (int n = 0; n <= 7; ++n) {
      const auto sources = enumerate_avoiders(n, k, S("121"));
      std::set<Word> images;
      for (const auto& w : sources) {
        const auto image = rho_121_to_112(w);
        CHECK_FALSE(contains(image, p112));
        CHECK(sorted(image) == sorted(w));
        CHECK(excess_counts(image) == excess_counts(w));
        CHECK(rho_112_to_121(image) == w);
        images.insert(image);
      }
      const auto targets = enumerate_avoiders(n, k, S("112"));
      CHECK(images == std::set<Word>(targets.begin(), targets.end()));
      for (const auto& w : targets) {
        const auto back = rho_112_to_121(w);
        CHECK_FALSE(contains(back, p121));
        CHECK(rho_121_to_112(back) == w);
      }
    }
  }
}

TEST_CASE("rho restricts to {111,121} -> {111,112}") {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 0; n <= 7; ++n) {
      std::set<Word> images;
      for (const auto& w : enumerate_avoiders(n, k, S("111,121"))) images.insert(rho_121_to_112(w));
      const auto targets = enumerate_avoiders(n, k, S("111,112"));
      CHECK(images == std::set<Word>(targets.begin(), targets.end()));
    }
  }
}

TEST_CASE("generalized rho") {
  for (const auto& w : enumerate_avoiders(5, 3, S("121"))) {
    CHECK(rho_general(w, {1, 1}, {2, 0}) == rho_121_to_112(w));
    CHECK(rho_general(w, {1, 1}, {1, 1}) == w);
  }
  CHECK_THROWS_AS(rho_general(W("12"), {1, 1}, {2, 1}), InvalidArgument);
  CHECK_THROWS_AS(rho_general(W("121"), {1, 1}, {2, 0}), PreconditionViolation);
  CHECK_THROWS_AS(rho_general(W("12"), {0, 0}, {0, 0}), InvalidArgument);

  for (int total = 1; total <= 3; ++total) {
    for (int m = 0; m <= total; ++m) {
      for (int m2 = 0; m2 <= total; ++m2) {
        const VmlShape from{m, total - m}, to{m2, total - m2};
        const PatternSet source{make_vml(from.m, from.l)}, target{make_vml(to.m, to.l)};
        for (int k = 0; k <= 3; ++k) {
          for (int n = 0; n <= 6; ++n) {
            std::set<Word> images;
            for (const auto& w : enumerate_avoiders(n, k, source)) {
              const auto image = rho_general(w, from, to);
              CHECK(avoids_all(image, target));
              CHECK(sorted(image) == sorted(w));
              CHECK(rho_general(image, to, from) == w);
              images.insert(image);
            }
            const auto expected = enumerate_avoiders(n, k, target);
            CHECK(images == std::set<Word>(expected.begin(), expected.end()));
          }
        }
      }
    }
  }
}

TEST_CASE("Algorithm 1 examples") {
  CHECK(alg1_perm_to_word(kExample) == W("4216235256"));
  CHECK(alg1_perm_to_word(kExample).alphabet_size() == 6);
  CHECK(alg1_perm_to_word(Permutation::identity(4)) == W("1111"));
  CHECK(alg1_perm_to_word(Permutation({2, 1})) == W("21"));
}

TEST_CASE("Algorithm 2 examples") {
  CHECK(alg2_word_to_perm(W("4216235256")) == kExample);
  CHECK(alg2_word_to_perm(W("1111")) == Permutation::identity(4));
  CHECK_THROWS_AS(alg2_word_to_perm(W("221")), PreconditionViolation);
  CHECK_THROWS_AS(alg2_word_to_perm(W("13")), PreconditionViolation);
}

TEST_CASE("Algorithms 1 and 2 are inverse on all of S_n") {
  const auto p221 = Pattern::parse("221");
  for (int n = 0; n <= 7; ++n) {
    for (const auto& values : brute::all_permutations(n)) {
      const Permutation pi(values);
      const auto sigma = alg1_perm_to_word(pi);
      CHECK(static_cast<std::size_t>(sigma.alphabet_size()) == rl_nonminima_count(pi) + 1);
      CHECK_FALSE(contains(sigma, p221));
      CHECK(alg2_word_to_perm(sigma) == pi);
      // The leftmost copy of each letter above 1 has a smaller letter after it.
      for (Letter a = 2; a <= sigma.alphabet_size(); ++a) {
        auto letters = sigma.letters();
        auto first = std::find(letters.begin(), letters.end(), a);
        REQUIRE(first != letters.end());
        CHECK(std::any_of(first + 1, letters.end(), [a](Letter b) { return b < a; }));
      }
    }
  }
}

TEST_CASE("the (pi, e) encoding of 221-avoiders") {
  const auto enc = decompose_221(W("4216235256", 6));
  CHECK(enc.perm == kExample);
  CHECK(enc.excess == std::vector<int>(10, 0));

  const auto small = decompose_221(W("13", 3));
  CHECK(small.perm == Permutation::identity(2));
  CHECK(small.excess == std::vector<int>{0, 2});
  CHECK(compose_221(small) == W("13", 3));

  CHECK_THROWS_AS(decompose_221(W("221")), PreconditionViolation);
  CHECK_THROWS_AS(compose_221({Permutation::identity(2), {1, 0}, 3}), PreconditionViolation);
  CHECK_THROWS_AS(compose_221({Permutation::identity(2), {0, 3}, 3}), PreconditionViolation);
  CHECK_THROWS_AS(compose_221({Permutation::identity(2), {0}, 3}), PreconditionViolation);
}

TEST_CASE("decompose and compose are inverse and count 221-avoiders") {
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= 4; ++k) {
      std::map<std::size_t, std::set<std::vector<int>>> perms_by_j;
      std::size_t words = 0;
      for (const auto& w : enumerate_avoiders(n, k, S("221"))) {
        ++words;
        const auto enc = decompose_221(w);
        const int j = static_cast<int>(rl_nonminima_count(enc.perm));
        CHECK(std::is_sorted(enc.excess.begin(), enc.excess.end()));
        for (int e : enc.excess) {
          CHECK(e >= 0);
          CHECK(e <= k - j - 1);
        }
        CHECK(compose_221(enc) == w);
        perms_by_j[j].insert({enc.perm.values().begin(), enc.perm.values().end()});
      }
      BigInt formula = 0;
      for (int j = 0; j <= n; ++j) formula += stirling1_unsigned(n, n - j) * multiset_count(k - j, n);
      CHECK(formula == words);
      CHECK(formula == count_avoiders(n, k, S("112")));
      if (n > 0) {
        for (const auto& [j, perms] : perms_by_j) {
          if (k - static_cast<int>(j) >= 1) CHECK(perms.size() == stirling1_unsigned(n, n - j));
        }
      }
    }
  }
}
