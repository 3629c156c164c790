#include <doctest.h>

#include "avoidance/errors.hpp"
#include "avoidance/words.hpp"
#include "support/brute.hpp"

using namespace avoidance;

namespace {
Pattern P(const char* text) { return Pattern::parse(text); }
Word W(const char* text, int k = -1) { return Word::parse(text, k); }
}  // namespace

TEST_CASE("word parsing and validation") {
  CHECK(W("4216235256").size() == 10);
  CHECK(W("4216235256").alphabet_size() == 6);
  CHECK(W("1,10,2").max_letter() == 10);
  CHECK(W("1,10,2").to_string() == "1,10,2");
  CHECK(W("", 3).empty());
  CHECK_THROWS_AS(W("104"), InvalidArgument);
  CHECK_THROWS_AS(W("13", 2), InvalidArgument);
  CHECK_THROWS_AS(W("1,,2"), InvalidArgument);
}

TEST_CASE("patterns must use every letter up to their maximum") {
  CHECK_NOTHROW(P("1231"));
  CHECK_THROWS_AS(P("13"), InvalidArgument);
  CHECK_THROWS_AS(P(""), InvalidArgument);
  CHECK(P("112").letter_count() == 2);
}

TEST_CASE("pattern set text") {
  const auto s = PatternSet::parse("{221, 112}");
  CHECK(s.size() == 2);
  CHECK(s.to_string() == "112,221");
  CHECK(PatternSet::parse("112/221") == s);
  CHECK(PatternSet::parse("112 221 112") == s);
  CHECK(PatternSet::parse("{}").empty());
  CHECK(PatternSet::parse("").to_string() == "{}");
  CHECK(PatternSet::parse("[1,2,3,4,5,6,7,8,9,10]").to_string() == "[1,2,3,4,5,6,7,8,9,10]");
  CHECK(PatternSet::parse("112").is_subset_of(s));
  CHECK_THROWS_AS(PatternSet::parse("{112"), InvalidArgument);
}

TEST_CASE("containment examples") {
  CHECK(contains(W("112"), P("112")));
  CHECK_FALSE(contains(W("4216235256", 6), P("221")));
  CHECK_FALSE(contains(W("212"), P("112")));
  CHECK(contains(W("2213"), P("112")));
  CHECK(contains(W("31425"), P("123")));
  CHECK_FALSE(contains(W("", 2), P("1")));
}

TEST_CASE("avoids_all") {
  CHECK(avoids_all(W("121"), PatternSet::parse("112,221")));
  CHECK(avoids_all(W("2213"), PatternSet{}));
  CHECK_FALSE(avoids_all(W("112"), PatternSet::parse("112,121")));
}

TEST_CASE("containment agrees with subset search on every short word") {
  const char* patterns[] = {"1", "11", "12", "21", "111", "112", "121", "211", "122", "212",
                            "221", "123", "132", "213", "231", "312", "321", "1212", "2131"};
  for (int n = 0; n <= 6; ++n) {
    for (const auto& letters : brute::all_words(n, 3)) {
      const Word w(letters, 3);
      for (const char* text : patterns) {
        const auto p = P(text);
        CHECK_MESSAGE(contains(w, p) == brute::contains(letters, p.letters()),
                      w.to_string() << " vs " << text);
      }
    }
  }
}

TEST_CASE("anchored containment uses the last letter") {
  const auto p = P("112");
  CHECK(contains(W("1123").letters(), p, true));
  CHECK_FALSE(contains(W("1121").letters(), p, true));
  CHECK(contains(W("1121").letters(), p, false));
}

TEST_CASE("symmetries") {
  CHECK(reverse(P("1231")) == P("1321"));
  CHECK(complement(P("1231")) == P("3213"));
  CHECK(reverse(complement(P("1231"))) == P("3123"));
  CHECK(symmetry_class(P("111")) == std::vector<Pattern>{P("111")});
  CHECK(symmetry_class(P("112")) == std::vector<Pattern>{P("112"), P("122"), P("211"), P("221")});
  CHECK(W("123", 4).complemented() == W("432", 4));
}

TEST_CASE("pattern families") {
  CHECK(make_constant_pattern(3) == P("111"));
  CHECK(make_vml(2, 0) == P("112"));
  CHECK(make_vml(1, 1) == P("121"));
  CHECK(make_vml(0, 2) == P("211"));
  CHECK_THROWS_AS(make_vml(0, 0), InvalidArgument);
  CHECK_THROWS_AS(make_constant_pattern(0), InvalidArgument);
}
