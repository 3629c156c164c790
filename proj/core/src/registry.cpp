#include <algorithm>

#include "avoidance/claims.hpp"
#include "avoidance/formulas.hpp"

namespace avoidance {

namespace {

namespace f = formulas;

PatternSet set_of(std::string_view text) { return PatternSet::parse(text); }

template <typename Fn>
ClaimEvaluator exact(Fn fn) {
  return [fn](int n, int k) { return Rational(fn(n, k)); };
}

Claim verified(std::string id, PatternSet set, ClaimEvaluator evaluate, std::string notes,
               ClaimValidity validity = {}) {
  Claim c;
  c.id = std::move(id);
  c.pattern_set = std::move(set);
  c.readings.push_back({"literal", std::move(evaluate)});
  c.validity = std::move(validity);
  c.expected_status = ClaimStatus::verified;
  c.notes = std::move(notes);
  return c;
}

Claim erratum(std::string id, PatternSet set, ClaimEvaluator evaluate, ErratumSignature signature,
              std::string notes) {
  Claim c = verified(std::move(id), std::move(set), std::move(evaluate), std::move(notes));
  c.expected_status = ClaimStatus::erratum_suspected;
  c.erratum = std::move(signature);
  return c;
}

Claim ambiguous(std::string id, PatternSet set, std::vector<ClaimReading> readings,
                std::string expected_reading, ClaimValidity validity, std::string notes) {
  Claim c;
  c.id = std::move(id);
  c.pattern_set = std::move(set);
  c.readings = std::move(readings);
  c.validity = std::move(validity);
  c.expected_status = ClaimStatus::ambiguous;
  c.expected_reading = std::move(expected_reading);
  c.notes = std::move(notes);
  return c;
}

bool k_at_least_one(int, int k) { return k >= 1; }

std::vector<Claim> build_registry() {
  std::vector<Claim> claims;

  claims.push_back(verified("f11_falling", set_of("11"), exact(f::f11),
                            "no repeated letters: (k)_n"));
  claims.push_back(verified("f12_binomial", set_of("12"), exact(f::f12),
                            "non-increasing words: C(n+k-1, n)"));

  claims.push_back(verified("f123_burstein", set_of("123"), exact(f::f123),
                            "2^{n-2(k-2)} sum_j a_{k-2,j} C(n+2j, n)", f::f123_valid));
  claims.push_back(verified("f132_burstein", set_of("132"), exact(f::f123),
                            "same closed form as 123", f::f123_valid));

  claims.push_back(verified("f111_bessel", set_of("111"), exact(f::f111),
                            "sum_i B(i, n-i) (k)_i"));
  claims.push_back(verified("f111_egf", set_of("111"), exact(f::f111_egf),
                            "F(x;k) = (1 + x + x^2/2)^k"));

  claims.push_back(verified("f112_stirling", set_of("112"), exact(f::f112),
                            "sum_j C(n+k-j-1, n) c(n, n-j)"));
  claims.push_back(verified("f121_stirling", set_of("121"), exact(f::f112),
                            "121 shares the 112 count"));
  claims.push_back(verified("rec_112", set_of("112"), exact(f::rec_112),
                            "f(n,k) - f(n,k-1) = f(n-1,k) + (n-1) f(n-1,k-1)"));
  claims.push_back(verified("g112_ogf", set_of("112"), exact(f::g112_ogf),
                            "G(n;y) = y (1+y)...(1+(n-1)y) / (1-y)^{n+1}"));

  claims.push_back(ambiguous(
      "F112_bivariate", set_of("112"),
      {{"literal", [](int n, int k) { return f::f112_bivariate_count(n, k, false); }},
       {"k-shift", [](int n, int k) { return f::f112_bivariate_count(n, k, true); }}},
      "k-shift", k_at_least_one,
      "(1/(1-y)) ((1-y)/(1-y-xy))^{1/y}; [y^k] read as alphabet size k or k+1"));

  claims.push_back(verified("f111_112_rec", set_of("111,112"), exact(f::f111_112),
                            "f(n,k-1) + n f(n-1,k-1) + (n-1) f(n-2,k-1)"));
  claims.push_back(verified("f111_121_rec", set_of("111,121"), exact(f::f111_112),
                            "{111,121} shares the {111,112} count"));
  claims.push_back(erratum(
      "f111_112_double_sum", set_of("111,112"), exact(f::f111_112_double_sum),
      ErratumSignature{
          1, 0,
          [](int n, int k, const Rational& claimed, const CountTable& oracle) {
            // Exponential convolution of (-1)^n with f_112(n, k): one alphabet letter short.
            if (k == 0) return claimed == Rational(n % 2 == 0 ? 1 : -1);
            return claimed == Rational(oracle.at(n, k - 1));
          },
          "claimed(n,k) = f_{111,112}(n,k-1); at n = 1 the sum gives k-1 instead of k"},
      "sum_i sum_j (-1)^{n-i} C(n,i) C(k+i-j-1,i) c(i,i-j)"));
  // The e^{-x} factor absorbs the shift: [y^0] = e^{-x} e^x = 1 = F(x;0), so the
  // literal indexing holds here even though it fails for F112 alone.
  Claim f111_112_bivariate = ambiguous(
      "F111_112_bivariate", set_of("111,112"),
      {{"literal", [](int n, int k) { return f::f111_112_bivariate_count(n, k, false); }},
       {"k-shift", [](int n, int k) { return f::f111_112_bivariate_count(n, k, true); }}},
      "", k_at_least_one, "e^{-x} (1/(1-y)) ((1-y)/(1-y-xy))^{1/y}; [y^k] read as alphabet size k");
  f111_112_bivariate.expected_status = ClaimStatus::verified;
  claims.push_back(std::move(f111_112_bivariate));

  claims.push_back(verified("rec_112_121", set_of("112,121"), exact(f::rec_112_121),
                            "f(n,k-1) + n f(n-1,k-1) + sum_{j>=2} f(n-j,k-1); f(n,0) = delta"));
  claims.push_back(verified("rec_112_211", set_of("112,211"), exact(f::rec_112_211),
                            "f(n,k-1) + n f(n-1,k-1) + f(n-2,k-1) + [n>=3]"));
  claims.push_back(erratum(
      "rec_112_212_literal", set_of("112,212"), exact(f::rec_112_212_literal),
      ErratumSignature{1, 2, {}, "a(1,2) = a(1,1) + a(0,0)a(0,1) + a(0,1)a(0,0) = 3, true count 2"},
      "triple-sum recurrence with a(0,k) = 1, a(n,1) = 1, taken literally"));
  claims.push_back(verified("f112_221", set_of("112,221"), exact(f::f112_221),
                            "piecewise; constant sum_j j j! C(k,j) for n >= k+1"));
  claims.push_back(verified("f121_212", set_of("121,212"), exact(f::f121_212),
                            "sum_j j! C(k,j) C(n-1,j-1)"));

  claims.push_back(verified("f112_121_211_rec", set_of("112,121,211"), exact(f::f112_121_211),
                            "f(n,k-1) + n f(n-1,k-1) + 1 for n, k >= 2"));
  claims.push_back(verified("f112_121_211_egf", set_of("112,121,211"),
                            exact(f::f112_121_211_egf), "1 + (e^x - 1)((1+x)^k - 1)/x"));
  claims.push_back(erratum(
      "f112_121_211_sum", set_of("112,121,211"), f::f112_121_211_sum,
      ErratumSignature{
          1, 1,
          [](int n, int k, const Rational& claimed, const CountTable&) {
            return n != 1 || claimed == Rational(2 * k);
          },
          "at n = 1 the sum gives 2k instead of k"},
      "sum_{j=1}^{n} (1/j!) C(n+1,j) C(k,n+1-j)"));

  for (int l = 1; l <= 4; ++l) {
    const auto set = PatternSet{make_constant_pattern(l)};
    const std::string suffix = "_l" + std::to_string(l);
    claims.push_back(verified("single_repeat" + suffix + "_rec", set,
                              [l](int n, int k) { return Rational(f::single_repeat_rec(n, k, l)); },
                              "sum_{j<l} C(n,j) f(n-j,k-1)"));
    claims.push_back(verified(
        "single_repeat" + suffix + "_partition", set,
        [l](int n, int k) { return Rational(f::single_repeat_partition(n, k, l)); },
        "sum_i M(n, i; blocks <= l-1) (k)_i"));
    claims.push_back(verified("single_repeat" + suffix + "_egf", set,
                              [l](int n, int k) { return Rational(f::single_repeat_egf(n, k, l)); },
                              "F(x;k) = (sum_{j<l} x^j/j!)^k"));
  }

  for (int total = 1; total <= 3; ++total) {
    for (int m = total; m >= 0; --m) {
      const int l = total - m;
      claims.push_back(verified(
          "vml_m" + std::to_string(m) + "_l" + std::to_string(l) + "_rec",
          PatternSet{make_vml(m, l)},
          [m, l](int n, int k) { return Rational(f::rec_vml(n, k, m, l)); },
          "f(n+1,k) - f(n,k) = sum_{j<m+l} C(n,j) f(n+1-j,k-1)"));
    }
  }

  for (int p = 1; p <= 3; ++p) {
    const auto set = PatternSet{make_vml(p, 0)};
    claims.push_back(verified(
        "vp0_k2_p" + std::to_string(p), set,
        [p](int n, int) { return Rational(f::f_vp0_k2(n, p)); }, "F(x;2) = e^x sum_{j<=p} x^j/j!",
        [](int, int k) { return k == 2; }));
    claims.push_back(ambiguous(
        "thp_p" + std::to_string(p), set,
        {{"d_p",
          [p](int n, int k) {
            return f::vp0_integral_identity_count(n, k, p, f::IntegralReading::literal);
          }},
         {"d_j",
          [p](int n, int k) {
            return f::vp0_integral_identity_count(n, k, p, f::IntegralReading::per_summand);
          }}},
        "d_j", k_at_least_one,
        "F - int F = sum_j (-1)^j d(F_{k-1}) sum_{i<p-j} x^i/i!; d = d_p in every summand or d_j"));
  }

  std::sort(claims.begin(), claims.end(),
            [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return claims;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

}  // namespace avoidance
