#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avoidance/words.hpp"

namespace avoidance {

// One-line notation pi(1), ..., pi(n) of a permutation of {1, ..., n}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);
  static Permutation identity(std::size_t n);
  // "6,2,1,9,3,5,7,4,8,10"; a digit string is accepted when n <= 9.
  static Permutation parse(std::string_view text);

  std::span<const int> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::string to_string() const;  // comma-separated

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

struct ExcessEncoding {
  Permutation perm;
  std::vector<int> excess;  // nondecreasing, entries in [0, k - j - 1]
  int alphabet = 0;         // k

  bool operator==(const ExcessEncoding&) const = default;
};

// Values smaller than everything to their right, in right-to-left scan order.
std::vector<int> rl_minima(const Permutation& p);
std::size_t rl_nonminima_count(const Permutation& p);

// [k]^n(121) -> [k]^n(112) and back. Throw PreconditionViolation off-domain.
Word rho_121_to_112(const Word& w);
Word rho_112_to_121(const Word& w);

struct VmlShape {
  int m = 0;
  int l = 0;
};

// [k]^n(v_{m,l}) -> [k]^n(v_{m',l'}) for m + l = m' + l' >= 1.
Word rho_general(const Word& w, VmlShape from, VmlShape to);

// The word over [j+1] (j = number of right-to-left nonminima) avoiding 221.
Word alg1_perm_to_word(const Permutation& p);
// Inverse of alg1 on 221-avoiders that use every letter of their alphabet.
Permutation alg2_word_to_perm(const Word& w);

// sigma in [k]^n(221) <-> (pi, e). The alphabet is the word's declared one.
ExcessEncoding decompose_221(const Word& w);
Word compose_221(const ExcessEncoding& encoding);

}  // namespace avoidance
