#pragma once

#include <initializer_list>
#include <vector>

#include "avoidance/numeric.hpp"

namespace avoidance {

// A power series known exactly through x^order. Binary operations keep the
// smaller of the two orders; nothing beyond the order is ever reported.
class Series {
 public:
  explicit Series(int order);
  Series(std::vector<Rational> coefficients, int order);
  static Series polynomial(std::initializer_list<Rational> coefficients, int order);

  int order() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  // Coefficient of x^i; throws for i above the order, 0 for negative i.
  Rational operator[](int i) const;
  Rational& at(int i);
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  Series truncated(int order) const;
  bool is_zero() const;

  bool operator==(const Series&) const = default;

 private:
  std::vector<Rational> coefficients_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rational& c, const Series& a);
Series pow(const Series& base, unsigned exponent);

// Term-wise derivative; known one order less than its input. Requires order >= 1.
Series differentiate(const Series& s);
// Antiderivative with constant term 0, kept at the input's order.
Series antiderivative(const Series& s);
// `times`-fold antiderivative; times == 0 returns s unchanged.
Series antiderivative(const Series& s, int times);

Series exp_series(int order);
// exp of a series with zero constant term.
Series exp_of(const Series& s);
// log of a series with constant term 1.
Series log_of(const Series& s);
// 1/s for a series with nonzero constant term.
Series reciprocal(const Series& s);

// n! [x^n] s; throws InvalidArgument if that is not an integer or n > order.
BigInt egf_coefficient(const Series& s, int n);

// sum_{k} f_112(n, k) y^k through y^order_y, from the rational generating function
// y (1+y)(1+2y)...(1+(n-1)y) / (1-y)^{n+1} (and 1/(1-y) at n = 0).
Series g112_series(int n, int order_y);

// Dense bivariate series known through x^order_x y^order_y.
class BiSeries {
 public:
  BiSeries(int order_x, int order_y);

  int order_x() const noexcept { return order_x_; }
  int order_y() const noexcept { return order_y_; }
  // Coefficient of x^i y^j.
  const Rational& operator()(int i, int j) const;
  Rational& at(int i, int j);
  // The coefficient of y^j as a series in x.
  Series y_coefficient(int j) const;
  BiSeries truncated(int order_x, int order_y) const;

  static BiSeries from_x(const Series& s, int order_y);
  static BiSeries from_y(const Series& s, int order_x);

  bool operator==(const BiSeries&) const = default;

 private:
  std::size_t index(int i, int j) const;

  int order_x_;
  int order_y_;
  std::vector<Rational> coefficients_;
};

BiSeries operator+(const BiSeries& a, const BiSeries& b);
BiSeries operator-(const BiSeries& a, const BiSeries& b);
BiSeries operator*(const BiSeries& a, const BiSeries& b);
BiSeries operator*(const Rational& c, const BiSeries& a);
BiSeries exp_of(const BiSeries& s);
BiSeries log_of(const BiSeries& s);
BiSeries reciprocal(const BiSeries& s);
// s / y for a series with no y^0 terms; order_y drops by one.
BiSeries divide_by_y(const BiSeries& s);

// (1/(1-y)) ((1-y)/(1-y-xy))^{1/y}, evaluated as exp((1/y) log((1-y)/(1-y-xy))) / (1-y).
BiSeries closed_form_F112_biseries(int order_x, int order_y);
// e^{-x} times the series above.
BiSeries closed_form_F111_112_biseries(int order_x, int order_y);

}  // namespace avoidance
