#include "avoidance/series.hpp"

#include <algorithm>

#include "avoidance/combnum.hpp"
#include "avoidance/errors.hpp"

namespace avoidance {

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

Series::Series(int order) {
  if (order < 0) throw InvalidArgument("series order must be nonnegative");
  coefficients_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

Series::Series(std::vector<Rational> coefficients, int order) : Series(order) {
  const auto n = std::min(coefficients.size(), coefficients_.size());
  std::move(coefficients.begin(), coefficients.begin() + static_cast<std::ptrdiff_t>(n),
            coefficients_.begin());
}

Series Series::polynomial(std::initializer_list<Rational> coefficients, int order) {
  return Series(std::vector<Rational>(coefficients), order);
}

Rational Series::operator[](int i) const {
  if (i < 0) return 0;
  if (i > order()) {
    throw InvalidArgument("coefficient x^" + std::to_string(i) + " beyond truncation order " +
                          std::to_string(order()));
  }
  return coefficients_[i];
}

Rational& Series::at(int i) {
  if (i < 0 || i > order()) throw InvalidArgument("coefficient index outside series order");
  return coefficients_[i];
}

Series Series::truncated(int order) const {
  if (order > this->order()) throw InvalidArgument("cannot extend a truncated series");
  return Series(coefficients_, order);
}

bool Series::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return c == 0; });
}

Series operator+(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i) out.at(i) = a[i] + b[i];
  return out;
}

Series operator-(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i) out.at(i) = a[i] - b[i];
  return out;
}

Series operator-(const Series& a) {
  Series out(a.order());
  for (int i = 0; i <= out.order(); ++i) out.at(i) = -a[i];
  return out;
}

Series operator*(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  for (int i = 0; i <= out.order(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; i + j <= out.order(); ++j) out.at(i + j) += x[i] * y[j];
  }
  return out;
}

Series operator*(const Rational& c, const Series& a) {
  Series out(a.order());
  for (int i = 0; i <= out.order(); ++i) out.at(i) = c * a[i];
  return out;
}

Series pow(const Series& base, unsigned exponent) {
  Series result = Series::polynomial({1}, base.order());
  Series square = base;
  while (exponent != 0) {
    if (exponent & 1u) result = result * square;
    exponent >>= 1u;
    if (exponent != 0) square = square * square;
  }
  return result;
}

Series differentiate(const Series& s) {
  if (s.order() < 1) throw InvalidArgument("derivative of an order-0 series is unknown");
  Series out(s.order() - 1);
  for (int i = 0; i <= out.order(); ++i) out.at(i) = Rational(i + 1) * s[i + 1];
  return out;
}

Series antiderivative(const Series& s) {
  Series out(s.order());
  for (int i = 1; i <= out.order(); ++i) out.at(i) = s[i - 1] / Rational(i);
  return out;
}

Series antiderivative(const Series& s, int times) {
  if (times < 0) throw InvalidArgument("antiderivative count must be nonnegative");
  Series out = s;
  for (int t = 0; t < times; ++t) out = antiderivative(out);
  return out;
}

Series exp_series(int order) {
  Series out(order);
  Rational term = 1;
  for (int i = 0; i <= order; ++i) {
    out.at(i) = term;
    term /= Rational(i + 1);
  }
  return out;
}

Series exp_of(const Series& s) {
  if (s[0] != 0) throw InvalidArgument("exp_of needs a zero constant term");
  // E' = s' E, so n e_n = sum_{j=1}^{n} j s_j e_{n-j}.
  Series out(s.order());
  out.at(0) = 1;
  for (int n = 1; n <= s.order(); ++n) {
    Rational acc = 0;
    for (int j = 1; j <= n; ++j) acc += Rational(j) * s[j] * out[n - j];
    out.at(n) = acc / Rational(n);
  }
  return out;
}

Series log_of(const Series& s) {
  if (s[0] != 1) throw InvalidArgument("log_of needs constant term 1");
  // s L' = s', so n l_n = n s_n - sum_{j=1}^{n-1} j l_j s_{n-j}.
  Series out(s.order());
  for (int n = 1; n <= s.order(); ++n) {
    Rational acc = Rational(n) * s[n];
    for (int j = 1; j < n; ++j) acc -= Rational(j) * out[j] * s[n - j];
    out.at(n) = acc / Rational(n);
  }
  return out;
}

Series reciprocal(const Series& s) {
  if (s[0] == 0) throw InvalidArgument("reciprocal needs a nonzero constant term");
  Series out(s.order());
  const Rational inverse = 1 / s[0];
  out.at(0) = inverse;
  for (int n = 1; n <= s.order(); ++n) {
    Rational acc = 0;
    for (int j = 1; j <= n; ++j) acc += s[j] * out[n - j];
    out.at(n) = -inverse * acc;
  }
  return out;
}

BigInt egf_coefficient(const Series& s, int n) {
  if (n < 0 || n > s.order()) {
    throw InvalidArgument("egf coefficient n=" + std::to_string(n) + " outside order " +
                          std::to_string(s.order()));
  }
  Rational value = s[n] * Rational(factorial(n));
  if (!is_integer(value)) {
    throw InvalidArgument("n![x^" + std::to_string(n) + "] = " + to_fraction(value) +
                          " is not an integer");
  }
  return value.get_num();
}

Series g112_series(int n, int order_y) {
  if (n < 0) throw InvalidArgument("g112_series needs n >= 0");
  const Series one_minus_y = Series::polynomial({1, -1}, order_y);
  if (n == 0) return reciprocal(one_minus_y);
  Series numerator = Series::polynomial({0, 1}, order_y);
  for (int i = 1; i <= n - 1; ++i) numerator = numerator * Series::polynomial({1, i}, order_y);
  return numerator * pow(reciprocal(one_minus_y), static_cast<unsigned>(n + 1));
}

// ---------------------------------------------------------------------------
// BiSeries
// ---------------------------------------------------------------------------

BiSeries::BiSeries(int order_x, int order_y) : order_x_(order_x), order_y_(order_y) {
  if (order_x < 0 || order_y < 0) throw InvalidArgument("series orders must be nonnegative");
  coefficients_.assign(static_cast<std::size_t>(order_x + 1) * static_cast<std::size_t>(order_y + 1),
                       Rational(0));
}

std::size_t BiSeries::index(int i, int j) const {
  if (i < 0 || i > order_x_ || j < 0 || j > order_y_) {
    throw InvalidArgument("coefficient x^" + std::to_string(i) + " y^" + std::to_string(j) +
                          " outside truncation orders");
  }
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_y_ + 1) +
         static_cast<std::size_t>(j);
}

const Rational& BiSeries::operator()(int i, int j) const { return coefficients_[index(i, j)]; }
Rational& BiSeries::at(int i, int j) { return coefficients_[index(i, j)]; }

Series BiSeries::y_coefficient(int j) const {
  Series out(order_x_);
  for (int i = 0; i <= order_x_; ++i) out.at(i) = (*this)(i, j);
  return out;
}

BiSeries BiSeries::truncated(int order_x, int order_y) const {
  if (order_x > order_x_ || order_y > order_y_) {
    throw InvalidArgument("cannot extend a truncated series");
  }
  BiSeries out(order_x, order_y);
  for (int i = 0; i <= order_x; ++i)
    for (int j = 0; j <= order_y; ++j) out.at(i, j) = (*this)(i, j);
  return out;
}

BiSeries BiSeries::from_x(const Series& s, int order_y) {
  BiSeries out(s.order(), order_y);
  for (int i = 0; i <= s.order(); ++i) out.at(i, 0) = s[i];
  return out;
}

BiSeries BiSeries::from_y(const Series& s, int order_x) {
  BiSeries out(order_x, s.order());
  for (int j = 0; j <= s.order(); ++j) out.at(0, j) = s[j];
  return out;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  BiSeries out(std::min(a.order_x(), b.order_x()), std::min(a.order_y(), b.order_y()));
  for (int i = 0; i <= out.order_x(); ++i)
    for (int j = 0; j <= out.order_y(); ++j) out.at(i, j) = a(i, j) + b(i, j);
  return out;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
  BiSeries out(std::min(a.order_x(), b.order_x()), std::min(a.order_y(), b.order_y()));
  for (int i = 0; i <= out.order_x(); ++i)
    for (int j = 0; j <= out.order_y(); ++j) out.at(i, j) = a(i, j) - b(i, j);
  return out;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  BiSeries out(std::min(a.order_x(), b.order_x()), std::min(a.order_y(), b.order_y()));
  const int ox = out.order_x();
  const int oy = out.order_y();
  for (int i1 = 0; i1 <= ox; ++i1) {
    for (int j1 = 0; j1 <= oy; ++j1) {
      const Rational& c = a(i1, j1);
      if (c == 0) continue;
      for (int i2 = 0; i1 + i2 <= ox; ++i2)
        for (int j2 = 0; j1 + j2 <= oy; ++j2) out.at(i1 + i2, j1 + j2) += c * b(i2, j2);
    }
  }
  return out;
}

BiSeries operator*(const Rational& c, const BiSeries& a) {
  BiSeries out(a.order_x(), a.order_y());
  for (int i = 0; i <= a.order_x(); ++i)
    for (int j = 0; j <= a.order_y(); ++j) out.at(i, j) = c * a(i, j);
  return out;
}

namespace {

// sum_{m=0}^{M} weight(m) U^m where U has zero constant term; U^m vanishes at
// total degree below m, so M = order_x + order_y is exact.
template <typename Weight>
BiSeries power_sum(const BiSeries& u, Weight weight) {
  const int top = u.order_x() + u.order_y();
  BiSeries out(u.order_x(), u.order_y());
  BiSeries power(u.order_x(), u.order_y());
  power.at(0, 0) = 1;
  for (int m = 0; m <= top; ++m) {
    const Rational w = weight(m);
    if (w != 0) out = out + w * power;
    power = power * u;
  }
  return out;
}

BiSeries without_constant(const BiSeries& s) {
  BiSeries u = s;
  u.at(0, 0) = 0;
  return u;
}

}  // namespace

BiSeries exp_of(const BiSeries& s) {
  if (s(0, 0) != 0) throw InvalidArgument("exp_of needs a zero constant term");
  Rational inverse_factorial = 1;
  return power_sum(s, [&inverse_factorial](int m) {
    if (m > 0) inverse_factorial /= Rational(m);
    return inverse_factorial;
  });
}

BiSeries log_of(const BiSeries& s) {
  if (s(0, 0) != 1) throw InvalidArgument("log_of needs constant term 1");
  return power_sum(without_constant(s), [](int m) -> Rational {
    if (m == 0) return 0;
    return Rational(m % 2 == 1 ? 1 : -1, m);
  });
}

BiSeries reciprocal(const BiSeries& s) {
  const Rational c = s(0, 0);
  if (c == 0) throw InvalidArgument("reciprocal needs a nonzero constant term");
  const BiSeries u = without_constant((1 / c) * s);
  return (1 / c) * power_sum(u, [](int m) { return Rational(m % 2 == 0 ? 1 : -1); });
}

BiSeries divide_by_y(const BiSeries& s) {
  if (s.order_y() < 1) throw InvalidArgument("divide_by_y needs order_y >= 1");
  for (int i = 0; i <= s.order_x(); ++i) {
    if (s(i, 0) != 0) throw InvalidArgument("series has a y^0 term; division by y is not exact");
  }
  BiSeries out(s.order_x(), s.order_y() - 1);
  for (int i = 0; i <= s.order_x(); ++i)
    for (int j = 0; j <= out.order_y(); ++j) out.at(i, j) = s(i, j + 1);
  return out;
}

BiSeries closed_form_F112_biseries(int order_x, int order_y) {
  if (order_x < 1 || order_y < 1) throw InvalidArgument("closed form needs orders >= 1");
  // Work one y-order higher because of the division by y.
  const int oy = order_y + 1;
  BiSeries one_minus_y(order_x, oy);
  one_minus_y.at(0, 0) = 1;
  one_minus_y.at(0, 1) = -1;
  BiSeries denominator = one_minus_y;  // 1 - y - xy
  denominator.at(1, 1) = -1;
  const BiSeries log_ratio = log_of(one_minus_y * reciprocal(denominator));
  const BiSeries power = exp_of(divide_by_y(log_ratio));
  return reciprocal(one_minus_y) * power;
}

BiSeries closed_form_F111_112_biseries(int order_x, int order_y) {
  const BiSeries f112 = closed_form_F112_biseries(order_x, order_y);
  const BiSeries e_minus_x = BiSeries::from_x(exp_of(-Series::polynomial({0, 1}, order_x)), order_y);
  return e_minus_x * f112;
}

}  // namespace avoidance
