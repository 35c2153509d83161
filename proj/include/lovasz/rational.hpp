// Copyright 2026 The lovasz-approx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOVASZ_RATIONAL_HPP
#define LOVASZ_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lovasz {

// Expression templates are disabled so that `auto` never captures a lazy
// expression referring to a temporary.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(num, den);
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

/// n! as an exact integer.
inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

/// C(n, k); zero when k > n, matching the usual combinatorial convention.
inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Beta function at positive integers: B(a,b) = (a-1)!(b-1)!/(a+b-1)!.
inline Rational beta(unsigned a, unsigned b) {
  if (a == 0 || b == 0)
    throw std::domain_error("beta is only defined here for positive integers");
  return make_rational(factorial(a - 1) * factorial(b - 1),
                       factorial(a + b - 1));
}

inline Rational binomial_ratio(long n1, long k1, long n2, long k2) {
  return make_rational(binomial(n1, k1), binomial(n2, k2));
}

inline int sign_of_parity(long e) { return (e % 2 == 0) ? 1 : -1; }

/// Parses "p/q", a signed integer, or a finite decimal such as "-0.35".
/// Decimals are converted exactly; no binary floating point is involved.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* why) -> Rational {
    throw std::invalid_argument("invalid rational \"" + std::string(text) +
                                "\": " + why);
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return fail("empty");

  auto parse_int = [&](std::string_view digits, bool allow_sign) -> Integer {
    std::size_t pos = 0;
    bool negative = false;
    if (allow_sign && pos < digits.size() &&
        (digits[pos] == '+' || digits[pos] == '-')) {
      negative = digits[pos] == '-';
      ++pos;
    }
    if (pos == digits.size()) fail("missing digits");
    for (std::size_t i = pos; i < digits.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(digits[i])))
        fail("unexpected character");
    Integer v(std::string(digits.substr(pos)));
    return negative ? Integer(-v) : v;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = parse_int(std::string_view(s).substr(0, slash), true);
    Integer den = parse_int(std::string_view(s).substr(slash + 1), false);
    if (den == 0) return fail("zero denominator");
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string_view whole = std::string_view(s).substr(0, dot);
    std::string_view frac = std::string_view(s).substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+'))
      whole.remove_prefix(1);
    if (whole.empty() && frac.empty()) return fail("missing digits");
    Integer w = whole.empty() ? Integer(0) : parse_int(whole, false);
    Integer f = frac.empty() ? Integer(0) : parse_int(frac, false);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r(w * scale + f, scale);
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_int(s, true));
}

/// Lowest terms, positive denominator; integers print without "/1".
inline std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

template <class Real>
Real to_real(const Rational& r) {
  return r.template convert_to<Real>();
}

}  // namespace lovasz

#endif  // LOVASZ_RATIONAL_HPP
