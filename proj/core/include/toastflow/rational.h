// Copyright 2026 The Toastflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef TOASTFLOW_RATIONAL_H_
#define TOASTFLOW_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace toastflow {

// Exact rational number kept in lowest terms with a positive denominator.
// Flow values never leave this type; dyadicity and integrality are exact
// predicates on the stored denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(int64_t numerator, int64_t denominator);
  explicit Rational(mpq_class value);

  // Parses "p/q" or "p" (optionally signed). Throws FormatError on bad text
  // or a zero denominator. Non-reduced input is accepted and reduced.
  static Rational Parse(std::string_view text);

  // 2^-exponent.
  static Rational InversePowerOfTwo(int exponent);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool IsZero() const { return sgn(value_) == 0; }
  int Sign() const { return sgn(value_); }
  bool IsIntegral() const { return value_.get_den() == 1; }
  bool IsDyadic() const;

  // log2 of the denominator; only meaningful for dyadic values.
  int DenominatorExponent() const;

  Rational Abs() const { return Rational(mpq_class(abs(value_))); }

  // Nearest integer; ties are impossible for the non-dyadic values this is
  // used on, and resolve upward otherwise.
  mpz_class RoundToNearest() const;

  // Reduced "p/q", or "p" when integral.
  std::string ToString() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  mpq_class value_;
};

}  // namespace toastflow

#endif  // TOASTFLOW_RATIONAL_H_
