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


#include "toastflow/rational.h"

#include <cctype>
#include <string>
#include <utility>

#include "toastflow/errors.h"

namespace toastflow {

Rational::Rational(int64_t value) {
  // mpq_class has no int64_t constructor on every platform.
  value_ = mpq_class(mpz_class(std::to_string(value)));
}

Rational::Rational(int64_t numerator, int64_t denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(numerator)),
                     mpz_class(std::to_string(denominator)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

namespace {

bool IsIntegerText(std::string_view text, bool allow_sign) {
  if (text.empty()) return false;
  size_t i = 0;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view text) {
  if (!text.empty() && text[0] == '+') text.remove_prefix(1);
  return mpz_class(std::string(text), 10);
}

}  // namespace

Rational Rational::Parse(std::string_view text) {
  const size_t slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  if (!IsIntegerText(num_text, /*allow_sign=*/true)) {
    throw FormatError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class num = ParseInteger(num_text);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den_text = text.substr(slash + 1);
    if (!IsIntegerText(den_text, /*allow_sign=*/false)) {
      throw FormatError("malformed rational '" + std::string(text) + "'");
    }
    den = ParseInteger(den_text);
    if (den == 0) {
      throw FormatError("zero denominator in '" + std::string(text) + "'");
    }
  }
  return Rational(mpq_class(num, den));
}

Rational Rational::InversePowerOfTwo(int exponent) {
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), exponent);
  return Rational(mpq_class(mpz_class(1), den));
}

bool Rational::IsDyadic() const {
  const mpz_class& den = value_.get_den();
  return mpz_popcount(den.get_mpz_t()) == 1;
}

int Rational::DenominatorExponent() const {
  return static_cast<int>(mpz_scan1(value_.get_den_mpz_t(), 0));
}

mpz_class Rational::RoundToNearest() const {
  // floor(x + 1/2)
  mpq_class shifted = value_ + mpq_class(1, 2);
  mpz_class result;
  mpz_fdiv_q(result.get_mpz_t(), shifted.get_num_mpz_t(),
             shifted.get_den_mpz_t());
  return result;
}

std::string Rational::ToString() const {
  if (IsIntegral()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.IsZero()) throw DomainError("division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

}  // namespace toastflow
