// Copyright 2026 The pandc Authors.
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

#include "pandc/rational.h"

#include <cctype>
#include <string>

#include "pandc/error.h"

namespace pandc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "parse_error";
    case ErrorCode::kInvalidProfile: return "invalid_profile";
    case ErrorCode::kDimensionMismatch: return "config_mismatch";
    case ErrorCode::kInvalidConfig: return "invalid_config";
    case ErrorCode::kInvalidTransform: return "invalid_transform";
    case ErrorCode::kOutOfTurn: return "out_of_turn";
    case ErrorCode::kSumConstraintViolated: return "sum_constraint";
    case ErrorCode::kUnknownOption: return "unknown_option";
    case ErrorCode::kNegativeBid: return "negative_bid";
    case ErrorCode::kNotSettled: return "not_settled";
    case ErrorCode::kWrongPlayerCount: return "wrong_player_count";
    case ErrorCode::kNonUniqueEfficientOption: return "non_unique_efficient_option";
    case ErrorCode::kEpsilonTooLarge: return "epsilon_too_large";
    case ErrorCode::kEpsilonNonPositive: return "epsilon_non_positive";
    case ErrorCode::kGridBudgetExceeded: return "grid_budget_exceeded";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    fail(ErrorCode::kParseError,
         "not a rational: \"" + std::string(whole) + "\"");
  }
  mpz_class z(std::string(digits), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorCode::kInvalidArgument, "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)),
                     mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) fail(ErrorCode::kParseError, "empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      fail(ErrorCode::kParseError, "not a rational: \"" + std::string(text) + "\"");
    }
    mpz_class den(std::string(den_text), 10);
    if (den == 0) fail(ErrorCode::kParseError, "zero denominator in \"" + std::string(text) + "\"");
    return Rational(mpq_class(num, den));
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
      int_part.remove_prefix(1);
    if ((!int_part.empty() && !all_digits(int_part)) || !all_digits(frac_part)) {
      fail(ErrorCode::kParseError, "not a rational: \"" + std::string(text) + "\"");
    }
    mpz_class whole = int_part.empty() ? mpz_class(0) : mpz_class(std::string(int_part), 10);
    mpz_class frac(std::string(frac_part), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    mpq_class q(whole * scale + frac, scale);
    q.canonicalize();
    return Rational(negative ? mpq_class(-q) : q);
  }

  return Rational(mpq_class(parse_integer(text, text)));
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::pretty() const {
  return is_integer() ? value_.get_num().get_str() : str();
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) fail(ErrorCode::kInvalidArgument, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational sum(std::span<const Rational> values) {
  Rational total;
  for (const auto& v : values) total += v;
  return total;
}

Rational mean(std::span<const Rational> values) {
  if (values.empty()) fail(ErrorCode::kInvalidArgument, "mean of empty range");
  return sum(values) / Rational(static_cast<std::int64_t>(values.size()));
}

mpz_class common_denominator(std::span<const Rational> values) {
  mpz_class l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.gmp().get_den_mpz_t());
  }
  return l;
}

std::string join(std::span<const Rational> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].pretty();
  }
  return out;
}

}  // namespace pandc
