/** Copyright 2026 The gossipnet Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GOSSIPNET_CORE_UTILITY_HPP
#define GOSSIPNET_CORE_UTILITY_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "error.hpp"

namespace gossip {

/// Utility value that is either a finite integer or negative infinity.
///
/// Negative infinity absorbs addition and compares below every finite
/// value. Finite additions are overflow-checked and throw
/// ErrorCode::kOverflow instead of wrapping.
class Utility {
 public:
  /// Largest magnitude accepted for a single pairwise utility.
  static constexpr std::int64_t kMaxPairMagnitude = std::int64_t{1} << 31;

  constexpr Utility() = default;
  constexpr Utility(std::int64_t value) : value_(value) {}  // NOLINT

  static constexpr Utility neg_inf() {
    Utility u;
    u.value_ = kNegInf;
    return u;
  }

  constexpr bool is_neg_inf() const { return value_ == kNegInf; }
  constexpr bool is_finite() const { return value_ != kNegInf; }

  /// Finite value; throws when called on negative infinity.
  std::int64_t value() const {
    if (is_neg_inf()) throw Error(ErrorCode::kInvalid, "value() of -inf utility");
    return value_;
  }

  /// Raw representation, with negative infinity mapped to INT64_MIN.
  constexpr std::int64_t raw() const { return value_; }

  Utility& operator+=(Utility other) {
    if (is_neg_inf() || other.is_neg_inf()) {
      value_ = kNegInf;
      return *this;
    }
    std::int64_t out = 0;
    if (__builtin_add_overflow(value_, other.value_, &out) || out == kNegInf) {
      throw Error(ErrorCode::kOverflow, "utility addition overflow");
    }
    value_ = out;
    return *this;
  }

  friend Utility operator+(Utility a, Utility b) { return a += b; }

  /// Multiplication by a non-negative integer factor, checked.
  friend Utility scale(Utility a, std::int64_t factor) {
    if (a.is_neg_inf()) return factor == 0 ? Utility(0) : a;
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a.value_, factor, &out) || out == kNegInf) {
      throw Error(ErrorCode::kOverflow, "utility multiplication overflow");
    }
    return Utility(out);
  }

  friend constexpr bool operator==(Utility, Utility) = default;
  friend constexpr auto operator<=>(Utility a, Utility b) {
    return a.value_ <=> b.value_;
  }

  /// "-inf" or the decimal integer.
  std::string to_string() const {
    return is_neg_inf() ? std::string("-inf") : std::to_string(value_);
  }

  friend std::ostream& operator<<(std::ostream& os, Utility u) {
    return os << u.to_string();
  }

 private:
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  std::int64_t value_ = 0;
};

/// Total welfare stored in half units so that asymmetric instances stay exact.
struct Welfare {
  Utility doubled;

  bool is_neg_inf() const { return doubled.is_neg_inf(); }

  /// "-inf", an integer, or an integer followed by ".5".
  std::string to_string() const {
    if (doubled.is_neg_inf()) return "-inf";
    const std::int64_t d = doubled.value();
    std::string out = std::to_string(d / 2);
    if (d % 2 != 0) {
      if (d < 0 && d / 2 == 0) out = "-0";
      out += ".5";
    }
    return out;
  }

  friend bool operator==(const Welfare&, const Welfare&) = default;
  friend auto operator<=>(const Welfare& a, const Welfare& b) {
    return a.doubled <=> b.doubled;
  }
};

/// Exact non-negative ratio with a reduced representation.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw Error(ErrorCode::kInvalid, "rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace gossip

#endif  // GOSSIPNET_CORE_UTILITY_HPP
