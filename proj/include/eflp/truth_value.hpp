#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eflp {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lattice or connective misconfiguration (unknown ids, values outside the carrier, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An exact rational truth degree in [0, 1].
///
/// Values are always kept in lowest terms with a positive denominator, so
/// equality is structural and fixpoint detection can compare exactly.
class TruthValue {
 public:
  using Rational = boost::multiprecision::cpp_rational;
  using Integer = boost::multiprecision::cpp_int;

  TruthValue() = default;

  static TruthValue zero() { return TruthValue(); }
  static TruthValue one() { return TruthValue(Rational(1)); }

  /// num/den, rejected unless the result lies in [0, 1].
  static TruthValue fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ConfigError("truth value with zero denominator");
    return checked(Rational(Integer(num), Integer(den)));
  }

  static TruthValue from_rational(const Rational& r) { return checked(r); }

  /// Accepts "1", "0", "0.35", "2/7".
  static TruthValue parse(std::string_view text) {
    auto fail = [&]() -> TruthValue {
      throw ConfigError("malformed truth value '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();
    auto digits_only = [](std::string_view s) {
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto num = text.substr(0, slash);
      auto den = text.substr(slash + 1);
      if (!digits_only(num) || !digits_only(den)) return fail();
      Integer d{std::string(den)};
      if (d == 0) return fail();
      return checked(Rational(Integer{std::string(num)}, d));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      auto whole = text.substr(0, dot);
      auto frac = text.substr(dot + 1);
      if (!digits_only(whole) || !digits_only(frac)) return fail();
      Integer scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      Integer num = Integer(std::string(whole)) * scale + Integer(std::string(frac));
      return checked(Rational(num, scale));
    }
    if (!digits_only(text)) return fail();
    return checked(Rational(Integer(std::string(text))));
  }

  const Rational& rational() const { return value_; }
  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  /// Canonical "num/den" form used by the JSON encoding.
  std::string to_fraction() const {
    return numerator().str() + "/" + denominator().str();
  }

  /// Compact form for program text: "0", "1", or "num/den".
  std::string to_string() const {
    if (denominator() == 1) return numerator().str();
    return to_fraction();
  }

  friend bool operator==(const TruthValue& a, const TruthValue& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const TruthValue& a, const TruthValue& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const TruthValue& v) { return os << v.to_string(); }

  // Arithmetic helpers for connective truth functions. Results are clamped by
  // the callers; these never escape [0,1] on their own except where noted.
  friend TruthValue min(const TruthValue& a, const TruthValue& b) { return a <= b ? a : b; }
  friend TruthValue max(const TruthValue& a, const TruthValue& b) { return a >= b ? a : b; }

  /// Unchecked construction for arithmetic that is known to stay in [0,1].
  static TruthValue unchecked(Rational r) {
    TruthValue v;
    v.value_ = std::move(r);
    return v;
  }

 private:
  explicit TruthValue(Rational r) : value_(std::move(r)) {}

  static TruthValue checked(Rational r) {
    if (r < 0 || r > 1)
      throw ConfigError("truth value " + r.str() + " outside [0,1]");
    return TruthValue(std::move(r));
  }

  Rational value_{0};
};

}  // namespace eflp

template <>
struct std::hash<eflp::TruthValue> {
  std::size_t operator()(const eflp::TruthValue& v) const noexcept {
    return std::hash<std::string>{}(v.to_fraction());
  }
};
