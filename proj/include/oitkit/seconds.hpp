#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace oit {

// Exact decimal time in seconds, stored as a count of nanoseconds.
//
// Sums and differences are exact; parsing accepts plain decimal strings with
// at most nine fractional digits ("12.010", "-0.5", "3"). Anything finer is a
// parse error rather than a silent rounding.
class Seconds {
 public:
  static constexpr int kFractionDigits = 9;
  static constexpr std::int64_t kScale = 1'000'000'000;

  constexpr Seconds() = default;

  static constexpr Seconds from_nanos(std::int64_t nanos) {
    Seconds s;
    s.nanos_ = nanos;
    return s;
  }
  static constexpr Seconds from_whole(std::int64_t seconds) { return from_nanos(seconds * kScale); }

  // Throws Error(Parse) on malformed input or overflow.
  static Seconds parse(std::string_view text);

  constexpr std::int64_t nanos() const { return nanos_; }
  double to_double() const { return static_cast<double>(nanos_) / static_cast<double>(kScale); }

  // Shortest decimal form: "9.99", "0", "-1.5".
  std::string to_string() const;

  constexpr Seconds operator+(Seconds o) const { return from_nanos(nanos_ + o.nanos_); }
  constexpr Seconds operator-(Seconds o) const { return from_nanos(nanos_ - o.nanos_); }
  constexpr Seconds operator-() const { return from_nanos(-nanos_); }
  constexpr Seconds operator*(std::int64_t k) const { return from_nanos(nanos_ * k); }
  constexpr Seconds& operator+=(Seconds o) {
    nanos_ += o.nanos_;
    return *this;
  }
  constexpr Seconds abs() const { return nanos_ < 0 ? -*this : *this; }

  constexpr auto operator<=>(const Seconds&) const = default;

 private:
  std::int64_t nanos_ = 0;
};

}  // namespace oit
