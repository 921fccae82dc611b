#include "oitkit/seconds.hpp"

#include <limits>

#include "oitkit/error.hpp"

namespace oit {

Seconds Seconds::parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&](const char* why) {
    return Error(ErrorKind::Parse, "bad decimal seconds '" + original + "': " + why);
  };
  if (text.empty()) throw fail("empty");

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw fail("no digits");

  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  int frac_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_point) throw fail("two decimal points");
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') throw fail("unexpected character");
    seen_digit = true;
    const int d = c - '0';
    if (seen_point) {
      if (++frac_digits > kFractionDigits) throw fail("more than nine fractional digits");
      frac = frac * 10 + d;
    } else {
      if (whole > (kMax / kScale - d) / 10) throw fail("out of range");
      whole = whole * 10 + d;
    }
  }
  if (!seen_digit) throw fail("no digits");
  for (int i = frac_digits; i < kFractionDigits; ++i) frac *= 10;
  if (whole == kMax / kScale && frac > kMax % kScale) throw fail("out of range");
  const std::int64_t nanos = whole * kScale + frac;
  return from_nanos(negative ? -nanos : nanos);
}

std::string Seconds::to_string() const {
  // Magnitude via unsigned to survive INT64_MIN.
  const bool negative = nanos_ < 0;
  const auto mag = negative ? std::uint64_t(0) - static_cast<std::uint64_t>(nanos_)
                            : static_cast<std::uint64_t>(nanos_);
  const auto scale = static_cast<std::uint64_t>(kScale);
  std::string out = negative ? "-" : "";
  out += std::to_string(mag / scale);
  std::uint64_t frac = mag % scale;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, kFractionDigits - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

}  // namespace oit
