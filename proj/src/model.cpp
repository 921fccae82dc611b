#include "oitkit/model.hpp"

#include <sstream>
#include <tuple>

#include "oitkit/error.hpp"

namespace oit {

bool is_numeric(const Value& v) { return !std::holds_alternative<Symbol>(v); }

std::vector<double> numeric_components(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return {*d};
  if (const auto* vec = std::get_if<std::vector<double>>(&v)) return *vec;
  throw Error(ErrorKind::DimensionMismatch, "symbolic value '" + std::get<Symbol>(v).token + "' has no numeric components");
}

std::string describe(const Value& v) {
  std::ostringstream os;
  os.precision(17);
  if (const auto* s = std::get_if<Symbol>(&v)) {
    os << '"' << s->token << '"';
  } else if (const auto* d = std::get_if<double>(&v)) {
    os << *d;
  } else {
    os << '[';
    const auto& vec = std::get<std::vector<double>>(v);
    for (std::size_t i = 0; i < vec.size(); ++i) os << (i ? ", " : "") << vec[i];
    os << ']';
  }
  return os.str();
}

namespace {

auto interval_key(const Interval& iv) { return std::make_pair(iv.lo, iv.hi); }

bool time_less(const TimeSet& a, const TimeSet& b) {
  const auto& ai = a.intervals();
  const auto& bi = b.intervals();
  if (ai != bi) {
    return std::lexicographical_compare(ai.begin(), ai.end(), bi.begin(), bi.end(),
                                        [](const Interval& x, const Interval& y) { return interval_key(x) < interval_key(y); });
  }
  return a.points() < b.points();
}

}  // namespace

bool entry_less(const StateEntry& a, const StateEntry& b) {
  if (a.subjects != b.subjects) return a.subjects < b.subjects;
  if (!(a.time == b.time)) return time_less(a.time, b.time);
  return a.value < b.value;
}

}  // namespace oit
