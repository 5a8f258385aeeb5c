#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace paramodular {

using Rational = boost::rational<std::int64_t>;

/// Canonical wire form: always "p/q" with q > 0 and gcd(p, q) = 1.
inline std::string format_rational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace detail {
inline std::optional<std::int64_t> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}
}  // namespace detail

/// Accepts "p/q" or a bare integer "p".
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num = detail::parse_int(text.substr(0, slash));
  if (!num) return std::nullopt;
  if (slash == std::string_view::npos) return Rational(*num);
  auto den = detail::parse_int(text.substr(slash + 1));
  if (!den || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace paramodular
