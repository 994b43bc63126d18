#include "dmop/scalar.hpp"

#include <cctype>

#include "dmop/errors.hpp"

namespace dmop {

BigInt floor_int(const Scalar& s) {
  BigInt q = numerator(s) / denominator(s);  // truncates toward zero
  if (s < 0 && !is_integer(s)) --q;
  return q;
}

BigInt ceil_int(const Scalar& s) {
  BigInt q = numerator(s) / denominator(s);
  if (s > 0 && !is_integer(s)) ++q;
  return q;
}

Scalar pow_int(const Scalar& base, unsigned exp) {
  Scalar acc(1);
  Scalar sq = base;
  while (exp != 0) {
    if (exp & 1u) acc *= sq;
    exp >>= 1u;
    if (exp != 0) sq *= sq;
  }
  return acc;
}

Scalar parse_scalar(std::string_view text) {
  auto fail = [&] {
    throw ConfigError("not a rational \"p\" or \"p/q\": \"" + std::string(text) + "\"");
  };
  std::size_t i = 0;
  auto read_int = [&](bool sign_allowed) -> std::string {
    std::string out;
    if (sign_allowed && i < text.size() && text[i] == '-') out += text[i++];
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out += text[i++];
      ++digits;
    }
    if (digits == 0) fail();
    return out;
  };
  const std::string num = read_int(/*sign_allowed=*/true);
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = read_int(/*sign_allowed=*/false);
  }
  if (i != text.size()) fail();
  const BigInt d(den);
  if (d == 0) fail();
  return Scalar(BigInt(num), d);
}

std::string to_string(const Scalar& s) { return s.str(); }

}  // namespace dmop
