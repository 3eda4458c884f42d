#include "ptg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ptg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("not an exact number: \"" + std::string(text) + "\"");
}

// GMP picks the base from a leading 0, so "025" would be read as octal.
BigInt decimal(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt(std::string(digits));
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_number(text);

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rat result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    BigInt d = decimal(den);
    if (d == 0) bad_number(text);
    result = Rat(decimal(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_number(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      bad_number(text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    result = Rat(decimal(std::string(whole.empty() ? "0" : whole) + std::string(frac)), scale);
  } else {
    if (!all_digits(s)) bad_number(text);
    result = Rat(decimal(s));
  }
  return negative ? Rat(-result) : result;
}

std::string to_string(const Rat& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rat(BigInt(num), BigInt(den));
}

Rat abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

Rat pow2(int e) {
  BigInt p = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= 2;
  return e >= 0 ? Rat(p) : Rat(BigInt(1), p);
}

}  // namespace ptg
