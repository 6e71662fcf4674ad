#include "rational.hpp"

#include <cctype>

namespace terrafold {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Signed decimal integer (no leading '+').
std::optional<mpz_class> parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && s.front() == '-') {
    neg = true;
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  mpz_class v(std::string(s), 10);
  if (neg) v = -v;
  return v;
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    Rat r(*num, *den);
    r.canonicalize();
    return r;
  }

  std::string_view s = text;
  bool neg = false;
  if (s.front() == '-') {
    neg = true;
    s.remove_prefix(1);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
    if (frac_part.empty()) return std::nullopt;
    if (!all_digits(frac_part)) return std::nullopt;
  }
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;

  mpz_class num = int_part.empty() ? mpz_class(0) : mpz_class(std::string(int_part), 10);
  mpz_class den = 1;
  if (!frac_part.empty()) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    num = num * scale + mpz_class(std::string(frac_part), 10);
    den = scale;
  }
  if (neg) num = -num;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal(const Rat& r, int digits) {
  mpz_class num = r.get_num();
  mpz_class den = r.get_den();
  bool neg = num < 0;
  if (neg) num = -num;

  mpz_class whole = num / den;
  mpz_class rem = num % den;
  std::string out = whole.get_str();
  if (rem != 0 && digits > 0) {
    std::string frac;
    for (int i = 0; i < digits && rem != 0; ++i) {
      rem *= 10;
      mpz_class d = rem / den;
      rem %= den;
      frac += static_cast<char>('0' + d.get_si());
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  }
  if (neg && (out != "0" || out.find('.') != std::string::npos)) out = "-" + out;
  if (out == "-0") out = "0";
  return out;
}

}  // namespace terrafold
