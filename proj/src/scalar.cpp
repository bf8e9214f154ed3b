#include "majlat/scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

#include "majlat/error.hpp"

namespace majlat {

namespace {

thread_local double g_tolerance = kDefaultTolerance;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'");
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

double float_tolerance() noexcept { return g_tolerance; }

void set_float_tolerance(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau))
    throw Error(ErrorCode::InvalidJob, "tolerance must be a finite non-negative number");
  g_tolerance = tau;
}

ToleranceScope::ToleranceScope(double tau) : saved_(g_tolerance) { set_float_tolerance(tau); }
ToleranceScope::~ToleranceScope() { g_tolerance = saved_; }

Rational ScalarTraits<Rational>::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) bad_number(text);

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den)) bad_number(text);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad_number(text);
    Rational r(negative ? mpz_class(-n) : n, d);
    r.canonicalize();
    return r;
  }

  std::string_view body = s;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  long exponent = 0;
  if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    body = body.substr(0, e);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    const auto [ptr, ec] =
        std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (exp_text.empty() || ec != std::errc() || ptr != exp_text.data() + exp_text.size() ||
        exponent > 4000 || exponent < -4000)
      bad_number(text);
  }

  std::string_view int_part = body;
  std::string_view frac_part;
  if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || !all_digits(int_part) || !all_digits(frac_part))
    bad_number(text);

  const std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
  if (negative) mantissa = -mantissa;
  exponent -= static_cast<long>(frac_part.size());

  Rational r;
  if (exponent >= 0) {
    r = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
  } else {
    r = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    r.canonicalize();
  }
  return r;
}

std::string ScalarTraits<Rational>::to_decimal(const Rational& v) {
  // A reduced fraction terminates iff its denominator is 2^a 5^b; it then
  // needs exactly max(a, b) fractional digits.
  mpz_class den = v.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  const bool terminating = den == 1;
  const unsigned long places = terminating ? std::max(twos, fives) : 20;

  const mpz_class num = abs(v.get_num());
  const mpz_class scale = pow10(places);
  mpz_class scaled = num * scale;
  mpz_class q;
  mpz_class r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), v.get_den().get_mpz_t());
  if (2 * r >= v.get_den()) q += 1;  // round half up (never taken when terminating)

  std::string digits = q.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - places);
  std::string frac = digits.substr(digits.size() - places);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  if (v < 0 && q != 0) out.insert(out.begin(), '-');
  return out;
}

double ScalarTraits<double>::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) bad_number(text);
  if (s.find('/') != std::string_view::npos) {
    const Rational r = ScalarTraits<Rational>::parse(s);
    return mpz_class(r.get_num()).get_d() / mpz_class(r.get_den()).get_d();
  }
  std::string_view body = s;
  if (body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(value))
    bad_number(text);
  return value;
}

std::string ScalarTraits<double>::to_decimal(double v) {
  if (v == 0.0) return "0";  // also folds -0
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace majlat
