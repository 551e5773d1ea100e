#include "ratgenus/cert_interval.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace ratgenus {

namespace {

mpfr_prec_t validate_precision(mpfr_prec_t prec) {
  if (prec < 64)
    throw std::invalid_argument(
        "CertInterval: at least 64 bits of precision are required");
  return prec;
}

// Parse "123", "-0.25", "3.3957" into an exact integer scaled by a power of
// ten: value = mantissa / 10^frac_digits.
struct DecimalParts {
  long long mantissa = 0;
  int frac_digits = 0;
};

DecimalParts parse_decimal(std::string_view text) {
  DecimalParts out;
  bool negative = false;
  size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  bool seen_digit = false;
  bool seen_dot = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal literal");
      seen_dot = true;
      continue;
    }
    if (c < '0' || c > '9')
      throw std::invalid_argument("bad decimal literal: " + std::string(text));
    seen_digit = true;
    out.mantissa = out.mantissa * 10 + (c - '0');
    if (seen_dot) ++out.frac_digits;
  }
  if (!seen_digit)
    throw std::invalid_argument("bad decimal literal: " + std::string(text));
  if (negative) out.mantissa = -out.mantissa;
  return out;
}

void set_from_scaled(mpfr_t target, long long mantissa, int frac_digits,
                     mpfr_rnd_t rnd) {
  mpfr_t num, den;
  mpfr_init2(num, 64);
  mpfr_init2(den, 64);
  mpfr_set_si(num, static_cast<long>(mantissa), MPFR_RNDN);  // exact
  mpfr_ui_pow_ui(den, 10, static_cast<unsigned long>(frac_digits), MPFR_RNDN);
  mpfr_div(target, num, den, rnd);
  mpfr_clear(num);
  mpfr_clear(den);
}

}  // namespace

CertInterval::CertInterval(mpfr_prec_t prec) : prec_(validate_precision(prec)) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

CertInterval::CertInterval(const CertInterval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

CertInterval::CertInterval(CertInterval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

CertInterval& CertInterval::operator=(const CertInterval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

CertInterval& CertInterval::operator=(CertInterval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
  }
  return *this;
}

CertInterval::~CertInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

CertInterval CertInterval::from_int(long v, mpfr_prec_t prec) {
  CertInterval out(prec);
  mpfr_set_si(out.lo_, v, MPFR_RNDD);
  mpfr_set_si(out.hi_, v, MPFR_RNDU);
  return out;
}

CertInterval CertInterval::from_decimal(std::string_view text,
                                        mpfr_prec_t prec) {
  const DecimalParts parts = parse_decimal(text);
  CertInterval out(prec);
  set_from_scaled(out.lo_, parts.mantissa, parts.frac_digits, MPFR_RNDD);
  set_from_scaled(out.hi_, parts.mantissa, parts.frac_digits, MPFR_RNDU);
  return out;
}

CertInterval CertInterval::from_rational(const Rational& r, mpfr_prec_t prec) {
  CertInterval out(prec);
  mpfr_t num;
  mpfr_init2(num, 64);
  mpfr_set_si(num, static_cast<long>(r.num()), MPFR_RNDN);
  mpfr_div_si(out.lo_, num, r.den(), MPFR_RNDD);
  mpfr_div_si(out.hi_, num, r.den(), MPFR_RNDU);
  mpfr_clear(num);
  return out;
}

CertInterval CertInterval::from_endpoints(double lo, double hi,
                                          mpfr_prec_t prec) {
  if (!(lo <= hi))
    throw std::invalid_argument("CertInterval: inverted endpoints");
  CertInterval out(prec);
  mpfr_set_d(out.lo_, lo, MPFR_RNDD);
  mpfr_set_d(out.hi_, hi, MPFR_RNDU);
  return out;
}

CertInterval CertInterval::pi(mpfr_prec_t prec) {
  CertInterval out(prec);
  mpfr_const_pi(out.lo_, MPFR_RNDD);
  mpfr_const_pi(out.hi_, MPFR_RNDU);
  return out;
}

CertInterval CertInterval::hull(const CertInterval& a, const CertInterval& b) {
  CertInterval out(std::max(a.prec_, b.prec_));
  mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

double CertInterval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double CertInterval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double CertInterval::mid_double() const {
  return (lo_double() + hi_double()) / 2;
}

double CertInterval::width_double() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double out = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return out;
}

CertInterval CertInterval::midpoint() const {
  CertInterval out(prec_);
  mpfr_add(out.lo_, lo_, hi_, MPFR_RNDD);
  mpfr_div_ui(out.lo_, out.lo_, 2, MPFR_RNDD);
  mpfr_add(out.hi_, lo_, hi_, MPFR_RNDU);
  mpfr_div_ui(out.hi_, out.hi_, 2, MPFR_RNDU);
  return out;
}

bool CertInterval::contains(double x) const {
  return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0;
}

namespace {

// Compare an endpoint against an exact rational: sign of (endpoint - r).
int cmp_rational(mpfr_srcptr v, const Rational& r) {
  mpq_t q;
  mpq_init(q);
  mpq_set_si(q, static_cast<long>(r.num()),
             static_cast<unsigned long>(r.den()));
  mpq_canonicalize(q);
  const int c = mpfr_cmp_q(v, q);
  mpq_clear(q);
  return c;
}

}  // namespace

bool CertInterval::contains(const Rational& r) const {
  return cmp_rational(lo_, r) <= 0 && cmp_rational(hi_, r) >= 0;
}

bool CertInterval::contains(const CertInterval& inner) const {
  return mpfr_cmp(lo_, inner.lo_) <= 0 && mpfr_cmp(hi_, inner.hi_) >= 0;
}

bool CertInterval::certainly_gt(const Rational& r) const {
  return cmp_rational(lo_, r) > 0;
}

bool CertInterval::certainly_lt(const Rational& r) const {
  return cmp_rational(hi_, r) < 0;
}

bool CertInterval::certainly_ge(const Rational& r) const {
  return cmp_rational(lo_, r) >= 0;
}

bool CertInterval::certainly_le(const Rational& r) const {
  return cmp_rational(hi_, r) <= 0;
}

bool CertInterval::certainly_below(const CertInterval& o) const {
  return mpfr_cmp(hi_, o.lo_) < 0;
}

bool CertInterval::matches_decimal(std::string_view text) const {
  const DecimalParts parts = parse_decimal(text);
  // Window of one unit in the last printed place on either side, wide enough
  // for published values that were truncated rather than rounded.
  CertInterval window(prec_);
  set_from_scaled(window.lo_, parts.mantissa - 1, parts.frac_digits, MPFR_RNDD);
  set_from_scaled(window.hi_, parts.mantissa + 1, parts.frac_digits, MPFR_RNDU);
  return window.contains(*this);
}

CertInterval CertInterval::operator+(const CertInterval& o) const {
  CertInterval out(std::max(prec_, o.prec_));
  mpfr_add(out.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, hi_, o.hi_, MPFR_RNDU);
  return out;
}

CertInterval CertInterval::operator-(const CertInterval& o) const {
  CertInterval out(std::max(prec_, o.prec_));
  mpfr_sub(out.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, hi_, o.lo_, MPFR_RNDU);
  return out;
}

CertInterval CertInterval::operator*(const CertInterval& o) const {
  CertInterval out(std::max(prec_, o.prec_));
  mpfr_t tmp;
  mpfr_init2(tmp, out.prec_);
  const mpfr_srcptr xs[2] = {lo_, hi_};
  const mpfr_srcptr ys[2] = {o.lo_, o.hi_};
  bool first = true;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      mpfr_mul(tmp, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(tmp, out.lo_) < 0) mpfr_set(out.lo_, tmp, MPFR_RNDD);
      mpfr_mul(tmp, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(tmp, out.hi_) > 0) mpfr_set(out.hi_, tmp, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(tmp);
  return out;
}

CertInterval CertInterval::operator/(const CertInterval& o) const {
  if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
    throw std::domain_error("CertInterval: division by interval containing 0");
  CertInterval out(std::max(prec_, o.prec_));
  mpfr_t tmp;
  mpfr_init2(tmp, out.prec_);
  const mpfr_srcptr xs[2] = {lo_, hi_};
  const mpfr_srcptr ys[2] = {o.lo_, o.hi_};
  bool first = true;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      mpfr_div(tmp, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(tmp, out.lo_) < 0) mpfr_set(out.lo_, tmp, MPFR_RNDD);
      mpfr_div(tmp, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(tmp, out.hi_) > 0) mpfr_set(out.hi_, tmp, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(tmp);
  return out;
}

CertInterval CertInterval::operator-() const {
  CertInterval out(prec_);
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

CertInterval CertInterval::sqrt() const {
  if (mpfr_sgn(lo_) < 0)
    throw std::domain_error("CertInterval: sqrt of negative interval");
  CertInterval out(prec_);
  mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
  return out;
}

CertInterval CertInterval::sinh() const {
  CertInterval out(prec_);
  mpfr_sinh(out.lo_, lo_, MPFR_RNDD);
  mpfr_sinh(out.hi_, hi_, MPFR_RNDU);
  return out;
}

CertInterval CertInterval::cosh() const {
  CertInterval out(prec_);
  if (mpfr_sgn(lo_) >= 0) {
    mpfr_cosh(out.lo_, lo_, MPFR_RNDD);
    mpfr_cosh(out.hi_, hi_, MPFR_RNDU);
  } else if (mpfr_sgn(hi_) <= 0) {
    mpfr_cosh(out.lo_, hi_, MPFR_RNDD);
    mpfr_cosh(out.hi_, lo_, MPFR_RNDU);
  } else {
    // interval straddles the minimum at 0
    mpfr_set_ui(out.lo_, 1, MPFR_RNDD);
    mpfr_t other;
    mpfr_init2(other, prec_);
    mpfr_cosh(out.hi_, hi_, MPFR_RNDU);
    mpfr_cosh(other, lo_, MPFR_RNDU);
    if (mpfr_cmp(other, out.hi_) > 0) mpfr_set(out.hi_, other, MPFR_RNDU);
    mpfr_clear(other);
  }
  return out;
}

CertInterval CertInterval::tanh() const {
  CertInterval out(prec_);
  mpfr_tanh(out.lo_, lo_, MPFR_RNDD);
  mpfr_tanh(out.hi_, hi_, MPFR_RNDU);
  return out;
}

bool CertInterval::identical(const CertInterval& o) const {
  return prec_ == o.prec_ && mpfr_cmp(lo_, o.lo_) == 0 &&
         mpfr_cmp(hi_, o.hi_) == 0;
}

namespace {
std::string format_endpoint(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
  char buf[256];
  const std::string fmt = "%." + std::to_string(digits) + "R*g";
  mpfr_snprintf(buf, sizeof(buf), fmt.c_str(), rnd, v);
  return buf;
}
}  // namespace

std::string CertInterval::lo_string(int digits) const {
  return format_endpoint(lo_, digits, MPFR_RNDD);
}

std::string CertInterval::hi_string(int digits) const {
  return format_endpoint(hi_, digits, MPFR_RNDU);
}

std::string CertInterval::str(int digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

}  // namespace ratgenus
