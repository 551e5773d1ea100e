#ifndef RATGENUS_GENUS_VALUE_HPP
#define RATGENUS_GENUS_VALUE_HPP

#include <optional>
#include <string>

#include "ratgenus/errors.hpp"
#include "ratgenus/rational.hpp"

namespace ratgenus {

// Certified knowledge about a rational genus: a closed interval of rationals,
// possibly unbounded above, with per-endpoint strictness. Some theorems give
// strict bounds ("> 1/12"), so comparisons must honor the flags.
class GenusValue {
 public:
  GenusValue() : lo_(0), hi_(std::nullopt) {}

  static GenusValue exact(const Rational& v) {
    return GenusValue(v, v, false, false);
  }
  static GenusValue bounds(const Rational& lo, const Rational& hi,
                           bool lo_strict = false, bool hi_strict = false) {
    return GenusValue(lo, hi, lo_strict, hi_strict);
  }
  // [lo, +inf)
  static GenusValue at_least(const Rational& lo, bool strict = false) {
    return GenusValue(lo, std::nullopt, strict, false);
  }
  // [0, hi]
  static GenusValue at_most(const Rational& hi, bool strict = false) {
    return GenusValue(Rational(0), hi, false, strict);
  }
  static GenusValue unconstrained() { return GenusValue(); }

  const Rational& lo() const { return lo_; }
  const std::optional<Rational>& hi() const { return hi_; }
  bool lo_strict() const { return lo_strict_; }
  bool hi_strict() const { return hi_strict_; }
  bool bounded() const { return hi_.has_value(); }

  bool is_exact() const {
    return hi_ && *hi_ == lo_ && !lo_strict_ && !hi_strict_;
  }
  bool is_exactly(const Rational& v) const { return is_exact() && lo_ == v; }

  // Whole-interval comparisons against a rational (used by assertions and by
  // the classifier thresholds).
  bool certainly_ge(const Rational& r) const { return lo_ >= r; }
  bool certainly_gt(const Rational& r) const {
    return lo_ > r || (lo_ == r && lo_strict_);
  }
  bool certainly_le(const Rational& r) const { return hi_ && *hi_ <= r; }
  bool certainly_lt(const Rational& r) const {
    return hi_ && (*hi_ < r || (*hi_ == r && hi_strict_));
  }

  friend bool operator==(const GenusValue& a, const GenusValue& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.lo_strict_ == b.lo_strict_ &&
           a.hi_strict_ == b.hi_strict_;
  }
  friend bool operator!=(const GenusValue& a, const GenusValue& b) {
    return !(a == b);
  }

  std::string str() const {
    std::string s = lo_strict_ ? "(" : "[";
    s += lo_.str();
    s += ", ";
    if (hi_) {
      s += hi_->str();
      s += hi_strict_ ? ")" : "]";
    } else {
      s += "inf)";
    }
    return s;
  }

 private:
  GenusValue(const Rational& lo, std::optional<Rational> hi, bool ls, bool hs)
      : lo_(lo), hi_(hi), lo_strict_(ls), hi_strict_(hs) {
    if (lo_ < Rational(0))
      throw std::invalid_argument("GenusValue: negative lower endpoint");
    if (hi_) {
      if (*hi_ < lo_)
        throw std::invalid_argument("GenusValue: inverted endpoints");
      if (*hi_ == lo_ && (lo_strict_ || hi_strict_))
        throw std::invalid_argument("GenusValue: empty interval");
    }
  }

  Rational lo_;
  std::optional<Rational> hi_;
  bool lo_strict_ = false;
  bool hi_strict_ = false;
};

// Scale both endpoints by a positive rational; strictness is preserved.
inline GenusValue iv_scale(const GenusValue& v, const Rational& c) {
  if (!(c > Rational(0)))
    throw std::invalid_argument("iv_scale: scale factor must be positive");
  if (v.bounded())
    return GenusValue::bounds(v.lo() * c, *v.hi() * c, v.lo_strict(),
                              v.hi_strict());
  return GenusValue::at_least(v.lo() * c, v.lo_strict());
}

// Endpoint-wise sum plus a constant shift. An endpoint is strict if either
// addend's endpoint is strict.
inline GenusValue iv_add(const GenusValue& a, const GenusValue& b,
                         const Rational& shift) {
  const Rational lo = a.lo() + b.lo() + shift;
  const bool ls = a.lo_strict() || b.lo_strict();
  if (a.bounded() && b.bounded())
    return GenusValue::bounds(lo, *a.hi() + *b.hi() + shift, ls,
                              a.hi_strict() || b.hi_strict());
  return GenusValue::at_least(lo, ls);
}

// Interval intersection. Throws EmptyIntersection on contradictory bounds.
inline GenusValue iv_refine(const GenusValue& a, const GenusValue& b) {
  Rational lo = a.lo();
  bool ls = a.lo_strict();
  if (b.lo() > lo) {
    lo = b.lo();
    ls = b.lo_strict();
  } else if (b.lo() == lo) {
    ls = ls || b.lo_strict();
  }

  std::optional<Rational> hi;
  bool hs = false;
  if (a.bounded() && b.bounded()) {
    if (*a.hi() < *b.hi()) {
      hi = a.hi();
      hs = a.hi_strict();
    } else if (*b.hi() < *a.hi()) {
      hi = b.hi();
      hs = b.hi_strict();
    } else {
      hi = a.hi();
      hs = a.hi_strict() || b.hi_strict();
    }
  } else if (a.bounded()) {
    hi = a.hi();
    hs = a.hi_strict();
  } else if (b.bounded()) {
    hi = b.hi();
    hs = b.hi_strict();
  }

  if (hi) {
    if (*hi < lo || (*hi == lo && (ls || hs)))
      throw EmptyIntersection("iv_refine: intervals " + a.str() + " and " +
                              b.str() + " are disjoint");
    return GenusValue::bounds(lo, *hi, ls, hs);
  }
  return GenusValue::at_least(lo, ls);
}

// Whether a knot is p-trivial (admits a disk p-Seifert surface), and for
// which p. p = 1 means the knot bounds a disk.
class TrivialityStatus {
 public:
  enum class Kind { NotPTrivial, PTrivial, Unknown };

  static TrivialityStatus not_p_trivial() {
    return TrivialityStatus(Kind::NotPTrivial, 0);
  }
  static TrivialityStatus p_trivial(std::int64_t p) {
    if (p < 1)
      throw std::invalid_argument("TrivialityStatus: p must be positive");
    return TrivialityStatus(Kind::PTrivial, p);
  }
  static TrivialityStatus unknown() {
    return TrivialityStatus(Kind::Unknown, 0);
  }

  Kind kind() const { return kind_; }
  bool is_not_p_trivial() const { return kind_ == Kind::NotPTrivial; }
  bool is_p_trivial() const { return kind_ == Kind::PTrivial; }
  bool is_unknown() const { return kind_ == Kind::Unknown; }
  // Only valid when is_p_trivial().
  std::int64_t p() const {
    if (kind_ != Kind::PTrivial)
      throw std::logic_error("TrivialityStatus: p() on non-PTrivial status");
    return p_;
  }

  friend bool operator==(const TrivialityStatus& a,
                         const TrivialityStatus& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const TrivialityStatus& a,
                         const TrivialityStatus& b) {
    return !(a == b);
  }

  std::string str() const {
    switch (kind_) {
      case Kind::NotPTrivial:
        return "NotPTrivial";
      case Kind::PTrivial:
        return "PTrivial(" + std::to_string(p_) + ")";
      default:
        return "Unknown";
    }
  }

 private:
  TrivialityStatus(Kind k, std::int64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

}  // namespace ratgenus

#endif  // RATGENUS_GENUS_VALUE_HPP
