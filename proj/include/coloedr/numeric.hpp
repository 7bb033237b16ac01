#pragma once

#include <cassert>
#include <cmath>

namespace coloedr {

// Finite real extended with a single +infinity sentinel, ordered above every
// finite value. The payload of the sentinel cannot be extracted, so it never
// leaks into downstream arithmetic as an IEEE special.
class ExtReal {
 public:
  ExtReal() : value_(0.0), infinite_(false) {}
  ExtReal(double value) : value_(value), infinite_(false) { assert(std::isfinite(value)); }

  static ExtReal infinity() {
    ExtReal x;
    x.infinite_ = true;
    return x;
  }

  bool is_infinite() const { return infinite_; }

  double finite() const {
    assert(!infinite_);
    return value_;
  }

  double finite_or(double fallback) const { return infinite_ ? fallback : value_; }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }
  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

  ExtReal operator+(const ExtReal& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return ExtReal(value_ + o.value_);
  }
  ExtReal& operator+=(const ExtReal& o) { return *this = *this + o; }

 private:
  double value_;
  bool infinite_;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }
  double width() const { return hi - lo; }
};

// Smallest x in [lo, hi] with pred(x) true, for a monotone predicate
// (false on a prefix, true on the suffix). Returns hi when pred never fires.
template <typename Pred>
double bisect_first_true(double lo, double hi, double tol, Pred&& pred) {
  if (pred(lo)) return lo;
  if (!pred(hi)) return hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // precision exhausted
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace coloedr
