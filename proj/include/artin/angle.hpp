#pragma once

// Exact angles, stored as rational multiples of pi.

#include <compare>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace artin {

class PiAngle {
 public:
  using Rational = boost::rational<std::int64_t>;

  constexpr PiAngle() = default;
  PiAngle(std::int64_t num, std::int64_t den) : over_pi_(num, den) {}
  explicit PiAngle(Rational r) : over_pi_(r) {}

  static PiAngle full_turn() { return PiAngle(2, 1); }  // 2 pi

  const Rational& over_pi() const noexcept { return over_pi_; }
  bool positive() const noexcept { return over_pi_ > 0; }
  double radians() const noexcept;

  // "p/q", or "p" when q == 1.
  std::string str() const;
  static PiAngle parse(const std::string& s);

  PiAngle& operator+=(const PiAngle& o) {
    over_pi_ += o.over_pi_;
    return *this;
  }
  friend PiAngle operator+(PiAngle a, const PiAngle& b) { return a += b; }
  friend PiAngle operator*(std::int64_t k, const PiAngle& a) { return PiAngle(a.over_pi_ * k); }

  friend bool operator==(const PiAngle& a, const PiAngle& b) { return a.over_pi_ == b.over_pi_; }
  friend std::strong_ordering operator<=>(const PiAngle& a, const PiAngle& b) {
    if (a.over_pi_ < b.over_pi_) return std::strong_ordering::less;
    if (b.over_pi_ < a.over_pi_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational over_pi_{0};
};

}  // namespace artin
