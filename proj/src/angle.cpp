#include "artin/angle.hpp"

#include <numbers>
#include <stdexcept>

namespace artin {

double PiAngle::radians() const noexcept {
  return std::numbers::pi * static_cast<double>(over_pi_.numerator()) / static_cast<double>(over_pi_.denominator());
}

std::string PiAngle::str() const {
  if (over_pi_.denominator() == 1) return std::to_string(over_pi_.numerator());
  return std::to_string(over_pi_.numerator()) + "/" + std::to_string(over_pi_.denominator());
}

PiAngle PiAngle::parse(const std::string& s) {
  const auto slash = s.find('/');
  std::size_t used = 0;
  const std::int64_t num = std::stoll(s.substr(0, slash), &used);
  if (used != (slash == std::string::npos ? s.size() : slash)) throw std::invalid_argument("bad rational " + s);
  if (slash == std::string::npos) return PiAngle(num, 1);
  const std::string den_s = s.substr(slash + 1);
  const std::int64_t den = std::stoll(den_s, &used);
  if (used != den_s.size() || den == 0) throw std::invalid_argument("bad rational " + s);
  return PiAngle(num, den);
}

}  // namespace artin
