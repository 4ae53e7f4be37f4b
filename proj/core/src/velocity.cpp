#include "s2adv/velocity.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "s2adv/error.hpp"

namespace s2adv {

double wrap_unit(double s) {
  double w = s - std::floor(s);
  // s slightly below an integer can round up to exactly 1.
  if (w >= 1.0) {
    w = 0.0;
  }
  return w;
}

VelocityField::VelocityField(Kind kind, double parameter, Callback callback, bool autonomous,
                             std::string name)
    : kind_(kind),
      parameter_(parameter),
      callback_(std::move(callback)),
      autonomous_(autonomous),
      name_(std::move(name)) {}

VelocityField VelocityField::constant(double speed) {
  if (!std::isfinite(speed)) {
    throw std::invalid_argument("VelocityField::constant: speed must be finite");
  }
  std::ostringstream name;
  name << "constant(" << speed << ")";
  return {Kind::constant, speed, nullptr, true, name.str()};
}

VelocityField VelocityField::reversible_cosine(double period, CosineMode mode) {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw std::invalid_argument("VelocityField::reversible_cosine: period must be positive");
  }
  std::ostringstream name;
  if (mode == CosineMode::space) {
    name << "cosine-space(T=" << period << ")";
    return {Kind::cosine_space, period, nullptr, true, name.str()};
  }
  name << "cosine-time(T=" << period << ")";
  return {Kind::cosine_time, period, nullptr, false, name.str()};
}

VelocityField VelocityField::custom(Callback callback, bool autonomous, std::string name) {
  if (!callback) {
    throw std::invalid_argument("VelocityField::custom: empty callback");
  }
  return {Kind::custom, 0.0, std::move(callback), autonomous, std::move(name)};
}

double VelocityField::operator()(double s, double t) const {
  switch (kind_) {
    case Kind::constant:
      return parameter_;
    case Kind::cosine_space:
      return std::cos(2.0 * M_PI * wrap_unit(s) / parameter_);
    case Kind::cosine_time:
      return std::cos(2.0 * M_PI * t / parameter_);
    case Kind::custom:
      break;
  }
  const double c = callback_(wrap_unit(s), t);
  if (!std::isfinite(c)) {
    std::ostringstream msg;
    msg << "velocity '" << name_ << "' is not finite at s=" << s << ", t=" << t;
    throw DomainError(msg.str());
  }
  return c;
}

}  // namespace s2adv
