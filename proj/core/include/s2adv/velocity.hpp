#pragma once

#include <functional>
#include <string>

namespace s2adv {

/// Which variable the reversible cosine velocity depends on.
enum class CosineMode {
  space,  ///< c(s) = cos(2 pi s / T)
  time,   ///< c(t) = cos(2 pi t / T); the flow over one full period is the identity
};

/// Propagation speed c(s, t) on the periodic domain [0, 1).
///
/// Spatial arguments are wrapped into [0, 1) before evaluation, so every
/// field is treated as periodic in s.
class VelocityField {
 public:
  using Callback = std::function<double(double s, double t)>;

  static VelocityField constant(double speed);
  static VelocityField reversible_cosine(double period, CosineMode mode);
  /// `autonomous` declares that the callback ignores t, which lets the
  /// solver reuse one flow map for every step of equal length.
  static VelocityField custom(Callback callback, bool autonomous = false, std::string name = "custom");

  double operator()(double s, double t) const;

  bool autonomous() const { return autonomous_; }
  const std::string& name() const { return name_; }

 private:
  enum class Kind { constant, cosine_space, cosine_time, custom };

  VelocityField(Kind kind, double parameter, Callback callback, bool autonomous, std::string name);

  Kind kind_;
  double parameter_;
  Callback callback_;
  bool autonomous_;
  std::string name_;
};

/// s - floor(s), mapped into [0, 1).
double wrap_unit(double s);

}  // namespace s2adv
