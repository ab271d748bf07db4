#pragma once

#include <optional>

#include "rydberg/model.hpp"

namespace rydberg {

/// Rabi magnitudes in rad/us. omega0 drives the controls (pulses 1 and 5),
/// omega1/omega2 the target Lambda chain (pulses 2 and 3), omega3 the
/// balanced swap pulse.
struct DriveParams {
  double omega0 = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double omega3 = 0.0;

  void validate() const;
  double omega_bar() const;
  double theta() const;

  /// omega3 defaults to omega_bar / sqrt(2).
  static DriveParams from_ratio(double omega0, double omega_bar, double ratio_omega2_over_omega1,
                                std::optional<double> omega3 = std::nullopt);
  static DriveParams from_theta(double omega0, double omega_bar, double theta,
                                std::optional<double> omega3 = std::nullopt);
};

struct AngleComponents {
  double sin_theta;
  double cos_theta;
};

/// sin(theta) = [6 a^2 b^2 - (a^4 + b^4)] / (a^2+b^2)^2,
/// cos(theta) = 4 a b (b^2 - a^2) / (a^2+b^2)^2 for a = omega1, b = omega2.
AngleComponents angle_components(double omega1, double omega2);

/// atan2 of the components above. On the ratio branch
/// omega2/omega1 in [sqrt2-1, sqrt2+1] the result lies in [0, pi]; outside it
/// sin(theta) < 0 and the angle falls in (-pi, 0).
double theta_from_omegas(double omega1, double omega2);

/// Ratio bounds of the monotone branch, where theta runs from pi down to 0.
inline constexpr double kRatioAtThetaPi = 0.41421356237309504880;  // sqrt2 - 1
inline constexpr double kRatioAtThetaZero = 2.41421356237309504880;  // sqrt2 + 1

struct LambdaRabis {
  double omega1;
  double omega2;
};

/// Bisection on r = omega2/omega1 over the monotone branch; the result
/// satisfies sqrt(omega1^2 + omega2^2) = omega_bar.
LambdaRabis omegas_from_theta(double theta, double omega_bar);

/// Five pulses: control pi pulse, two Lambda 2pi pulses with swapped
/// magnitudes, the balanced swap pulse, and the reversed control pi pulse.
GateSchedule deutsch_schedule(const DriveParams& drive);
/// Pulses 1, 4 and 5 of the Deutsch sequence.
GateSchedule toffoli_schedule(const DriveParams& drive);
/// Two-atom (control, target) version of the Toffoli sequence.
GateSchedule cnot_schedule(const DriveParams& drive);

/// Time between the end of pulse 1 and the start of pulse 5 of the Deutsch
/// sequence: 2pi (2/omega_bar + 1/(sqrt2 omega3)).
double residue_window(const DriveParams& drive);

/// phi = -T_window * V/64, the phase picked up by |rr b> from the
/// control-control residue while the target pulses run.
double phase_phi(const DriveParams& drive, double blockade_shift);

/// Phase picked up by the doubly excited control state between the first and
/// last segment of `schedule` for a given control-control shift.
double residue_phase(const GateSchedule& schedule, double control_pair_shift);

/// omega_bar with omega3 = omega_bar/sqrt2 such that |phi| = 2 N pi, i.e.
/// omega_bar = 3|V| / (64 N). For V < 0 the phase is +2 N pi.
double solve_phase_matching(int n, double blockade_shift);

}  // namespace rydberg
