#include "rydberg/schedule.hpp"

#include <cmath>
#include <numbers>

namespace rydberg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

double default_omega3(double omega_bar, std::optional<double> omega3) {
  return omega3.value_or(omega_bar / kSqrt2);
}

PulseSegment control_pi_pulse(const DriveParams& drive, int n_controls, double sign) {
  PulseSegment seg;
  for (int atom = 0; atom < n_controls; ++atom) {
    seg.transitions.push_back({atom, Level::g0, Complex(sign * drive.omega0, 0.0)});
  }
  seg.duration_us = kPi / drive.omega0;
  return seg;
}

PulseSegment swap_pulse(const DriveParams& drive, int target) {
  return {{{target, Level::g0, Complex(drive.omega3, 0.0)},
           {target, Level::g1, Complex(-drive.omega3, 0.0)}},
          kSqrt2 * kPi / drive.omega3};
}

}  // namespace

void DriveParams::validate() const {
  for (double w : {omega0, omega1, omega2, omega3}) {
    if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("Rabi magnitudes must be positive and finite");
  }
}

double DriveParams::omega_bar() const { return std::sqrt(omega1 * omega1 + omega2 * omega2); }

double DriveParams::theta() const { return theta_from_omegas(omega1, omega2); }

DriveParams DriveParams::from_ratio(double omega0, double omega_bar, double ratio,
                                    std::optional<double> omega3) {
  if (!(omega_bar > 0.0) || !(ratio > 0.0)) throw DomainError("omega_bar and ratio must be positive");
  const double omega1 = omega_bar / std::sqrt(1.0 + ratio * ratio);
  DriveParams d{omega0, omega1, ratio * omega1, default_omega3(omega_bar, omega3)};
  d.validate();
  return d;
}

DriveParams DriveParams::from_theta(double omega0, double omega_bar, double theta,
                                    std::optional<double> omega3) {
  const LambdaRabis rabis = omegas_from_theta(theta, omega_bar);
  DriveParams d{omega0, rabis.omega1, rabis.omega2, default_omega3(omega_bar, omega3)};
  d.validate();
  return d;
}

AngleComponents angle_components(double omega1, double omega2) {
  if (!(omega1 > 0.0) || !(omega2 > 0.0)) throw DomainError("omega1 and omega2 must be positive");
  // Normalise first so the quartic terms stay O(1).
  const double norm = std::sqrt(omega1 * omega1 + omega2 * omega2);
  const double a = omega1 / norm;
  const double b = omega2 / norm;
  const double a2 = a * a;
  const double b2 = b * b;
  const double denom = (a2 + b2) * (a2 + b2);
  return {(6.0 * a2 * b2 - (a2 * a2 + b2 * b2)) / denom, 4.0 * a * b * (b2 - a2) / denom};
}

double theta_from_omegas(double omega1, double omega2) {
  AngleComponents c = angle_components(omega1, omega2);
  // Snap roundoff at the branch endpoints so atan2 lands on 0 or +pi.
  if (std::abs(c.sin_theta) < 1e-14) c.sin_theta = 0.0;
  return std::atan2(c.sin_theta, c.cos_theta);
}

LambdaRabis omegas_from_theta(double theta, double omega_bar) {
  if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("theta must lie in [0, pi]");
  if (!(omega_bar > 0.0)) throw DomainError("omega_bar must be positive");
  // theta(r) decreases from pi at the lower end to 0 at the upper end.
  double lo = kRatioAtThetaPi;
  double hi = kRatioAtThetaZero;
  for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (theta_from_omegas(1.0, mid) > theta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double ratio = 0.5 * (lo + hi);
  const double omega1 = omega_bar / std::sqrt(1.0 + ratio * ratio);
  return {omega1, ratio * omega1};
}

GateSchedule deutsch_schedule(const DriveParams& drive) {
  drive.validate();
  constexpr int target = 2;
  const double lambda_time = 2.0 * kPi / drive.omega_bar();
  GateSchedule s;
  s.kind = GateKind::deutsch;
  s.n_atoms = 3;
  s.segments.push_back(control_pi_pulse(drive, 2, +1.0));
  s.segments.push_back({{{target, Level::g0, Complex(drive.omega1, 0.0)},
                         {target, Level::g1, Complex(0.0, drive.omega2)}},
                        lambda_time});
  s.segments.push_back({{{target, Level::g0, Complex(drive.omega2, 0.0)},
                         {target, Level::g1, Complex(0.0, drive.omega1)}},
                        lambda_time});
  s.segments.push_back(swap_pulse(drive, target));
  s.segments.push_back(control_pi_pulse(drive, 2, -1.0));
  s.validate();
  return s;
}

GateSchedule toffoli_schedule(const DriveParams& drive) {
  GateSchedule s = deutsch_schedule(drive);
  s.kind = GateKind::toffoli;
  s.segments.erase(s.segments.begin() + 1, s.segments.begin() + 3);
  return s;
}

GateSchedule cnot_schedule(const DriveParams& drive) {
  drive.validate();
  GateSchedule s;
  s.kind = GateKind::cnot;
  s.n_atoms = 2;
  s.segments.push_back(control_pi_pulse(drive, 1, +1.0));
  s.segments.push_back(swap_pulse(drive, 1));
  s.segments.push_back(control_pi_pulse(drive, 1, -1.0));
  s.validate();
  return s;
}

double residue_window(const DriveParams& drive) {
  drive.validate();
  return 2.0 * kPi * (2.0 / drive.omega_bar() + 1.0 / (kSqrt2 * drive.omega3));
}

double phase_phi(const DriveParams& drive, double blockade_shift) {
  return -residue_window(drive) * blockade_shift / 64.0;
}

double residue_phase(const GateSchedule& schedule, double control_pair_shift) {
  if (schedule.segments.size() < 2) return 0.0;
  double window = 0.0;
  for (std::size_t k = 1; k + 1 < schedule.segments.size(); ++k) window += schedule.segments[k].duration_us;
  return -window * control_pair_shift;
}

double solve_phase_matching(int n, double blockade_shift) {
  if (n < 1) throw DomainError("phase-matching index must be >= 1");
  if (blockade_shift == 0.0 || !std::isfinite(blockade_shift)) {
    throw DomainError("phase matching needs a finite non-zero blockade shift");
  }
  // With omega3 = omega_bar/sqrt2 the window is 6 pi / omega_bar.
  return 3.0 * std::abs(blockade_shift) / (64.0 * n);
}

}  // namespace rydberg
