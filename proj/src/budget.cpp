#include "rydberg/budget.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rydberg {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

double sin2(double x) {
  const double s = std::sin(x);
  return s * s;
}
}  // namespace

double lifetime_at(Temperature temperature) {
  return temperature == Temperature::k4_2 ? kLifetime4_2K_us : kLifetime300K_us;
}

Temperature parse_temperature(std::string_view text) {
  if (text == "4.2K" || text == "4.2" || text == "4K") return Temperature::k4_2;
  if (text == "300K" || text == "300") return Temperature::k300;
  throw ConstructionError("temperature must be 4.2K or 300K, got '" + std::string(text) + "'");
}

const char* temperature_name(Temperature temperature) {
  return temperature == Temperature::k4_2 ? "4.2K" : "300K";
}

double gate_time(const DriveParams& drive) {
  drive.validate();
  return 2.0 * kPi * (1.0 / drive.omega0 + 2.0 / drive.omega_bar() + 1.0 / (kSqrt2 * drive.omega3));
}

double single_control_dwell(const DriveParams& drive) {
  drive.validate();
  return kPi / drive.omega0 + 2.0 * (2.0 * kPi / drive.omega_bar()) + kSqrt2 * kPi / drive.omega3;
}

std::array<double, 8> dwell_table(const DriveParams& drive) {
  const double tx = single_control_dwell(drive);
  const double w1 = drive.omega1;
  const double w2 = drive.omega2;
  const double wb = drive.omega_bar();
  const double wb2 = wb * wb;
  const double wb3 = wb2 * wb;
  const double swap_part = kPi / (kSqrt2 * drive.omega3) * 0.5;
  const double a = w2 * std::abs(w2 * w2 - 3.0 * w1 * w1) / wb3;
  const double b = w1 * (w1 * w1 - 3.0 * w2 * w2) / wb3;
  const double t110 = kPi / wb * (w1 * w1 / wb2 + a * a) + swap_part;
  const double t111 = kPi / wb * (w2 * w2 / wb2 + b * b) + swap_part;
  return {2 * tx, 2 * tx, tx, tx, tx, tx, t110, t111};
}

double avg_dwell(const DriveParams& drive) {
  return single_control_dwell(drive) + kPi / (4.0 * drive.omega_bar()) +
         kPi / (8.0 * kSqrt2 * drive.omega3);
}

double decay_error(const DriveParams& drive, double lifetime_us) {
  if (!(lifetime_us > 0.0)) throw DomainError("lifetime must be positive");
  return avg_dwell(drive) / lifetime_us;
}

double blockade_error(double blockade_shift, double omega0) {
  if (!(omega0 > 0.0)) throw DomainError("omega0 must be positive");
  const double residue = blockade_shift / 64.0;
  return 2.0 * residue * residue / (omega0 * omega0);
}

double two_photon_error(const DriveParams& drive, double blockade_shift, bool exact_denominator) {
  drive.validate();
  if (blockade_shift == 0.0) throw DomainError("two-photon error needs a non-zero blockade shift");
  if (std::isinf(blockade_shift)) return 0.0;
  const double v = blockade_shift;
  const double t = 2.0 * kPi / drive.omega_bar();
  const double t_swap = kSqrt2 * kPi / drive.omega3;
  const double lambda_coupling = drive.omega1 * drive.omega2 * t;
  const double swap_coupling = drive.omega3 * drive.omega3 * t_swap;
  // Rows |00b>: detuning 2V + V/64, couplings halved relative to 2V rows.
  const double v_double = exact_denominator ? 4.0 * v + v / 32.0 : 4.0 * v;
  const double double_excited = sin2(lambda_coupling / v_double) + sin2(swap_coupling / (2.0 * v_double));
  const double single_excited = sin2(lambda_coupling / (2.0 * v)) + sin2(swap_coupling / (4.0 * v));
  return 0.25 * double_excited + 0.5 * single_excited;
}

ErrorBudget total_error(const DriveParams& drive, const PhysicalParams& params, double lifetime_us) {
  params.validate();
  const double v = params.blockade_shift();
  ErrorBudget b;
  b.gate_time_us = gate_time(drive);
  b.t_x_us = single_control_dwell(drive);
  b.mean_dwell_us = avg_dwell(drive);
  b.phi = phase_phi(drive, v);
  b.e_decay = decay_error(drive, lifetime_us);
  b.e_blockade = blockade_error(v, drive.omega0);
  b.e_two_photon = two_photon_error(drive, v);
  b.total = b.e_decay + b.e_blockade + b.e_two_photon;
  return b;
}

ErrorBudget total_error(const DriveParams& drive, const PhysicalParams& params,
                        Temperature temperature) {
  return total_error(drive, params, lifetime_at(temperature));
}

std::vector<double> SweepGrid::points_mhz() const {
  if (!(step_mhz > 0.0)) throw DomainError("sweep step must be positive");
  if (!(omega_bar_min_mhz > 0.0) || omega_bar_max_mhz > kMaxSweepOmegaBarMhz + 1e-12 ||
      omega_bar_max_mhz < omega_bar_min_mhz) {
    throw DomainError("sweep range must lie in (0, 2.3] MHz");
  }
  const auto count =
      static_cast<std::size_t>(std::floor((omega_bar_max_mhz - omega_bar_min_mhz) / step_mhz + 1e-9)) + 1;
  std::vector<double> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pts.push_back(omega_bar_min_mhz + static_cast<double>(i) * step_mhz);
  return pts;
}

DriveParams sweep_drive(double omega_bar_mhz, const SweepConstraints& constraints) {
  return DriveParams::from_ratio(mhz_to_angular(constraints.omega0_mhz), mhz_to_angular(omega_bar_mhz),
                                 constraints.ratio_omega2_over_omega1);
}

SweepResult sweep(const SweepGrid& grid, const PhysicalParams& params,
                  const SweepConstraints& constraints) {
  SweepResult out;
  for (double ob : grid.points_mhz()) {
    const DriveParams drive = sweep_drive(ob, constraints);
    out.records.push_back({ob, total_error(drive, params, Temperature::k4_2),
                           total_error(drive, params, Temperature::k300)});
  }
  for (std::size_t i = 1; i < out.records.size(); ++i) {
    if (out.records[i].cold.total < out.records[out.argmin_cold].cold.total) out.argmin_cold = i;
    if (out.records[i].warm.total < out.records[out.argmin_warm].warm.total) out.argmin_warm = i;
  }
  return out;
}

}  // namespace rydberg
