#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "rydberg/model.hpp"
#include "rydberg/schedule.hpp"

namespace rydberg {

/// Cryostat temperature; only selects the Rydberg lifetime.
enum class Temperature { k4_2, k300 };

inline constexpr double kLifetime4_2K_us = 1590.0;
inline constexpr double kLifetime300K_us = 313.0;

double lifetime_at(Temperature temperature);
Temperature parse_temperature(std::string_view text);
const char* temperature_name(Temperature temperature);

struct ErrorBudget {
  double gate_time_us = 0.0;
  double t_x_us = 0.0;
  double mean_dwell_us = 0.0;
  double phi = 0.0;
  double e_decay = 0.0;
  double e_blockade = 0.0;
  double e_two_photon = 0.0;
  double total = 0.0;
};

/// T_g = 2pi (1/omega0 + 2/omega_bar + 1/(sqrt2 omega3)).
double gate_time(const DriveParams& drive);

/// Time one singly excited control spends in |r> over the Deutsch sequence:
/// pi/omega0 + 2 * 2pi/omega_bar + sqrt2 pi/omega3.
double single_control_dwell(const DriveParams& drive);

/// Closed-form Rydberg dwell per computational input, |000> first.
std::array<double, 8> dwell_table(const DriveParams& drive);

/// T_x + pi/(4 omega_bar) + pi/(8 sqrt2 omega3); equals the mean of dwell_table.
double avg_dwell(const DriveParams& drive);

double decay_error(const DriveParams& drive, double lifetime_us);

/// 2 (V/64)^2 / omega0^2.
double blockade_error(double blockade_shift, double omega0);

/// Average population moved by the far-detuned two-photon couplings during
/// the target pulses. By default the |00b> rows use 4V in place of 4V + V/32.
double two_photon_error(const DriveParams& drive, double blockade_shift,
                        bool exact_denominator = false);

ErrorBudget total_error(const DriveParams& drive, const PhysicalParams& params, double lifetime_us);
ErrorBudget total_error(const DriveParams& drive, const PhysicalParams& params,
                        Temperature temperature);

struct SweepGrid {
  double omega_bar_min_mhz = 0.02;
  double omega_bar_max_mhz = 2.3;
  double step_mhz = 0.02;

  /// Points start + i*step up to max inclusive; throws DomainError outside
  /// (0, 2.3] MHz.
  std::vector<double> points_mhz() const;
};

inline constexpr double kMaxSweepOmegaBarMhz = 2.3;

/// Fixed drive relations used along the sweep; omega3 = omega_bar/sqrt2.
struct SweepConstraints {
  double omega0_mhz = 10.0;
  double ratio_omega2_over_omega1 = 2.0;
};

struct SweepRecord {
  double omega_bar_mhz = 0.0;
  ErrorBudget cold;  // 4.2 K
  ErrorBudget warm;  // 300 K
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::size_t argmin_cold = 0;
  std::size_t argmin_warm = 0;
};

DriveParams sweep_drive(double omega_bar_mhz, const SweepConstraints& constraints);

/// Records are ordered by ascending omega_bar; each point is independent.
SweepResult sweep(const SweepGrid& grid, const PhysicalParams& params,
                  const SweepConstraints& constraints = {});

}  // namespace rydberg
