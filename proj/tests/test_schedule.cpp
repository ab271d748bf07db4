#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rydberg/budget.hpp"
#include "rydberg/schedule.hpp"

using namespace rydberg;
using std::numbers::pi;
using std::numbers::sqrt2;

namespace {
DriveParams reference_drive(double omega_bar_mhz = 0.54) {
  return DriveParams::from_ratio(mhz_to_angular(10.0), mhz_to_angular(omega_bar_mhz), 2.0);
}
const double kV = vdw_shift(-633.0, 6.0);
}  // namespace

TEST_CASE("theta for omega2/omega1 = 2 has sin 7/25 and cos 24/25") {
  const double theta = theta_from_omegas(1.0, 2.0);
  CHECK(std::abs(std::sin(theta) - 7.0 / 25.0) < 1e-12);
  CHECK(std::abs(std::cos(theta) - 24.0 / 25.0) < 1e-12);
  const AngleComponents c = angle_components(1.0, 2.0);
  CHECK(std::abs(c.sin_theta - 0.28) < 1e-15);
  CHECK(std::abs(c.cos_theta - 0.96) < 1e-15);
}

TEST_CASE("theta endpoints and the Toffoli point") {
  CHECK(std::abs(theta_from_omegas(1.0, 1.0) - pi / 2) < 1e-12);
  CHECK(std::abs(theta_from_omegas(1.0, sqrt2 + 1.0)) < 1e-9);
  CHECK(std::abs(theta_from_omegas(1.0, sqrt2 - 1.0) - pi) < 1e-9);
}

TEST_CASE("theta is scale invariant") {
  CHECK(theta_from_omegas(3.0, 6.0) == doctest::Approx(theta_from_omegas(1.0, 2.0)).epsilon(1e-15));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.05, 5.0);
  for (int k = 0; k < 100; ++k) {
    const double a = u(rng), b = u(rng), s = u(rng) * 100.0;
    CHECK(std::abs(theta_from_omegas(a, b) - theta_from_omegas(s * a, s * b)) < 1e-12);
  }
}

TEST_CASE("sin^2 + cos^2 = 1 through the quartic identity") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  for (int k = 0; k < 500; ++k) {
    const double a = u(rng), b = u(rng);
    const double a2 = a * a, b2 = b * b;
    const double lhs = std::pow(6 * a2 * b2 - a2 * a2 - b2 * b2, 2) + 16 * a2 * b2 * std::pow(b2 - a2, 2);
    const double rhs = std::pow(a2 + b2, 4);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
    const AngleComponents c = angle_components(a, b);
    CHECK(std::abs(c.sin_theta * c.sin_theta + c.cos_theta * c.cos_theta - 1.0) < 1e-12);
  }
}

TEST_CASE("theta is strictly decreasing on the tunable ratio branch") {
  const int n = 1000;
  double previous = theta_from_omegas(1.0, kRatioAtThetaPi);
  for (int k = 1; k <= n; ++k) {
    const double r = kRatioAtThetaPi + (kRatioAtThetaZero - kRatioAtThetaPi) * k / n;
    const double theta = theta_from_omegas(1.0, r);
    CHECK(theta < previous);
    CHECK(theta >= 0.0);
    previous = theta;
  }
}

TEST_CASE("theta rejects non-positive Rabi frequencies") {
  CHECK_THROWS_AS(theta_from_omegas(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(theta_from_omegas(1.0, -2.0), DomainError);
}

TEST_CASE("omegas_from_theta inverts theta_from_omegas") {
  const double ob = mhz_to_angular(0.54);
  LambdaRabis r = omegas_from_theta(pi / 2, ob);
  CHECK(r.omega2 / r.omega1 == doctest::Approx(1.0).epsilon(1e-10));
  r = omegas_from_theta(std::asin(7.0 / 25.0), ob);
  CHECK(r.omega2 / r.omega1 == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(std::hypot(r.omega1, r.omega2) == doctest::Approx(ob).epsilon(1e-14));

  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double theta = pi * k / 199.0;
    const LambdaRabis w = omegas_from_theta(theta, ob);
    worst = std::max(worst, std::abs(theta_from_omegas(w.omega1, w.omega2) - theta));
  }
  CHECK(worst < 1e-9);

  CHECK_THROWS_AS(omegas_from_theta(-0.1, ob), DomainError);
  CHECK_THROWS_AS(omegas_from_theta(pi + 0.1, ob), DomainError);
  CHECK_THROWS_AS(omegas_from_theta(1.0, 0.0), DomainError);
}

TEST_CASE("Deutsch schedule layout") {
  const DriveParams d = reference_drive();
  const GateSchedule s = deutsch_schedule(d);
  REQUIRE(s.segments.size() == 5);
  CHECK(s.n_atoms == 3);
  const double ob = d.omega_bar();
  const double expected[] = {pi / d.omega0, 2 * pi / ob, 2 * pi / ob, sqrt2 * pi / d.omega3, pi / d.omega0};
  for (int k = 0; k < 5; ++k) CHECK(s.segments[k].duration_us == doctest::Approx(expected[k]).epsilon(1e-14));
  CHECK(s.total_duration() == doctest::Approx(gate_time(d)).epsilon(1e-13));

  const auto& swap = s.segments[3].transitions;
  REQUIRE(swap.size() == 2);
  CHECK(swap[1].rabi / swap[0].rabi == Complex(-1.0, 0.0));

  // Pulse 2: Omega1 on |0>, i Omega2 on |1>; pulse 3 swaps magnitudes.
  CHECK(s.segments[1].transitions[0].rabi == Complex(d.omega1, 0.0));
  CHECK(s.segments[1].transitions[1].rabi == Complex(0.0, d.omega2));
  CHECK(s.segments[2].transitions[0].rabi == Complex(d.omega2, 0.0));
  CHECK(s.segments[2].transitions[1].rabi == Complex(0.0, d.omega1));

  // Pulse 5 reverses pulse 1 on both controls.
  for (int atom = 0; atom < 2; ++atom) {
    CHECK(s.segments[0].transitions[atom].atom == atom);
    CHECK(s.segments[4].transitions[atom].rabi == -s.segments[0].transitions[atom].rabi);
  }
}

TEST_CASE("Toffoli and CNOT schedules") {
  const DriveParams d = reference_drive();
  const GateSchedule deutsch = deutsch_schedule(d);
  const GateSchedule toffoli = toffoli_schedule(d);
  REQUIRE(toffoli.segments.size() == 3);
  CHECK(toffoli.kind == GateKind::toffoli);
  for (int k : {0, 1, 2}) {
    const int from = k == 0 ? 0 : k + 2;
    CHECK(toffoli.segments[k].duration_us == deutsch.segments[from].duration_us);
    CHECK(toffoli.segments[k].transitions.size() == deutsch.segments[from].transitions.size());
  }

  const GateSchedule cnot = cnot_schedule(d);
  REQUIRE(cnot.segments.size() == 3);
  CHECK(cnot.n_atoms == 2);
  CHECK(cnot.segments[0].duration_us == doctest::Approx(pi / d.omega0));
  CHECK(cnot.segments[1].duration_us == doctest::Approx(sqrt2 * pi / d.omega3));
  CHECK(cnot.segments[2].duration_us == doctest::Approx(pi / d.omega0));
  CHECK(cnot.segments[1].transitions[0].atom == 1);
  CHECK(cnot.segments[2].transitions[0].rabi == Complex(-d.omega0, 0.0));
  CHECK_NOTHROW(cnot.validate());
}

TEST_CASE("target pulses realise the D0 block on |110>, |111>") {
  // Single target atom, no blockade: the controls sit in |1>.
  const DriveParams d = reference_drive();
  const GateSchedule s = deutsch_schedule(d);
  auto target_unitary = [&](const PulseSegment& seg) {
    ComplexMatrix h = ComplexMatrix::Zero(3, 3);
    for (const Transition& tr : seg.transitions) {
      h += 0.5 * tr.rabi * level_projector(Level::r, tr.lower) +
           0.5 * std::conj(tr.rabi) * level_projector(tr.lower, Level::r);
    }
    return matrix_exponential(h, seg.duration_us);
  };
  const ComplexMatrix u2 = target_unitary(s.segments[1]);
  const ComplexMatrix u3 = target_unitary(s.segments[2]);
  const ComplexMatrix u4 = target_unitary(s.segments[3]);

  const double w1 = d.omega1, w2 = d.omega2, wb2 = d.omega_bar() * d.omega_bar();
  // |0> -> [(w2^2 - w1^2)|0> + 2i w1 w2 |1>] / wb^2 after pulse 2.
  CHECK(std::abs(u2(0, 0) - (w2 * w2 - w1 * w1) / wb2) < 1e-12);
  CHECK(std::abs(u2(1, 0) - Complex(0.0, 2 * w1 * w2 / wb2)) < 1e-12);
  CHECK(std::abs(u2(1, 1) - (w1 * w1 - w2 * w2) / wb2) < 1e-12);
  CHECK(std::abs(u2(0, 1) - Complex(0.0, -2 * w1 * w2 / wb2)) < 1e-12);
  CHECK(std::abs(u2(2, 0)) < 1e-12);

  // Independent bright-state construction of each 2pi pulse.
  const ComplexMatrix o2 = oracle::lambda_two_pi_map(s.segments[1].transitions[0].rabi, s.segments[1].transitions[1].rabi);
  CHECK((u2.topLeftCorner(2, 2) - o2).cwiseAbs().maxCoeff() < 1e-12);

  const double sin_t = 7.0 / 25.0, cos_t = 24.0 / 25.0;
  const ComplexMatrix after3 = u3 * u2;
  CHECK(std::abs(after3(0, 0) - sin_t) < 1e-12);
  CHECK(std::abs(after3(1, 0) - Complex(0.0, cos_t)) < 1e-12);
  CHECK(std::abs(after3(0, 1) - Complex(0.0, cos_t)) < 1e-12);
  CHECK(std::abs(after3(1, 1) - sin_t) < 1e-12);

  const ComplexMatrix after4 = u4 * after3;
  CHECK(std::abs(after4(0, 0) - Complex(0.0, cos_t)) < 1e-12);
  CHECK(std::abs(after4(1, 0) - sin_t) < 1e-12);
  CHECK(std::abs(after4(0, 1) - sin_t) < 1e-12);
  CHECK(std::abs(after4(1, 1) - Complex(0.0, cos_t)) < 1e-12);
}

TEST_CASE("residue phase and phase matching") {
  const double ob32 = mhz_to_angular(0.32);
  const double ob64 = mhz_to_angular(0.64);
  const DriveParams d32 = DriveParams::from_ratio(mhz_to_angular(10), ob32, 2.0);
  const DriveParams d64 = DriveParams::from_ratio(mhz_to_angular(10), ob64, 2.0);
  CHECK(phase_phi(d32, kV) == doctest::Approx(4 * pi).epsilon(0.01));
  CHECK(phase_phi(d64, kV) == doctest::Approx(2 * pi).epsilon(0.01));
  CHECK(phase_phi(d32, kV) > 0.0);
  CHECK(phase_phi(d64, kV) == doctest::Approx(phase_phi(d32, kV) / 2.0).epsilon(1e-13));
  CHECK(phase_phi(DriveParams::from_ratio(1.0, 2.0 * ob32, 2.0), kV) ==
        doctest::Approx(0.5 * phase_phi(DriveParams::from_ratio(1.0, ob32, 2.0), kV)).epsilon(1e-14));

  const GateSchedule s = deutsch_schedule(reference_drive());
  CHECK(residue_phase(s, kV / 64.0) == doctest::Approx(phase_phi(reference_drive(), kV)).epsilon(1e-13));
  CHECK(residue_phase(toffoli_schedule(reference_drive()), kV / 64.0) ==
        doctest::Approx(-s.segments[3].duration_us * kV / 64.0));

  CHECK(angular_to_mhz(solve_phase_matching(1, kV)) == doctest::Approx(0.64).epsilon(0.01));
  CHECK(angular_to_mhz(solve_phase_matching(2, kV)) == doctest::Approx(0.32).epsilon(0.01));
  for (int n = 1; n <= 6; ++n) {
    const DriveParams m = DriveParams::from_ratio(mhz_to_angular(10), solve_phase_matching(n, kV), 2.0);
    CHECK(std::abs(phase_phi(m, kV) - 2 * pi * n) < 1e-10);
  }
  CHECK_THROWS_AS(solve_phase_matching(1, 0.0), DomainError);
  CHECK_THROWS_AS(solve_phase_matching(0, kV), DomainError);
}

TEST_CASE("drive parameter validation") {
  CHECK_THROWS_AS(DriveParams::from_ratio(0.0, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(DriveParams::from_ratio(1.0, 1.0, -2.0), DomainError);
  const DriveParams d = reference_drive();
  CHECK(d.omega_bar() * d.omega_bar() == doctest::Approx(d.omega1 * d.omega1 + d.omega2 * d.omega2).epsilon(1e-15));
  CHECK(d.omega3 == doctest::Approx(d.omega_bar() / sqrt2));
  const DriveParams t = DriveParams::from_theta(1.0, 2.0, pi / 2);
  CHECK(t.omega1 == doctest::Approx(t.omega2).epsilon(1e-10));
}
