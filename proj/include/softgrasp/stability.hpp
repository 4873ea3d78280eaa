#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <vector>

#include <json.hpp>

#include "softgrasp/grasp_config.hpp"

namespace softgrasp {

/// Linearization of the rotational dynamics about theta = 0. The system
/// matrix is [[0, 1], [a21, 0]]; a21 = 2 r (k_n delta_n - k_t r) / I is the
/// only nontrivial entry.
struct LinearizedSystem {
  double a21 = 0.0;  // 1/s^2
};

/// Eigenvalues of the linearized system: lambda2 = -lambda1, either both
/// purely real or both purely imaginary.
struct EigenPair {
  std::complex<double> lambda1;
  std::complex<double> lambda2;

  bool purely_real() const { return lambda1.imag() == 0.0; }
  bool purely_imaginary() const { return lambda1.real() == 0.0; }
};

LinearizedSystem linearize(const GraspConfig& config);
EigenPair eigenvalues(const LinearizedSystem& linsys);

/// Instability threshold preload f_p^i = k_t * r. The zero-rotation
/// equilibrium is dynamically stable iff preload_force(config) < this.
double stability_threshold(const GraspConfig& config);

/// Non-trivial equilibrium angle in (0, pi), present when the rest-condition
/// ratio (k_n delta_n - k_n r) / (k_t r - k_n r) has magnitude < 1.
/// Ratio magnitudes within 1e-12 of 1 count as out of range.
std::optional<double> rest_angle(const GraspConfig& config);

/// Smallest strictly positive rotation at which |f_t| = mu f_n, from the
/// tangent half-angle solution of a sin(theta) + b cos(theta) = c with
/// a = k_t r, b = -mu k_n r, c = mu f_p - mu k_n r. Roots are only accepted
/// while contact holds (f_n >= 0). Requires mu > 0.
std::optional<double> slip_angle(const GraspConfig& config);

enum class SlipPreloadStatus {
  found,
  no_crossing,
  rest_angle_undefined,
  not_computed,
};

const char* to_string(SlipPreloadStatus status);

struct SlipPreloadResult {
  std::optional<double> preload;
  SlipPreloadStatus status = SlipPreloadStatus::not_computed;
};

/// Smallest f_p in (f_p^i, f_p_max] whose rest angle meets or exceeds the
/// slip angle, located by bisection to 1e-4 N. Preload sweeps vary delta_n
/// with the stiffnesses held fixed.
SlipPreloadResult slip_preload(const GraspConfig& config, double f_p_max);

/// Everything the analysis can say about one grasp, bundled so the CLI can
/// emit a single document.
struct StabilityReport {
  double f_p = 0.0;
  double f_p_i = 0.0;
  bool stable = false;
  EigenPair eigenvalues;
  std::optional<double> rest_angle;
  std::optional<double> slip_angle;
  std::optional<double> slip_preload;
  SlipPreloadStatus slip_preload_status = SlipPreloadStatus::not_computed;
  std::optional<bool> slips_at_rest;  // theta_r >= theta_f, when both exist
};

/// Full report. The slip-preload search range defaults to 2 (k_n + k_t) r,
/// which covers the whole rest-angle family for either stiffness ordering.
StabilityReport analyze(const GraspConfig& config,
                        std::optional<double> f_p_max = std::nullopt);

nlohmann::json report_to_json(const StabilityReport& report);

/// One sample of the rest-angle progression: theta_r is 0 at or below f_p^i,
/// the Eq.-style arccos root above it, and absent once the rest condition
/// fails (the object flips instead of settling).
struct RestCurvePoint {
  double f_p = 0.0;
  std::optional<double> theta_r;
};

using RestAngleCurve = std::vector<RestCurvePoint>;

/// steps+1 evenly spaced samples over [f_p_lo, f_p_hi]. The parallel kernel
/// and the serial reference compute identical points; the reference exists
/// for testing and benchmarking.
RestAngleCurve rest_angle_curve(const GraspConfig& config, double f_p_lo,
                                double f_p_hi, int steps);
RestAngleCurve rest_angle_curve_serial(const GraspConfig& config, double f_p_lo,
                                       double f_p_hi, int steps);

/// Two columns, header "f_p_N,theta_r_rad"; absent angles emit an empty cell.
void write_rest_curve_csv(std::ostream& out, const RestAngleCurve& curve);

}  // namespace softgrasp
