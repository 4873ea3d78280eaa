#pragma once

#include <json.hpp>

#include "softgrasp/errors.hpp"

namespace softgrasp {

/// Parameters of one modeled precision grasp: two bulk finger stiffnesses,
/// the preload spring displacement, contact radius, rotational inertia and
/// the Coulomb friction coefficient. The preload force f_p = k_n * delta_n
/// is always derived from delta_n, never stored.
struct GraspConfig {
  double k_n = 0.0;      // normal-direction bulk stiffness, N/m
  double k_t = 0.0;      // transverse-direction bulk stiffness, N/m
  double delta_n = 0.0;  // preload spring displacement, m
  double r = 0.0;        // contact radius from the center of mass, m
  double inertia = 0.0;  // rotational inertia about the grasp axis, kg*m^2
  double mu = 0.0;       // Coulomb friction coefficient

  /// Throws Error{invalid_field} naming the offending field.
  void validate() const;

  /// Same springs and geometry, delta_n chosen so that preload_force == f_p.
  GraspConfig with_preload(double f_p) const;
};

struct SystemState {
  double theta = 0.0;      // rotation angle, rad
  double theta_dot = 0.0;  // angular velocity, rad/s
};

/// Contact forces at a rotation angle. f_n may come out negative: that is
/// the model flagging loss of contact, not an error; callers decide.
struct ContactForces {
  double f_n = 0.0;  // normal force, N
  double f_t = 0.0;  // transverse (friction-loaded) force, N
};

/// Strict JSON schema: exactly the six field names, unknown fields rejected.
GraspConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const GraspConfig& config);

}  // namespace softgrasp
