#pragma once

#include <optional>
#include <string_view>

#include "softgrasp/grasp_config.hpp"

namespace softgrasp {

/// V(theta) = k_n (delta_n - r (1 - cos theta))^2 + k_t (r sin theta)^2
double potential_energy(const GraspConfig& config, double theta);

/// Generalized torque so that I * theta_ddot = torque(theta); equals -dV/dtheta.
double torque(const GraspConfig& config, double theta);

/// f_n = f_p - k_n r (1 - cos theta), f_t = k_t r sin theta.
ContactForces contact_forces(const GraspConfig& config, double theta);

/// f_p = k_n * delta_n
double preload_force(const GraspConfig& config);

/// mu * f_n - |f_t|; negative means slip, non-negative means stick.
double coulomb_margin(const ContactForces& forces, double mu);

enum class Shape {
  solid_cylinder_axial,
  solid_cylinder_transverse,
  solid_sphere,
};

/// Accepts "solid-cylinder-axial" | "solid-cylinder-transverse" | "solid-sphere".
Shape shape_from_name(std::string_view name);

/// Standard rigid-body formulas; h required for the transverse cylinder.
double inertia_of(Shape shape, double mass, double r,
                  std::optional<double> h = std::nullopt);

}  // namespace softgrasp
