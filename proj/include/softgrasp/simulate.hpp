#pragma once

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "softgrasp/grasp_config.hpp"

namespace softgrasp {

/// Fixed-step integration controls. damping is an artificial viscous term
/// (N*m*s/rad, default 0): the model itself is undamped, so convergence to a
/// rest angle only happens in simulation when this is positive.
struct SimParams {
  double dt = 1e-4;
  double t_max = 1.0;
  double damping = 0.0;
  double theta0 = 0.0;
  double theta_dot0 = 0.0;

  void validate() const;
};

struct TrajectorySample {
  double t = 0.0;
  SystemState state;
  ContactForces forces;
  double energy = 0.0;  // kinetic + potential, J
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
};

enum class SimEventKind {
  slip_onset,
  contact_loss,
  converged,
  diverged,
};

const char* to_string(SimEventKind kind);

struct SimEvent {
  SimEventKind kind;
  double t = 0.0;
  double theta = 0.0;
};

/// E = 1/2 I theta_dot^2 + V(theta)
double total_energy(const GraspConfig& config, const SystemState& state);

/// One classical RK4 step of I theta_ddot = torque(theta) - damping * theta_dot.
/// dt may be negative (backward integration).
SystemState rk4_step(const GraspConfig& config, const SystemState& state,
                     double dt, double damping);

/// Fixed-step RK4 from (theta0, theta_dot0). Produces floor(t_max/dt)+1
/// samples unless the state goes non-finite, in which case the first
/// non-finite sample terminates the trajectory early.
Trajectory integrate(const GraspConfig& config, const SimParams& params);

/// Scans a trajectory for slip onset (first coulomb_margin < 0), contact
/// loss (first f_n <= 0), convergence (|theta - theta_ref| < 1e-4 rad and
/// |theta_dot| < 1e-4 rad/s sustained for 0.5 s, theta_ref in {0, +-theta_r})
/// and divergence (non-finite state). Events come back ordered by time.
std::vector<SimEvent> detect_events(const GraspConfig& config,
                                    const Trajectory& traj);

/// Header "t_s,theta_rad,theta_dot_rad_s,f_n_N,f_t_N,energy_J".
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

nlohmann::json events_to_json(const std::vector<SimEvent>& events);

}  // namespace softgrasp
