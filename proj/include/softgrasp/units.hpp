#pragma once

#include <numbers>

// All library internals are SI (m, N, kg, rad, Pa). Anything arriving in
// mm / bar / deg is converted here, at the boundary, and nowhere else.
namespace softgrasp::units {

inline constexpr double pa_per_bar = 1e5;

constexpr double bar_to_pa(double bar) { return bar * pa_per_bar; }
constexpr double pa_to_bar(double pa) { return pa / pa_per_bar; }

constexpr double mm_to_m(double mm) { return mm * 1e-3; }
constexpr double m_to_mm(double m) { return m * 1e3; }

constexpr double cm2_to_m2(double cm2) { return cm2 * 1e-4; }

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

// Stiffness quoted per millimetre, as vendor datasheets tend to do.
constexpr double n_per_mm_to_n_per_m(double k) { return k * 1e3; }

// Rotational inertia in kg*mm^2.
constexpr double kg_mm2_to_kg_m2(double i) { return i * 1e-6; }

}  // namespace softgrasp::units
