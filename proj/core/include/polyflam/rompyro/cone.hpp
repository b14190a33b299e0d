#pragma once

#include <vector>

#include "polyflam/polygen/record.hpp"

namespace polyflam::rompyro {

// Solver-side material description, SI units throughout: rho kg/m3,
// kappa W/(m*K), c_p J/(kg*K), h_c J/kg, mu dimensionless, dT K, T_p K.
struct MaterialInput {
    double rho = 0.0;
    double kappa = 0.0;
    double c_p = 0.0;
    double h_c = 0.0;
    double mu = 0.0;
    double dT = 0.0;
    double T_p = 0.0;
};

// Dataset units (g/cm3, cal/(g*C), kJ/g) -> SI. Requires thermophysical,
// dT and T_p to be present; throws MissingField otherwise.
MaterialInput material_from_record(const polygen::PolymerRecord& record);

// First-order Arrhenius parameters, derived so that dY/dt = -A*Y*exp(-E/(R*T))
// peaks at T = T_p under constant heating at the reference rate:
//   r_p = 2*beta*(1-mu)/dT,  E = e*r_p*R*T_p^2/beta,  A = e*r_p*exp(E/(R*T_p)).
struct Kinetics {
    double A = 0.0;  // 1/s
    double E = 0.0;  // J/mol
};

Kinetics derive_kinetics(double T_p, double dT, double mu, double heating_rate);

enum class IgnitionCriterion {
    FuelMassFlux,        // ignition when m'' >= m_crit
    SurfaceTemperature,  // ignition when T_s >= T_ig_crit
};

struct SimConfig {
    double q_ext = 50000.0;       // W/m2 external heater flux
    double q_flame = 25000.0;     // W/m2 step added after ignition
    double t_max = 600.0;         // s
    double thickness = 0.006;     // m
    int n_cells = 60;
    double dt = 0.05;             // s
    double emissivity = 0.95;
    double h_conv = 10.0;         // W/(m2*K)
    double T_amb = 293.15;        // K
    double heating_rate_ref = 5.0 / 60.0;  // K/s, kinetics derivation reference
    double m_crit = 0.0025;       // kg/(m2*s) ignition fuel flux
    IgnitionCriterion criterion = IgnitionCriterion::FuelMassFlux;
    double T_ig_crit = 640.0;     // K, used by the surface-temperature criterion
    double heat_of_pyrolysis = 0.0;  // J/kg endothermic sink, 0 by default
    bool record_hrr = true;
};

struct ConeResult {
    double t_ig = 0.0;            // s; equals t_max when not ignited
    bool ignited = false;
    std::vector<double> hrr;      // kW/m2 per step (when record_hrr)
    double hrr_dt = 0.0;          // s between hrr samples
    double phrr = 0.0;            // kW/m2
    double residual_mass_fraction = 1.0;
    double volatilized_mass = 0.0;  // kg/m2, time-integrated fuel flux
};

// 1D transient conduction through the slab thickness with per-cell
// first-order pyrolysis. Front face absorbs
//   eps*(q_ext + q_flame*[ignited]) - eps*sigma*(T_s^4 - T_amb^4) - h*(T_s - T_amb),
// back face is adiabatic. Diffusion is implicit (tridiagonal solve); the
// surface energy balance is resolved each step by a small Newton iteration
// against conduction into the first cell. HRR(t) = h_c * m''(t).
ConeResult simulate_cone(const MaterialInput& mat, const SimConfig& cfg);

// Labels records in place: t_ig, phrr, ignitable := (t_ig < t_max). Failures
// land in each record's error field; the batch never aborts. Order preserved
// regardless of worker count.
void batch_simulate(std::vector<polygen::PolymerRecord>& records, const SimConfig& cfg,
                    int workers = 1);

}  // namespace polyflam::rompyro
