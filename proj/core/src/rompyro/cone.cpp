#include <cmath>
#include <string>
#include <vector>

#include "polyflam/common/error.hpp"
#include "polyflam/rompyro/cone.hpp"

namespace polyflam::rompyro {

namespace {

constexpr double kStefanBoltzmann = 5.670374419e-8;  // W/(m2*K4)
constexpr double kGasConstant = 8.314;

void validate(const MaterialInput& mat, const SimConfig& cfg) {
    if (!(mat.rho > 0.0)) throw DomainError("rho must be positive");
    if (!(mat.kappa > 0.0)) throw DomainError("kappa must be positive");
    if (!(mat.c_p > 0.0)) throw DomainError("c_p must be positive");
    if (!(mat.h_c >= 0.0)) throw DomainError("h_c must be nonnegative");
    if (!(mat.mu >= 0.0 && mat.mu <= 1.0)) throw DomainError("mu must be in [0, 1]");
    if (!(mat.dT > 0.0)) throw DomainError("dT must be positive");
    if (!(mat.T_p > 0.0)) throw DomainError("T_p must be positive");
    if (!(cfg.q_ext >= 0.0)) throw DomainError("q_ext must be nonnegative");
    if (!(cfg.q_flame >= 0.0)) throw DomainError("q_flame must be nonnegative");
    if (!(cfg.t_max > 0.0)) throw DomainError("t_max must be positive");
    if (!(cfg.thickness > 0.0)) throw DomainError("thickness must be positive");
    if (cfg.n_cells < 10) throw DomainError("n_cells must be >= 10");
    if (!(cfg.dt > 0.0)) throw DomainError("dt must be positive");
    if (!(cfg.emissivity > 0.0 && cfg.emissivity <= 1.0)) {
        throw DomainError("emissivity must be in (0, 1]");
    }
    if (!(cfg.h_conv >= 0.0)) throw DomainError("h_conv must be nonnegative");
    if (!(cfg.T_amb > 0.0)) throw DomainError("T_amb must be positive");
    if (!(cfg.heating_rate_ref > 0.0)) throw DomainError("heating_rate_ref must be positive");
    if (!(cfg.m_crit > 0.0)) throw DomainError("m_crit must be positive");
}

// Face temperature balancing absorbed flux against conduction into the first
// cell center: eps*q - eps*sigma*(Ts^4 - Tamb^4) - h*(Ts - Tamb) =
// 2*kappa*(Ts - T0)/dx. F is strictly decreasing in Ts, so Newton from any
// point above the root converges; we polish to 1e-9 K.
double solve_surface_temperature(double q_inc, double T0, double dx, double kappa,
                                 double emissivity, double h_conv, double T_amb) {
    const double cond = 2.0 * kappa / dx;
    double Ts = std::max(T0, T_amb);
    for (int it = 0; it < 60; ++it) {
        const double rad = emissivity * kStefanBoltzmann * (Ts * Ts * Ts * Ts -
                                                            T_amb * T_amb * T_amb * T_amb);
        const double f = emissivity * q_inc - rad - h_conv * (Ts - T_amb) - cond * (Ts - T0);
        const double df = -4.0 * emissivity * kStefanBoltzmann * Ts * Ts * Ts - h_conv - cond;
        const double step = f / df;
        Ts -= step;
        if (std::abs(step) < 1e-9) break;
    }
    return Ts;
}

// Thomas algorithm; diag/upper/lower are overwritten.
void solve_tridiagonal(std::vector<double>& lower, std::vector<double>& diag,
                       std::vector<double>& upper, std::vector<double>& rhs,
                       std::vector<double>& x) {
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double m = lower[i] / diag[i - 1];
        diag[i] -= m * upper[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    x[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) {
        x[i - 1] = (rhs[i - 1] - upper[i - 1] * x[i]) / diag[i - 1];
    }
}

}  // namespace

MaterialInput material_from_record(const polygen::PolymerRecord& record) {
    if (!record.thermophysical) {
        throw MissingField("record '" + record.canonical_smiles + "' has no thermophysical data");
    }
    if (!record.dT || !record.T_p) {
        throw MissingField("record '" + record.canonical_smiles + "' has no surrogate dT/T_p");
    }
    MaterialInput mat;
    mat.rho = record.thermophysical->rho * 1000.0;       // g/cm3 -> kg/m3
    mat.kappa = record.thermophysical->kappa;            // already W/(m*K)
    mat.c_p = record.thermophysical->c_p * 4186.8;       // cal/(g*C) -> J/(kg*K)
    mat.h_c = record.gc.h_c * 1e6;                       // kJ/g -> J/kg
    mat.mu = record.gc.mu;
    mat.dT = *record.dT;
    mat.T_p = *record.T_p;
    return mat;
}

ConeResult simulate_cone(const MaterialInput& mat, const SimConfig& cfg) {
    validate(mat, cfg);
    const Kinetics kin = derive_kinetics(mat.T_p, mat.dT, mat.mu, cfg.heating_rate_ref);

    const std::size_t n = static_cast<std::size_t>(cfg.n_cells);
    const double dx = cfg.thickness / static_cast<double>(cfg.n_cells);
    const double rho_c = mat.rho * mat.c_p;
    const double r = mat.kappa * cfg.dt / (rho_c * dx * dx);
    const double fuel_density = mat.rho * (1.0 - mat.mu);  // kg/m3 of volatilizable mass

    std::vector<double> T(n, cfg.T_amb), Y(n, 1.0);
    std::vector<double> lower(n), diag(n), upper(n), rhs(n), T_new(n);
    std::vector<double> sink(n, 0.0);  // lagged endothermic term, W/m3

    ConeResult result;
    result.hrr_dt = cfg.dt;
    const auto steps = static_cast<std::size_t>(std::llround(cfg.t_max / cfg.dt));
    if (cfg.record_hrr) result.hrr.reserve(steps);

    bool ignited = false;
    double t_ig = cfg.t_max;
    double phrr = 0.0;
    double volatilized = 0.0;

    for (std::size_t s = 1; s <= steps; ++s) {
        const double q_inc = cfg.q_ext + (ignited ? cfg.q_flame : 0.0);
        const double Ts = solve_surface_temperature(q_inc, T[0], dx, mat.kappa, cfg.emissivity,
                                                    cfg.h_conv, cfg.T_amb);
        const double q_net = 2.0 * mat.kappa * (Ts - T[0]) / dx;

        // Implicit conduction step.
        for (std::size_t i = 0; i < n; ++i) {
            lower[i] = -r;
            upper[i] = -r;
            diag[i] = 1.0 + 2.0 * r;
            rhs[i] = T[i] - cfg.dt * sink[i] / rho_c;
        }
        diag[0] = 1.0 + r;
        rhs[0] += cfg.dt * q_net / (rho_c * dx);
        diag[n - 1] = 1.0 + r;
        solve_tridiagonal(lower, diag, upper, rhs, T_new);
        T.swap(T_new);

        // First-order pyrolysis, exact in Y for the frozen temperature.
        double converted = 0.0;  // sum of Y decrements
        for (std::size_t i = 0; i < n; ++i) {
            if (kin.A <= 0.0 || Y[i] <= 0.0) {
                sink[i] = 0.0;
                continue;
            }
            const double k = kin.A * std::exp(-kin.E / (kGasConstant * T[i]));
            const double y_new = Y[i] * std::exp(-k * cfg.dt);
            const double delta = Y[i] - y_new;
            converted += delta;
            sink[i] = cfg.heat_of_pyrolysis * fuel_density * delta / cfg.dt;
            Y[i] = y_new;
        }

        const double mdot = fuel_density * dx * converted / cfg.dt;  // kg/(m2*s)
        volatilized += fuel_density * dx * converted;
        const double hrr = mat.h_c * mdot / 1000.0;  // kW/m2
        if (hrr > phrr) phrr = hrr;
        if (cfg.record_hrr) result.hrr.push_back(hrr);

        if (!ignited) {
            const bool trip = cfg.criterion == IgnitionCriterion::FuelMassFlux
                                  ? mdot >= cfg.m_crit
                                  : Ts >= cfg.T_ig_crit;
            if (trip) {
                ignited = true;
                t_ig = static_cast<double>(s) * cfg.dt;
            }
        }

        for (std::size_t i = 0; i < n; ++i) {
            if (!std::isfinite(T[i]) || T[i] <= 0.0) {
                throw NumericalInstability("temperature field invalid at step " +
                                           std::to_string(s) + ", cell " + std::to_string(i));
            }
        }
    }

    result.ignited = ignited;
    result.t_ig = ignited ? t_ig : cfg.t_max;
    result.phrr = phrr;
    result.volatilized_mass = volatilized;
    double residual = 0.0;
    for (const double y : Y) residual += mat.mu + (1.0 - mat.mu) * y;
    result.residual_mass_fraction = residual / static_cast<double>(n);
    return result;
}

}  // namespace polyflam::rompyro
