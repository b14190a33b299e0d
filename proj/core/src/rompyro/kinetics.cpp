#include <cmath>

#include "polyflam/common/error.hpp"
#include "polyflam/rompyro/cone.hpp"

namespace polyflam::rompyro {

namespace {
constexpr double kGasConstant = 8.314;  // J/(mol*K)
}

Kinetics derive_kinetics(double T_p, double dT, double mu, double heating_rate) {
    if (!(T_p > 0.0)) throw DomainError("T_p must be positive");
    if (!(dT > 0.0)) throw DomainError("dT must be positive");
    if (!(mu >= 0.0 && mu <= 1.0)) throw DomainError("mu must be in [0, 1]");
    if (!(heating_rate > 0.0)) throw DomainError("heating_rate must be positive");

    const double e = std::exp(1.0);
    const double r_p = 2.0 * heating_rate * (1.0 - mu) / dT;  // peak reaction rate, 1/s
    Kinetics k;
    k.E = e * r_p * kGasConstant * T_p * T_p / heating_rate;
    k.A = e * r_p * std::exp(k.E / (kGasConstant * T_p));
    return k;
}

}  // namespace polyflam::rompyro
