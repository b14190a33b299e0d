#include "polyflam/groups/contribution.hpp"

#include "polyflam/common/error.hpp"

namespace polyflam::groups {

GcProperties estimate_properties(const GroupComposition& comp, const GroupTable& table,
                                 GcForm form) {
    if (comp.counts.empty()) throw UnknownGroup("empty composition");

    GcProperties props;
    if (form == GcForm::RatioOfSums) {
        double mass = 0.0, psi = 0.0, omega = 0.0, chi = 0.0;
        for (const auto& [id, n] : comp.counts) {
            const MolarGroup& g = table.by_id(id);
            const double count = static_cast<double>(n);
            mass += count * g.molar_mass;
            psi += count * g.psi;
            omega += count * g.omega;
            chi += count * g.chi;
        }
        props.eta_c = psi / mass;
        props.h_c = omega / mass;
        props.mu = chi / mass;
    } else {
        for (const auto& [id, n] : comp.counts) {
            (void)n;
            const MolarGroup& g = table.by_id(id);
            props.eta_c += g.psi / g.molar_mass;
            props.h_c += g.omega / g.molar_mass;
            props.mu += g.chi / g.molar_mass;
        }
    }
    return props;
}

bool filter_physical(const GcProperties& props, double dT) {
    return props.mu < 1.0 && props.h_c < 50.0 && props.eta_c > 0.0 && dT > 1.0 && dT < 300.0;
}

}  // namespace polyflam::groups
