#pragma once

#include <map>
#include <string>

#include "polyflam/groups/group_table.hpp"

namespace polyflam::groups {

// Multiset of groups forming a repeat unit: group id -> occurrence count.
struct GroupComposition {
    std::map<std::string, int> counts;

    int distinct() const { return static_cast<int>(counts.size()); }
    int total() const {
        int t = 0;
        for (const auto& [id, n] : counts) t += n;
        return t;
    }

    bool operator==(const GroupComposition&) const = default;
};

// eta_c J/(g*K), h_c kJ/g, mu dimensionless char fraction. mu may exceed 1
// for nonphysical compositions; the filter rejects those.
struct GcProperties {
    double eta_c = 0.0;
    double h_c = 0.0;
    double mu = 0.0;
};

enum class GcForm {
    // (sum_i N_i*Psi_i) / (sum_i N_i*M_i): the mass-weighted group
    // contribution relationship. Default.
    RatioOfSums,
    // sum_i (N_i*Psi_i) / (N_i*M_i): the counts cancel termwise. Kept only
    // for side-by-side comparison.
    TermwiseLiteral,
};

// Throws UnknownGroup when a composition references an id missing from the
// table.
GcProperties estimate_properties(const GroupComposition& comp, const GroupTable& table,
                                 GcForm form = GcForm::RatioOfSums);

// true iff mu < 1 and h_c < 50 kJ/g and eta_c > 0 and 1 K < dT < 300 K; all
// four comparisons strict.
bool filter_physical(const GcProperties& props, double dT);

}  // namespace polyflam::groups
