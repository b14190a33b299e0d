#include <string>

#include "polyflam/common/error.hpp"
#include "polyflam/common/parallel.hpp"
#include "polyflam/rompyro/cone.hpp"

namespace polyflam::rompyro {

void batch_simulate(std::vector<polygen::PolymerRecord>& records, const SimConfig& cfg,
                    int workers) {
    SimConfig run_cfg = cfg;
    run_cfg.record_hrr = false;

    parallel_for(records.size(), workers, [&](std::size_t i) {
        auto& record = records[i];
        try {
            // Records carry mu in [0, 1); reject the inert boundary here so a
            // bad record reports instead of silently producing a zero label.
            if (!(record.gc.mu >= 0.0 && record.gc.mu < 1.0)) {
                throw DomainError("mu = " + std::to_string(record.gc.mu) + " outside [0, 1)");
            }
            const MaterialInput mat = material_from_record(record);
            const ConeResult result = simulate_cone(mat, run_cfg);
            record.labels = polygen::ConeLabels{result.t_ig, result.phrr,
                                                result.t_ig < run_cfg.t_max};
            record.error.clear();
        } catch (const Error& e) {
            record.labels.reset();
            record.error = e.what();
        }
    });
}

}  // namespace polyflam::rompyro
