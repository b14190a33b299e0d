#include "polyflam/polygen/generate.hpp"

#include <set>

#include "polyflam/chem/assemble.hpp"
#include "polyflam/chem/smiles.hpp"
#include "polyflam/common/error.hpp"
#include "polyflam/polygen/enumerate.hpp"

namespace polyflam::polygen {

std::vector<PolymerRecord> generate_polymers(const groups::GroupTable& table, int max_size) {
    for (const auto& group : table.groups()) {
        if (group.valence != 2) {
            throw BadValence("group '" + group.id + "' has valence " +
                             std::to_string(group.valence) + "; the generator requires 2");
        }
    }

    const auto compositions = enumerate_compositions(table, max_size);
    std::vector<PolymerRecord> records;
    records.reserve(compositions.size());
    std::set<std::string> seen;

    for (const auto& comp : compositions) {
        // Fragment list in lexicographic id order; the composition map is
        // already sorted by id.
        std::vector<chem::MolecularGraph> fragments;
        for (const auto& [id, count] : comp.counts) {
            const auto frag = chem::parse_smiles(table.by_id(id).fragment_smiles);
            for (int i = 0; i < count; ++i) fragments.push_back(frag);
        }
        PolymerRecord record;
        record.canonical_smiles = chem::assemble_polymer(fragments);
        if (!seen.insert(record.canonical_smiles).second) continue;
        record.composition = comp;
        record.gc = groups::estimate_properties(comp, table);
        record.provenance = Provenance::Synthetic;
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<PolymerRecord> apply_filter(const std::vector<PolymerRecord>& records) {
    FilterSummary summary;
    return apply_filter(records, summary);
}

std::vector<PolymerRecord> apply_filter(const std::vector<PolymerRecord>& records,
                                        FilterSummary& summary) {
    summary = FilterSummary{};
    std::vector<PolymerRecord> kept;
    kept.reserve(records.size());
    for (const auto& record : records) {
        if (!record.dT) {
            throw MissingField("record '" + record.canonical_smiles +
                               "' has no dT; run the surrogate stage first");
        }
        const double dT = *record.dT;
        bool pass = true;
        if (!(record.gc.mu < 1.0)) {
            ++summary.dropped_mu;
            pass = false;
        }
        if (!(record.gc.h_c < 50.0)) {
            ++summary.dropped_h_c;
            pass = false;
        }
        if (!(record.gc.eta_c > 0.0)) {
            ++summary.dropped_eta_c;
            pass = false;
        }
        if (!(dT > 1.0 && dT < 300.0)) {
            ++summary.dropped_dT;
            pass = false;
        }
        if (pass) kept.push_back(record);
    }
    summary.kept = kept.size();
    return kept;
}

}  // namespace polyflam::polygen
