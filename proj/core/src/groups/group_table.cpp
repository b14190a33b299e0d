#include "polyflam/groups/group_table.hpp"

#include "polyflam/chem/smiles.hpp"
#include "polyflam/common/csv.hpp"
#include "polyflam/common/error.hpp"
#include "polyflam/common/numio.hpp"

namespace polyflam::groups {

GroupTable::GroupTable(std::vector<MolarGroup> groups, std::string source)
    : groups_(std::move(groups)), source_(std::move(source)) {
    for (std::size_t i = 0; i < groups_.size(); ++i) {
        const auto [it, inserted] = index_.emplace(groups_[i].id, i);
        (void)it;
        if (!inserted) throw DuplicateId("duplicate group id '" + groups_[i].id + "'");
    }
}

GroupTable GroupTable::load(const std::filesystem::path& path) {
    const CsvTable csv = read_csv(path);
    const std::string ctx = "group table " + path.string();
    const int c_id = csv.require("id", ctx);
    const int c_name = csv.require("name", ctx);
    const int c_frag = csv.require("fragment_smiles", ctx);
    const int c_mass = csv.require("molar_mass", ctx);
    const int c_psi = csv.require("psi", ctx);
    const int c_omega = csv.require("omega", ctx);
    const int c_chi = csv.require("chi", ctx);
    const int c_val = csv.require("valence", ctx);

    std::vector<MolarGroup> groups;
    groups.reserve(csv.rows.size());
    for (std::size_t r = 0; r < csv.rows.size(); ++r) {
        const std::string row_ctx = ctx + " row " + std::to_string(r + 2);
        MolarGroup group;
        group.id = csv.at(r, c_id);
        group.name = csv.at(r, c_name);
        group.fragment_smiles = csv.at(r, c_frag);
        group.molar_mass = parse_double(csv.at(r, c_mass), row_ctx + " molar_mass");
        group.psi = parse_double(csv.at(r, c_psi), row_ctx + " psi");
        group.omega = parse_double(csv.at(r, c_omega), row_ctx + " omega");
        group.chi = parse_double(csv.at(r, c_chi), row_ctx + " chi");
        group.valence = static_cast<int>(parse_int(csv.at(r, c_val), row_ctx + " valence"));

        if (group.id.empty()) throw SchemaError(row_ctx + ": empty group id");
        if (group.molar_mass <= 0.0) {
            throw SchemaError(row_ctx + ": molar_mass must be positive");
        }
        try {
            const auto frag = chem::parse_smiles(group.fragment_smiles);
            const auto wildcards = frag.wildcard_indices();
            if (static_cast<int>(wildcards.size()) != group.valence) {
                throw FragmentError(row_ctx + ": fragment '" + group.fragment_smiles + "' has " +
                                    std::to_string(wildcards.size()) + " wildcards, valence is " +
                                    std::to_string(group.valence));
            }
        } catch (const ParseError& e) {
            throw FragmentError(row_ctx + ": fragment '" + group.fragment_smiles +
                                "' does not parse: " + e.what());
        }
        groups.push_back(std::move(group));
    }
    return GroupTable(std::move(groups), path.filename().string());
}

const MolarGroup& GroupTable::by_id(const std::string& id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) throw UnknownGroup("unknown group id '" + id + "'");
    return groups_[it->second];
}

}  // namespace polyflam::groups
