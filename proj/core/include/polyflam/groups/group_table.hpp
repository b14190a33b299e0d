#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace polyflam::groups {

// A divalent molecular fragment with tabulated molar mass and property
// contributions. Units: molar_mass g/mol, psi J/(mol*K), omega kJ/mol,
// chi g/mol.
struct MolarGroup {
    std::string id;
    std::string name;
    std::string fragment_smiles;  // exactly `valence` wildcards
    double molar_mass = 0.0;
    double psi = 0.0;
    double omega = 0.0;
    double chi = 0.0;
    int valence = 2;
};

class GroupTable {
public:
    GroupTable() = default;
    GroupTable(std::vector<MolarGroup> groups, std::string source);

    // CSV schema (header required):
    //   id,name,fragment_smiles,molar_mass,psi,omega,chi,valence
    // UTF-8, '.' decimal separator. Fragments must parse and carry exactly
    // `valence` wildcards.
    static GroupTable load(const std::filesystem::path& path);

    std::size_t size() const { return groups_.size(); }
    const std::vector<MolarGroup>& groups() const { return groups_; }
    const MolarGroup& at(std::size_t i) const { return groups_[i]; }
    bool has(const std::string& id) const { return index_.count(id) > 0; }
    // Throws UnknownGroup.
    const MolarGroup& by_id(const std::string& id) const;

    const std::string& source() const { return source_; }

private:
    std::vector<MolarGroup> groups_;
    std::map<std::string, std::size_t> index_;
    std::string source_;
};

}  // namespace polyflam::groups
