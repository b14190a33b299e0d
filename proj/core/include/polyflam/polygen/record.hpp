#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "polyflam/groups/contribution.hpp"

namespace polyflam::polygen {

// Units follow the dataset convention: rho g/cm3, kappa W/(m*K),
// c_p cal/(g*C). Conversion to SI happens at the simulator boundary.
struct Thermophysical {
    double rho = 0.0;
    double kappa = 0.0;
    double c_p = 0.0;
};

struct ConeLabels {
    double t_ig = 0.0;   // s
    double phrr = 0.0;   // kW/m2
    bool ignitable = false;
};

enum class Provenance { Synthetic, Experimental };

struct PolymerRecord {
    std::string canonical_smiles;
    groups::GroupComposition composition;
    groups::GcProperties gc;
    std::optional<double> dT;    // K, filled by the dT surrogate
    std::optional<double> T_p;   // K, filled by the T_p surrogate
    std::optional<Thermophysical> thermophysical;
    std::optional<ConeLabels> labels;
    Provenance provenance = Provenance::Synthetic;
    std::string error;  // per-record batch failure, empty when clean
};

// JSON-lines persistence; one record per line, field names as in the data
// model, absent optional fields omitted.
std::string record_to_json_line(const PolymerRecord& record);
PolymerRecord record_from_json_line(const std::string& line);

void write_jsonl(const std::filesystem::path& path, const std::vector<PolymerRecord>& records);
std::vector<PolymerRecord> read_jsonl(const std::filesystem::path& path);

// Flat CSV projection for spreadsheet inspection.
void write_records_csv(const std::filesystem::path& path,
                       const std::vector<PolymerRecord>& records);

}  // namespace polyflam::polygen
