#include "polyflam/polygen/record.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polyflam/common/csv.hpp"
#include "polyflam/common/error.hpp"
#include "polyflam/common/numio.hpp"

namespace polyflam::polygen {

using ordered_json = nlohmann::ordered_json;

std::string record_to_json_line(const PolymerRecord& record) {
    ordered_json j;
    j["canonical_smiles"] = record.canonical_smiles;
    ordered_json comp = ordered_json::object();
    for (const auto& [id, n] : record.composition.counts) comp[id] = n;
    j["composition"] = comp;
    j["gc"] = {{"eta_c", record.gc.eta_c}, {"h_c", record.gc.h_c}, {"mu", record.gc.mu}};
    if (record.dT) j["dT"] = *record.dT;
    if (record.T_p) j["T_p"] = *record.T_p;
    if (record.thermophysical) {
        j["thermophysical"] = {{"rho", record.thermophysical->rho},
                               {"kappa", record.thermophysical->kappa},
                               {"c_p", record.thermophysical->c_p}};
    }
    if (record.labels) {
        j["labels"] = {{"t_ig", record.labels->t_ig},
                       {"phrr", record.labels->phrr},
                       {"ignitable", record.labels->ignitable}};
    }
    j["provenance"] = record.provenance == Provenance::Synthetic ? "synthetic" : "experimental";
    if (!record.error.empty()) j["error"] = record.error;
    return j.dump();
}

PolymerRecord record_from_json_line(const std::string& line) {
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("invalid JSON record: ") + e.what());
    }
    PolymerRecord record;
    try {
        record.canonical_smiles = j.at("canonical_smiles").get<std::string>();
        for (const auto& [id, n] : j.at("composition").items()) {
            record.composition.counts[id] = n.get<int>();
        }
        const auto& gc = j.at("gc");
        record.gc.eta_c = gc.at("eta_c").get<double>();
        record.gc.h_c = gc.at("h_c").get<double>();
        record.gc.mu = gc.at("mu").get<double>();
        if (j.contains("dT")) record.dT = j["dT"].get<double>();
        if (j.contains("T_p")) record.T_p = j["T_p"].get<double>();
        if (j.contains("thermophysical")) {
            const auto& t = j["thermophysical"];
            record.thermophysical = Thermophysical{t.at("rho").get<double>(),
                                                   t.at("kappa").get<double>(),
                                                   t.at("c_p").get<double>()};
        }
        if (j.contains("labels")) {
            const auto& l = j["labels"];
            record.labels = ConeLabels{l.at("t_ig").get<double>(), l.at("phrr").get<double>(),
                                       l.at("ignitable").get<bool>()};
        }
        const auto prov = j.at("provenance").get<std::string>();
        if (prov == "synthetic") {
            record.provenance = Provenance::Synthetic;
        } else if (prov == "experimental") {
            record.provenance = Provenance::Experimental;
        } else {
            throw SchemaError("unknown provenance '" + prov + "'");
        }
        if (j.contains("error")) record.error = j["error"].get<std::string>();
    } catch (const ordered_json::exception& e) {
        throw SchemaError(std::string("record missing field: ") + e.what());
    }
    return record;
}

void write_jsonl(const std::filesystem::path& path, const std::vector<PolymerRecord>& records) {
    std::string out;
    for (const auto& record : records) {
        out += record_to_json_line(record);
        out += '\n';
    }
    write_text_file(path, out);
}

std::vector<PolymerRecord> read_jsonl(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    std::vector<PolymerRecord> records;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        records.push_back(record_from_json_line(line));
    }
    return records;
}

void write_records_csv(const std::filesystem::path& path,
                       const std::vector<PolymerRecord>& records) {
    CsvTable table;
    table.header = {"canonical_smiles", "eta_c", "h_c",  "mu",        "dT",
                    "T_p",              "rho",   "kappa", "c_p",      "t_ig",
                    "phrr",             "ignitable", "provenance", "error"};
    const auto opt = [](const std::optional<double>& v) {
        return v ? format_double(*v) : std::string();
    };
    for (const auto& r : records) {
        std::vector<std::string> row;
        row.push_back(r.canonical_smiles);
        row.push_back(format_double(r.gc.eta_c));
        row.push_back(format_double(r.gc.h_c));
        row.push_back(format_double(r.gc.mu));
        row.push_back(opt(r.dT));
        row.push_back(opt(r.T_p));
        if (r.thermophysical) {
            row.push_back(format_double(r.thermophysical->rho));
            row.push_back(format_double(r.thermophysical->kappa));
            row.push_back(format_double(r.thermophysical->c_p));
        } else {
            row.insert(row.end(), {"", "", ""});
        }
        if (r.labels) {
            row.push_back(format_double(r.labels->t_ig));
            row.push_back(format_double(r.labels->phrr));
            row.push_back(r.labels->ignitable ? "true" : "false");
        } else {
            row.insert(row.end(), {"", "", ""});
        }
        row.push_back(r.provenance == Provenance::Synthetic ? "synthetic" : "experimental");
        row.push_back(r.error);
        table.rows.push_back(std::move(row));
    }
    write_csv(path, table);
}

}  // namespace polyflam::polygen
