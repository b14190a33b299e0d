#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "polyflam/forest/forest.hpp"

namespace polyflam::forest {

// One row of the pyrolysis kinetics dataset. Units: eta_c J/(g*K), h_c kJ/g,
// dT K, T_p K.
struct KineticsRow {
    std::string smiles;
    double eta_c = 0.0;
    double h_c = 0.0;
    double dT = 0.0;
    double T_p = 0.0;
};

// CSV schema: smiles,eta_c,h_c,dT,T_p. Values outside the expected physical
// ranges are reported through `warnings` (one human-readable line each), not
// rejected.
std::vector<KineticsRow> load_kinetics_csv(const std::filesystem::path& path,
                                           std::vector<std::string>* warnings = nullptr);

// The two surrogate relations: (eta_c, h_c) -> dT and (eta_c, h_c, dT) -> T_p,
// with train/test R2 on a seeded random split.
struct SurrogatePair {
    Forest dT_model;
    Forest Tp_model;
    double dT_r2_train = 0.0;
    double dT_r2_test = 0.0;
    double Tp_r2_train = 0.0;
    double Tp_r2_test = 0.0;
    std::size_t n_train = 0;
    std::size_t n_test = 0;
};

SurrogatePair fit_surrogates(const std::vector<KineticsRow>& rows, const ForestParams& params,
                             double test_fraction = 0.2);

// Convenience queries with dimension checks.
double predict_dT(const Forest& model, double eta_c, double h_c);
double predict_Tp(const Forest& model, double eta_c, double h_c, double dT);

}  // namespace polyflam::forest
