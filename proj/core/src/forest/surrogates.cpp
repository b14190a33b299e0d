#include "polyflam/forest/surrogates.hpp"

#include <numeric>

#include "polyflam/common/csv.hpp"
#include "polyflam/common/error.hpp"
#include "polyflam/common/numio.hpp"
#include "polyflam/common/rng.hpp"

namespace polyflam::forest {

namespace {

struct Range {
    double lo, hi;
};

// Expected physical ranges used for ingestion warnings.
constexpr Range kEtaRange{20.291, 1527.251};
constexpr Range kHcRange{3.823, 46.528};
constexpr Range kDtRange{46.093, 333.964};
constexpr Range kTpRange{386.285, 765.922};

void warn_range(std::vector<std::string>* warnings, const std::string& field, double value,
                const Range& range, std::size_t row) {
    if (!warnings) return;
    if (value < range.lo || value > range.hi) {
        warnings->push_back("kinetics row " + std::to_string(row) + ": " + field + " = " +
                            format_double(value) + " outside expected range [" +
                            format_double(range.lo) + ", " + format_double(range.hi) + "]");
    }
}

}  // namespace

std::vector<KineticsRow> load_kinetics_csv(const std::filesystem::path& path,
                                           std::vector<std::string>* warnings) {
    const CsvTable csv = read_csv(path);
    const std::string ctx = "kinetics CSV " + path.string();
    const int c_smiles = csv.require("smiles", ctx);
    const int c_eta = csv.require("eta_c", ctx);
    const int c_hc = csv.require("h_c", ctx);
    const int c_dt = csv.require("dT", ctx);
    const int c_tp = csv.require("T_p", ctx);

    std::vector<KineticsRow> rows;
    rows.reserve(csv.rows.size());
    for (std::size_t r = 0; r < csv.rows.size(); ++r) {
        const std::string row_ctx = ctx + " row " + std::to_string(r + 2);
        KineticsRow row;
        row.smiles = csv.at(r, c_smiles);
        row.eta_c = parse_double(csv.at(r, c_eta), row_ctx + " eta_c");
        row.h_c = parse_double(csv.at(r, c_hc), row_ctx + " h_c");
        row.dT = parse_double(csv.at(r, c_dt), row_ctx + " dT");
        row.T_p = parse_double(csv.at(r, c_tp), row_ctx + " T_p");
        warn_range(warnings, "eta_c", row.eta_c, kEtaRange, r + 2);
        warn_range(warnings, "h_c", row.h_c, kHcRange, r + 2);
        warn_range(warnings, "dT", row.dT, kDtRange, r + 2);
        warn_range(warnings, "T_p", row.T_p, kTpRange, r + 2);
        rows.push_back(std::move(row));
    }
    return rows;
}

SurrogatePair fit_surrogates(const std::vector<KineticsRow>& rows, const ForestParams& params,
                             double test_fraction) {
    if (rows.empty()) throw EmptyData("kinetics dataset is empty");
    if (!(test_fraction >= 0.0 && test_fraction < 1.0)) {
        throw DomainError("test_fraction must be in [0, 1)");
    }

    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    Rng rng(Rng::derive(params.seed, 0x5eed));
    rng.shuffle(order);
    const auto n_test = static_cast<std::size_t>(test_fraction * static_cast<double>(rows.size()));
    const std::size_t n_train = rows.size() - n_test;

    const auto build = [&](std::size_t dims, bool train_side) {
        const std::size_t count = train_side ? n_train : n_test;
        Matrix X(count, dims);
        std::vector<double> dT(count), Tp(count);
        for (std::size_t k = 0; k < count; ++k) {
            const auto& row = rows[order[train_side ? k : n_train + k]];
            X.at(k, 0) = row.eta_c;
            X.at(k, 1) = row.h_c;
            if (dims == 3) X.at(k, 2) = row.dT;
            dT[k] = row.dT;
            Tp[k] = row.T_p;
        }
        return std::tuple<Matrix, std::vector<double>, std::vector<double>>(
            std::move(X), std::move(dT), std::move(Tp));
    };

    auto [X2_train, dT_train, Tp_train2] = build(2, true);
    auto [X3_train, dT_train3, Tp_train] = build(3, true);
    (void)Tp_train2;
    (void)dT_train3;

    SurrogatePair pair;
    pair.n_train = n_train;
    pair.n_test = n_test;

    ForestParams dT_params = params;
    dT_params.seed = Rng::derive(params.seed, 1);
    pair.dT_model = Forest::fit(X2_train, dT_train, dT_params);

    ForestParams Tp_params = params;
    Tp_params.seed = Rng::derive(params.seed, 2);
    pair.Tp_model = Forest::fit(X3_train, Tp_train, Tp_params);

    const auto evaluate = [&](const Forest& model, std::size_t dims, bool dT_target,
                              bool train_side) {
        auto [X, dT_y, Tp_y] = build(dims, train_side);
        const auto& y = dT_target ? dT_y : Tp_y;
        if (y.size() < 2) return 0.0;
        std::vector<double> pred(y.size());
        for (std::size_t k = 0; k < y.size(); ++k) pred[k] = model.predict(X.row(k));
        return r2_score(y, pred);
    };

    pair.dT_r2_train = evaluate(pair.dT_model, 2, true, true);
    pair.Tp_r2_train = evaluate(pair.Tp_model, 3, false, true);
    if (n_test >= 2) {
        pair.dT_r2_test = evaluate(pair.dT_model, 2, true, false);
        pair.Tp_r2_test = evaluate(pair.Tp_model, 3, false, false);
    }
    return pair;
}

double predict_dT(const Forest& model, double eta_c, double h_c) {
    const double x[2] = {eta_c, h_c};
    return model.predict(std::span<const double>(x, 2));
}

double predict_Tp(const Forest& model, double eta_c, double h_c, double dT) {
    const double x[3] = {eta_c, h_c, dT};
    return model.predict(std::span<const double>(x, 3));
}

}  // namespace polyflam::forest
