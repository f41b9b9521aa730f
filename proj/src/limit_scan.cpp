#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relgas/lie_engine.hpp"
#include "relgas/reciprocal_1d.hpp"
#include "relgas/reciprocal_2d.hpp"

namespace relgas {

namespace {

template <class Evaluate>
LimitScanReport scan(std::vector<std::string> components, const std::vector<double>& cValues, double band,
                     Evaluate evaluate)
{
    if (cValues.empty()) {
        throw std::invalid_argument("limit scan needs at least one c value");
    }
    if (!std::is_sorted(cValues.begin(), cValues.end()) ||
        std::adjacent_find(cValues.begin(), cValues.end()) != cValues.end()) {
        throw std::invalid_argument("c values must be strictly ascending");
    }

    LimitScanReport r;
    r.components = std::move(components);
    r.cValues = cValues;
    r.band = band;
    for (double c : cValues) {
        r.values.push_back(evaluate(ModelConstants{c}));
    }

    const std::size_t nc = r.components.size();
    for (std::size_t k = 0; k + 1 < cValues.size(); ++k) {
        std::vector<double> d(nc);
        for (std::size_t i = 0; i < nc; ++i) {
            d[i] = r.values[k + 1][i] - r.values[k][i];
        }
        r.differences.push_back(std::move(d));
    }

    bool anyRatio = false;
    bool allInBand = true;
    for (std::size_t k = 0; k + 1 < r.differences.size(); ++k) {
        auto inv2 = [&](std::size_t i) { return 1.0 / (cValues[i] * cValues[i]); };
        const double expected = (inv2(k + 1) - inv2(k)) / (inv2(k + 2) - inv2(k + 1));
        r.expectedRatios.push_back(expected);

        std::vector<std::optional<double>> row(nc);
        for (std::size_t i = 0; i < nc; ++i) {
            const double later = r.differences[k + 1][i];
            if (later == 0.0) {
                continue;
            }
            const double ratio = std::abs(r.differences[k][i]) / std::abs(later);
            row[i] = ratio;
            anyRatio = true;
            if (std::abs(ratio / expected - 1.0) > band) {
                allInBand = false;
            }
        }
        r.ratios.push_back(std::move(row));
    }
    r.certified = anyRatio && allInBand;
    return r;
}

} // namespace

LimitScanReport limit_scan_c(const GasState1D& state, double eps, const std::vector<double>& cValues, double band)
{
    return scan({"rho", "v", "p", "e"}, cValues, band, [&](const ModelConstants& k) {
        const GasState1D s = transform_state_1param(state, eps, k);
        return std::vector<double>{s.rho, s.v, s.p, s.e};
    });
}

LimitScanReport limit_scan_c(const GasState2D& state, double eps, const std::vector<double>& cValues, double band)
{
    return scan({"rho", "u", "v", "p", "e"}, cValues, band, [&](const ModelConstants& k) {
        const GasState2D s = transform_state_1param_2d(state, eps, k);
        return std::vector<double>{s.rho, s.u, s.v, s.p, s.e};
    });
}

} // namespace relgas
