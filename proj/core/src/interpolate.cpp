#include "qrep/interpolate.hpp"

namespace qrep {

LaurentPoly lagrange_interpolate(std::span<const std::pair<Rat, Rat>> points, int degree_bound) {
    if (degree_bound < 0) throw interpolation_error("negative degree bound");
    size_t need = static_cast<size_t>(degree_bound) + 1;
    if (points.size() < need)
        throw interpolation_error("too few points: got " + std::to_string(points.size()) +
                                  ", need " + std::to_string(need));
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw interpolation_error("duplicate abscissa " + rat_str(points[i].first));

    LaurentPoly result;
    for (size_t i = 0; i < need; ++i) {
        // Lagrange basis polynomial for node i, scaled by y_i.
        LaurentPoly basis = LaurentPoly::one();
        Rat denom(1);
        for (size_t j = 0; j < need; ++j) {
            if (j == i) continue;
            basis *= LaurentPoly::from_coeffs(0, {-points[j].first, Rat(1)});
            denom *= points[i].first - points[j].first;
        }
        basis *= points[i].second / denom;
        result += basis;
    }

    for (size_t i = need; i < points.size(); ++i) {
        if (result.eval(points[i].first) != points[i].second)
            throw interpolation_error("point (" + rat_str(points[i].first) + ", " +
                                      rat_str(points[i].second) +
                                      ") is inconsistent with degree bound " +
                                      std::to_string(degree_bound));
    }
    return result;
}

} // namespace qrep
