#pragma once

// Shared helpers for the test suites: seeded random tensors and a
// central finite-difference checker.

#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "oalstm/tensor.hpp"

namespace oalstm::testing {

inline Tensor random_tensor(const Shape& shape, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
    Tensor t(shape);
    std::uniform_real_distribution<double> u(lo, hi);
    for (auto& v : t.data()) v = u(rng);
    return t;
}

struct GradCheck {
    double max_rel_error = 0.0;
    double max_rel_observed = 0.0;  // over every coordinate with max(|a|, |n|) > 1e-6, floor ignored
    std::size_t failures = 0;
    std::size_t checked = 0;
    std::string worst;
};

/// Compares `analytic` against central differences of `loss` w.r.t. every coordinate of `param`.
/// A coordinate passes when |a - n| <= rel_tol * max(|a|, |n|) or |a - n| <= abs_floor.
inline GradCheck finite_difference_check(Tensor& param, const Tensor& analytic, const std::function<double()>& loss,
                                         const std::string& label, double h = 1e-4, double rel_tol = 1e-3,
                                         double abs_floor = 1e-6) {
    GradCheck r;
    for (std::size_t i = 0; i < param.size(); ++i) {
        const double saved = param[i];
        param[i] = saved + h;
        const double up = loss();
        param[i] = saved - h;
        const double down = loss();
        param[i] = saved;
        const double numeric = (up - down) / (2.0 * h);
        const double a = analytic[i];
        const double diff = std::abs(a - numeric);
        const double scale = std::max(std::abs(a), std::abs(numeric));
        const double rel = scale > 0.0 ? diff / scale : 0.0;
        ++r.checked;
        if (scale > 1e-6) r.max_rel_observed = std::max(r.max_rel_observed, rel);
        if (diff > abs_floor) {
            if (rel > r.max_rel_error) {
                r.max_rel_error = rel;
                r.worst = label + "[" + std::to_string(i) + "] analytic=" + std::to_string(a) +
                          " numeric=" + std::to_string(numeric);
            }
            if (rel > rel_tol) ++r.failures;
        }
    }
    return r;
}

}  // namespace oalstm::testing
