#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fhseq {

namespace detail {

inline void check_rate_argument(double x, const char* op) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(op) +
                                    ": argument must lie in [0, 1], got " +
                                    std::to_string(x));
    }
}

inline void check_alphabet_for_bounds(std::uint32_t q, const char* op) {
    if (q < 2) {
        throw std::invalid_argument(std::string(op) +
                                    ": alphabet size must be at least 2");
    }
}

}  // namespace detail

/// q-ary entropy H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x),
/// extended by its limits H_q(0) = 0 and H_q(1) = log_q(q-1). All logarithms
/// are taken natural and rescaled by 1/ln q, so every bound shares one base.
inline double entropy_q(std::uint32_t q, double x) {
    detail::check_alphabet_for_bounds(q, "entropy_q");
    detail::check_rate_argument(x, "entropy_q");
    const double lq = std::log(static_cast<double>(q));
    if (x == 0.0) return 0.0;
    if (x == 1.0) return std::log(static_cast<double>(q - 1)) / lq;
    const double h = x * std::log(static_cast<double>(q - 1)) - x * std::log(x) -
                     (1.0 - x) * std::log1p(-x);
    return h / lq;
}

/// Singleton upper bound on the rate-defect exponent: delta itself.
inline double singleton_upper(std::uint32_t q, double delta) {
    detail::check_alphabet_for_bounds(q, "singleton_upper");
    detail::check_rate_argument(delta, "singleton_upper");
    return delta;
}

/// Plotkin upper bound: 0 for delta <= 1/q, otherwise (q delta - 1)/(q - 1);
/// continuous at delta = 1/q.
inline double plotkin_upper(std::uint32_t q, double delta) {
    detail::check_alphabet_for_bounds(q, "plotkin_upper");
    detail::check_rate_argument(delta, "plotkin_upper");
    const double qd = static_cast<double>(q);
    if (delta <= 1.0 / qd) return 0.0;
    return (qd * delta - 1.0) / (qd - 1.0);
}

/// Sphere-packing (Hamming) upper bound 1 - H_q((1 - delta)/2), clamped at 0.
inline double sphere_packing_upper(std::uint32_t q, double delta) {
    detail::check_alphabet_for_bounds(q, "sphere_packing_upper");
    detail::check_rate_argument(delta, "sphere_packing_upper");
    const double v = 1.0 - entropy_q(q, (1.0 - delta) / 2.0);
    return v < 0.0 ? 0.0 : v;
}

/// First linear-programming upper bound H_q((q-1-(q-2)(1-delta)
/// - 2 sqrt(delta(1-delta)(q-1))) / q); the entropy argument is clamped to
/// [0, (q-1)/q] against floating-point spill at the endpoints.
inline double lp_upper(std::uint32_t q, double delta) {
    detail::check_alphabet_for_bounds(q, "lp_upper");
    detail::check_rate_argument(delta, "lp_upper");
    const double qd = static_cast<double>(q);
    double arg = (qd - 1.0 - (qd - 2.0) * (1.0 - delta) -
                  2.0 * std::sqrt(delta * (1.0 - delta) * (qd - 1.0))) /
                 qd;
    const double hi = (qd - 1.0) / qd;
    if (arg < 0.0) arg = 0.0;
    if (arg > hi) arg = hi;
    return entropy_q(q, arg);
}

/// Gilbert-Varshamov lower bound: 0 on delta <= 1/q (where the random-coding
/// exponent carries no content) and max(0, 1 - H_q(1 - delta)) beyond.
inline double gv_lower(std::uint32_t q, double delta) {
    detail::check_alphabet_for_bounds(q, "gv_lower");
    detail::check_rate_argument(delta, "gv_lower");
    if (delta <= 1.0 / static_cast<double>(q)) return 0.0;
    const double v = 1.0 - entropy_q(q, 1.0 - delta);
    return v < 0.0 ? 0.0 : v;
}

/// The GV curve is known to be meaningful only past the correlation floor;
/// a point is flagged valid when delta > 1/q + epsilon.
inline bool gv_lower_valid(std::uint32_t q, double delta, double epsilon = 0.0) {
    detail::check_alphabet_for_bounds(q, "gv_lower_valid");
    detail::check_rate_argument(delta, "gv_lower_valid");
    return delta > 1.0 / static_cast<double>(q) + epsilon;
}

enum class BoundKind {
    singleton,
    plotkin,
    sphere_packing,
    linear_programming,
    gv_lower,
};

inline const char* bound_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::singleton: return "singleton";
        case BoundKind::plotkin: return "plotkin";
        case BoundKind::sphere_packing: return "sphere_packing";
        case BoundKind::linear_programming: return "lp";
        case BoundKind::gv_lower: return "gv_lower";
    }
    throw std::invalid_argument("bound_name: unknown bound kind");
}

inline double evaluate_bound(BoundKind kind, std::uint32_t q, double delta) {
    switch (kind) {
        case BoundKind::singleton: return singleton_upper(q, delta);
        case BoundKind::plotkin: return plotkin_upper(q, delta);
        case BoundKind::sphere_packing: return sphere_packing_upper(q, delta);
        case BoundKind::linear_programming: return lp_upper(q, delta);
        case BoundKind::gv_lower: return gv_lower(q, delta);
    }
    throw std::invalid_argument("evaluate_bound: unknown bound kind");
}

inline const std::vector<BoundKind>& all_bounds() {
    static const std::vector<BoundKind> kinds = {
        BoundKind::singleton, BoundKind::plotkin, BoundKind::sphere_packing,
        BoundKind::linear_programming, BoundKind::gv_lower};
    return kinds;
}

struct BoundPoint {
    std::uint32_t q = 0;
    double delta = 0.0;
    BoundKind kind = BoundKind::singleton;
    double value = 0.0;
};

/// Sampling request for bound curves over a delta grid.
struct CurveSpec {
    std::uint32_t q = 0;
    double start = 0.0;
    double stop = 1.0;
    double step = 0.01;
    std::vector<BoundKind> kinds = all_bounds();
};

/// Affine grid start, start+step, ..., with the final point snapped onto stop
/// when the step divides the range, so endpoints are hit exactly.
inline std::vector<double> curve_grid(const CurveSpec& spec) {
    if (!(spec.step > 0.0)) {
        throw std::invalid_argument("curve_grid: step must be positive");
    }
    if (!(spec.start >= 0.0 && spec.start <= spec.stop && spec.stop <= 1.0)) {
        throw std::invalid_argument(
            "curve_grid: need 0 <= start <= stop <= 1");
    }
    const double span = spec.stop - spec.start;
    const auto k_max = static_cast<std::size_t>(std::floor(span / spec.step + 1e-9));
    std::vector<double> grid;
    grid.reserve(k_max + 1);
    for (std::size_t k = 0; k <= k_max; ++k) {
        double delta = spec.start + static_cast<double>(k) * spec.step;
        if (delta > spec.stop) delta = spec.stop;
        grid.push_back(delta);
    }
    if (std::abs(spec.start + static_cast<double>(k_max) * spec.step - spec.stop) <
        spec.step * 1e-6) {
        grid.back() = spec.stop;
    }
    return grid;
}

/// Evaluate the selected bounds on the grid. Points are ordered by bound (in
/// the order given in the spec) and then by ascending delta.
inline std::vector<BoundPoint> sample_curves(const CurveSpec& spec) {
    detail::check_alphabet_for_bounds(spec.q, "sample_curves");
    const std::vector<double> grid = curve_grid(spec);
    std::vector<BoundPoint> points;
    points.reserve(spec.kinds.size() * grid.size());
    for (BoundKind kind : spec.kinds) {
        for (double delta : grid) {
            points.push_back({spec.q, delta, kind, evaluate_bound(kind, spec.q, delta)});
        }
    }
    return points;
}

namespace detail {

// 12 significant digits: enough to round-trip the plotted curves while
// keeping exact zeros and ones as bare "0" / "1".
inline std::string format_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace detail

/// Write the full five-curve table as CSV. Columns are fixed regardless of
/// the kinds selected in the spec; gv_valid applies gv_lower_valid with the
/// given epsilon.
inline void write_curve_csv(std::ostream& out, const CurveSpec& spec,
                            double validity_epsilon = 0.0) {
    detail::check_alphabet_for_bounds(spec.q, "write_curve_csv");
    out << "q,delta_h,singleton,plotkin,sphere_packing,lp,gv_lower,gv_valid\n";
    for (double delta : curve_grid(spec)) {
        out << spec.q << ',' << detail::format_g12(delta) << ','
            << detail::format_g12(singleton_upper(spec.q, delta)) << ','
            << detail::format_g12(plotkin_upper(spec.q, delta)) << ','
            << detail::format_g12(sphere_packing_upper(spec.q, delta)) << ','
            << detail::format_g12(lp_upper(spec.q, delta)) << ','
            << detail::format_g12(gv_lower(spec.q, delta)) << ','
            << (gv_lower_valid(spec.q, delta, validity_epsilon) ? 1 : 0) << '\n';
    }
}

}  // namespace fhseq
