#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "aqb/errors.hpp"

namespace aqb {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kPrngId = "mt19937_64/u53";

namespace num {

// Pascal-triangle table of binomial coefficients, exact in uint64 for n <= 64.
inline std::uint64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> t{};
        for (int i = 0; i <= 64; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
        }
        return t;
    }();
    if (n > 64) throw invalid_argument("binom: n > 64 not supported");
    return table[n][k];
}

// Locale-independent float formatting, 17 significant digits.
inline std::string fmt17(double x) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

// Adaptive Simpson quadrature on [a, b].
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12, int max_depth = 40) {
    auto simpson = [&](double lo, double hi, double flo, double fmid, double fhi) {
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    };
    std::function<double(double, double, double, double, double, double, double, int)> rec =
        [&](double lo, double hi, double flo, double fmid, double fhi, double whole, double eps,
            int depth) -> double {
        double m = 0.5 * (lo + hi);
        double lm = 0.5 * (lo + m), rm = 0.5 * (m + hi);
        double flm = f(lm), frm = f(rm);
        double left = simpson(lo, m, flo, flm, fmid);
        double right = simpson(m, hi, fmid, frm, fhi);
        double delta = left + right - whole;
        if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
            return left + right + delta / 15.0;
        return rec(lo, m, flo, flm, fmid, left, eps / 2.0, depth - 1) +
               rec(m, hi, fmid, frm, fhi, right, eps / 2.0, depth - 1);
    };
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = simpson(a, b, fa, fm, fb);
    return rec(a, b, fa, fm, fb, whole, tol, max_depth);
}

// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw invalid_argument("fit_slope: need >= 2 points with matching sizes");
    double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw invalid_argument("fit_slope: degenerate abscissae");
    return (n * sxy - sx * sy) / denom;
}

inline bool close_abs(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool close_rel(double a, double b, double rel) {
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= rel * std::max(scale, 1e-300);
}

} // namespace num
} // namespace aqb
