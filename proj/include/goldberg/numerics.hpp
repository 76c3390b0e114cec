#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace goldberg::numerics {

struct QuadRule {
    std::vector<double> nodes;    // on (-1,1)
    std::vector<double> weights;
};

// Gauss-Legendre rule by Newton iteration on the Legendre polynomial.
const QuadRule& gauss_legendre(int n);

// Integrates f over [a,b] with `panels` equal panels of an n-point rule.
template <class F>
auto panel_quad(F&& f, double a, double b, int panels, int n = 16) {
    const QuadRule& rule = gauss_legendre(n);
    using R = decltype(f(a));
    R total{};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (int i = 0; i < n; ++i)
            total += R(rule.weights[i] * 0.5 * h) * f(mid + 0.5 * h * rule.nodes[i]);
    }
    return total;
}

// Adaptive Simpson with absolute tolerance; works for real or complex f.
template <class F>
auto adaptive_quad(F&& f, double a, double b, double tol, int max_depth = 48) {
    using R = decltype(f(a));
    auto simpson = [](double x0, double x2, R f0, R f1, R f2) {
        return (f0 + 4.0 * f1 + f2) * ((x2 - x0) / 6.0);
    };
    struct Rec {
        const std::function<R(double)> f;
        int max_depth;
        R run(double x0, double x2, R f0, R f1, R f2, R whole, double tol, int depth) {
            const double x1 = 0.5 * (x0 + x2);
            const R fl = f(0.5 * (x0 + x1));
            const R fr = f(0.5 * (x1 + x2));
            const R left = (f0 + 4.0 * fl + f1) * ((x1 - x0) / 6.0);
            const R right = (f1 + 4.0 * fr + f2) * ((x2 - x1) / 6.0);
            const R sum = left + right;
            if (depth >= max_depth || std::abs(sum - whole) <= 15.0 * tol)
                return sum + (sum - whole) / 15.0;
            return run(x0, x1, f0, fl, f1, left, 0.5 * tol, depth + 1) +
                   run(x1, x2, f1, fr, f2, right, 0.5 * tol, depth + 1);
        }
    };
    Rec rec{std::function<R(double)>(std::forward<F>(f)), max_depth};
    const R f0 = rec.f(a), f2 = rec.f(b), f1 = rec.f(0.5 * (a + b));
    return rec.run(a, b, f0, f1, f2, simpson(a, b, f0, f1, f2), tol, 0);
}

// Bisection on a bracketing interval; f(lo) and f(hi) must differ in sign.
template <class F>
double bisect(F&& f, double lo, double hi, double xtol, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0)) throw std::domain_error("bisect: no sign change in bracket");
    for (int i = 0; i < max_iter && hi - lo > xtol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Dormand-Prince 5(4) adaptive integrator for y' = f(t, y) on [t0, t1],
// State is any fixed-size array-like of doubles or complex doubles.
template <class State, class F>
State integrate_ode(F&& f, State y, double t0, double t1, double tol,
                    const std::function<void(double, const State&)>& checkpoint = nullptr) {
    static constexpr double c[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
    static constexpr double a2[] = {1.0 / 5};
    static constexpr double a3[] = {3.0 / 40, 9.0 / 40};
    static constexpr double a4[] = {44.0 / 45, -56.0 / 15, 32.0 / 9};
    static constexpr double a5[] = {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561,
                                    -212.0 / 729};
    static constexpr double a6[] = {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247,
                                    49.0 / 176, -5103.0 / 18656};
    static constexpr double b5[] = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192,
                                    -2187.0 / 6784, 11.0 / 84, 0.0};
    static constexpr double b4[] = {5179.0 / 57600, 0.0, 7571.0 / 16695, 393.0 / 640,
                                    -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};
    const double dir = (t1 >= t0) ? 1.0 : -1.0;
    const double total = std::abs(t1 - t0);
    if (total == 0) return y;
    double t = t0;
    double h = dir * std::min(total, 0.1 * total + 1e-3);
    const std::size_t dim = y.size();
    auto norm = [&](const State& v) {
        double m = 0;
        for (std::size_t i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
        return m;
    };
    int steps = 0;
    while (dir * (t1 - t) > 1e-300) {
        if (++steps > 2'000'000) throw std::runtime_error("integrate_ode: step limit");
        if (dir * (t + h - t1) > 0) h = t1 - t;
        State k1 = f(t, y), yt = y;
        auto stage = [&](const double* a, int n, double ci, const State* ks[]) {
            for (std::size_t i = 0; i < dim; ++i) {
                auto acc = y[i];
                for (int s = 0; s < n; ++s) acc += h * a[s] * (*ks[s])[i];
                yt[i] = acc;
            }
            return f(t + ci * h, yt);
        };
        const State* K1[] = {&k1};
        State k2 = stage(a2, 1, c[1], K1);
        const State* K2[] = {&k1, &k2};
        State k3 = stage(a3, 2, c[2], K2);
        const State* K3[] = {&k1, &k2, &k3};
        State k4 = stage(a4, 3, c[3], K3);
        const State* K4[] = {&k1, &k2, &k3, &k4};
        State k5 = stage(a5, 4, c[4], K4);
        const State* K5[] = {&k1, &k2, &k3, &k4, &k5};
        State k6 = stage(a6, 5, c[5], K5);
        State y5 = y, err = y;
        const State* ks[] = {&k1, &k2, &k3, &k4, &k5, &k6};
        for (std::size_t i = 0; i < dim; ++i) {
            auto acc5 = y[i];
            auto acc4 = y[i];
            for (int s = 0; s < 6; ++s) {
                acc5 += h * b5[s] * (*ks[s])[i];
                acc4 += h * b4[s] * (*ks[s])[i];
            }
            y5[i] = acc5;
            err[i] = acc5 - acc4;
        }
        const double e = norm(err);
        const double scale = std::max(1.0, norm(y5));
        if (e <= tol * scale) {
            t += h;
            y = y5;
            if (checkpoint) checkpoint(t, y);
        }
        const double factor = (e > 0) ? 0.9 * std::pow(tol * scale / e, 0.2) : 4.0;
        h *= std::clamp(factor, 0.2, 4.0);
        if (std::abs(h) < 1e-15 * total)
            throw std::runtime_error("integrate_ode: step size underflow");
    }
    return y;
}

}  // namespace goldberg::numerics
