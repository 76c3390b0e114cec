#include "goldberg/schwarz.hpp"

#include "goldberg/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace goldberg::schwarz {

namespace {

using std::complex;

constexpr double kPi = M_PI;

// Poisson kernel of the strip {0 < x < 1} for data on the edge x = 1;
// integrates to x over s in R. Written with the half-angle identity to
// stay accurate when both x and s are small.
inline double strip_kernel(double x, double s) {
    const double sh = std::sinh(0.5 * kPi * s);
    const double sn = std::sin(0.5 * kPi * x);
    return std::sin(kPi * x) / (4.0 * (sh * sh + sn * sn));
}

// Dirichlet solver for G_L in strip coordinates. Boundary data lives on the
// circle L (strip edge x = 1, ordinate t), zero data on the unit circle
// (edge x = 0).
class StripSolver {
  public:
    StripSolver(double r, int nodes, double quad_tol)
        : r_(r), d_((1.0 - r) / (2.0 * r)), n_(nodes), quad_tol_(quad_tol) {
        // truncation range: kernel tail is below e^{-pi S}
        range_ = std::max(8.0, std::log(4.0 / quad_tol) / kPi + 1.0);
    }

    // strip coordinates (x, y) of an interior point
    std::array<double, 2> to_strip(complex<double> z) const {
        const complex<double> w = 1.0 / (z + 1.0);
        return {(w.real() - 0.5) / d_, w.imag() / d_};
    }

    double edge_ordinate(double phi) const { return -std::tan(0.5 * phi) / (1.0 - r_); }
    double edge_angle(double t) const { return -2.0 * std::atan((1.0 - r_) * t); }

    void set_data(const std::vector<double>& samples) {
        if (static_cast<int>(samples.size()) != n_)
            throw std::invalid_argument("boundary data length mismatch");
        // incremental DFT; iterates are analytic on the circle so the modes
        // decay fast and the loop exits early
        double maxabs = 0.0;
        for (double v : samples) maxabs = std::max(maxabs, std::abs(v));
        const double cutoff = 1e-16 * maxabs + 1e-300;
        modes_.clear();
        std::vector<complex<double>> phase(n_, {1.0, 0.0});
        std::vector<complex<double>> step(n_);
        for (int j = 0; j < n_; ++j)
            step[j] = std::polar(1.0, -2.0 * kPi * j / n_);
        int quiet = 0;
        for (int m = 0; m <= n_ / 2; ++m) {
            complex<double> c{0.0, 0.0};
            for (int j = 0; j < n_; ++j) c += samples[j] * phase[j];
            c /= static_cast<double>(n_);
            modes_.push_back(c);
            quiet = (std::abs(c) < cutoff) ? quiet + 1 : 0;
            if (quiet >= 8 && m >= 8) break;
            for (int j = 0; j < n_; ++j) phase[j] *= step[j];
        }
    }

    // trigonometric interpolation of the data at circle angle phi
    double data_at_angle(double phi) const {
        if (modes_.empty()) return 0.0;
        double out = modes_[0].real();
        const complex<double> w = std::polar(1.0, phi);
        complex<double> wm = w;
        for (std::size_t m = 1; m < modes_.size(); ++m) {
            out += 2.0 * (modes_[m] * wm).real();
            wm *= w;
        }
        return out;
    }

    double data_at_ordinate(double t) const { return data_at_angle(edge_angle(t)); }

    // Poisson integral at strip point (x, y)
    double eval(double x, double y) const {
        if (x <= 0.0) return 0.0;
        if (x < kSplit) return eval_peak(x, y);
        auto f = [&](double s) { return data_at_ordinate(y + s) * strip_kernel(x, s); };
        const int panels = static_cast<int>(std::ceil(2.0 * range_ / 0.2));
        return numerics::panel_quad(f, -range_, range_, panels, 14);
    }

  private:
    // For x near the zero-data edge the kernel is a spike of width x;
    // subtract the exact mass g(y)*x and integrate the remainder with a
    // tangent substitution around the spike.
    double eval_peak(double x, double y) const {
        const double gy = data_at_ordinate(y);
        const double smax = 0.5;
        const double theta_max = std::atan2(smax, x);
        auto near = [&](double theta) {
            const double tn = std::tan(theta);
            const double s = x * tn;
            const double jac = x * (1.0 + tn * tn);
            return (data_at_ordinate(y + s) - gy) * strip_kernel(x, s) * jac;
        };
        double total = gy * x + numerics::panel_quad(near, -theta_max, theta_max, 16, 14);
        auto far = [&](double s) {
            return (data_at_ordinate(y + s) - gy) * strip_kernel(x, s);
        };
        const int panels = static_cast<int>(std::ceil((range_ - smax) / 0.4));
        total += numerics::panel_quad(far, smax, range_, panels, 14);
        total += numerics::panel_quad(far, -range_, -smax, panels, 14);
        return total;
    }

    static constexpr double kSplit = 0.25;
    double r_, d_;
    int n_;
    double quad_tol_;
    double range_;
    std::vector<complex<double>> modes_;
};

}  // namespace

TangentCircleDomain::TangentCircleDomain(double r_) : r(r_) {
    if (!(r > 0.0) || r > 0.5)
        throw std::domain_error("tangent circle radius must lie in (0, 1/2]");
}

std::complex<double> TangentCircleDomain::left_point(double phi) const {
    return std::complex<double>(-1.0 + r, 0.0) + r * std::polar(1.0, phi);
}

std::complex<double> TangentCircleDomain::right_point(double phi) const {
    return -left_point(phi);
}

double subdomain_dirichlet(const TangentCircleDomain& dom, Side side,
                           const BoundaryTrace& data, std::complex<double> z,
                           double quad_tol) {
    if (dom.r >= 0.5)
        throw std::domain_error("subdomain solver requires r < 1/2");
    // mirror the right-hand problem onto the left frame
    if (side == Side::R) z = -z;
    if (std::abs(z) >= 1.0)
        throw std::domain_error("evaluation point not inside the unit disk");
    const std::complex<double> center(-1.0 + dom.r, 0.0);
    if (std::abs(z - center) <= dom.r)
        throw std::domain_error("evaluation point inside the excluded disk");
    StripSolver solver(dom.r, static_cast<int>(data.values.size()), quad_tol);
    solver.set_data(data.values);
    const auto [x, y] = solver.to_strip(z);
    return solver.eval(x, y);
}

HarmonicEstimate omega0(double r, double tol, const SolverOptions& opts, Side marked) {
    if (!(r > 0.0) || r >= 0.5)
        throw std::domain_error("omega0: r must lie in (0, 1/2)");
    if (!(tol > 0.0)) throw std::domain_error("omega0: tol must be positive");

    const TangentCircleDomain dom(r);
    (void)marked;  // the two sides are mirror images; the numbers coincide
    const int n = opts.nodes;
    const double quad_tol = std::min(1e-12, 0.01 * tol);
    StripSolver solver(r, n, quad_tol);

    // Strip coordinates of the opposite circle's sample points. Each
    // half-step solves on one gap domain and samples the iterate on the
    // other circle; the z -> -z mirror identifies both half-steps with the
    // same left-frame geometry, for either choice of the marked side.
    std::vector<std::array<double, 2>> targets(n);
    for (int j = 0; j < n; ++j) {
        const double phi = 2.0 * kPi * j / n;
        targets[j] = solver.to_strip(dom.right_point(phi));
    }
    const auto center = solver.to_strip({0.0, 0.0});

    std::vector<double> data(n, 1.0);
    double value = 0.0;
    double sign = 1.0;
    int half_steps = 0;
    HarmonicEstimate est;
    while (half_steps < 2 * opts.max_iterations) {
        solver.set_data(data);
        const double term = solver.eval(center[0], center[1]);
        if (!(term > -1e-9 && term < 1.0 + 1e-9))
            throw std::runtime_error("omega0: iterate escaped [0,1] at the center");
        if (term < tol) {
            est.value = value;
            est.error_bound = std::max(term, 0.0);
            est.iterations = (half_steps + 1) / 2;
            return est;
        }
        value += sign * term;
        sign = -sign;
        ++half_steps;
        if (opts.convergence_log)
            opts.convergence_log->push_back({half_steps, value, term});
        std::vector<double> next(n);
        for (int j = 0; j < n; ++j) {
            double v = solver.eval(targets[j][0], targets[j][1]);
            next[j] = std::max(v, 0.0);
        }
        data = std::move(next);
    }
    throw std::runtime_error("omega0: iteration cap reached before tolerance");
}

}  // namespace goldberg::schwarz
