#pragma once

#include <array>
#include <complex>
#include <vector>

namespace goldberg::schwarz {

// Unit disk minus two radius-r disks internally tangent at -1 and +1.
// The left circle is L = {|z + 1 - r| = r}, the right circle R = -L.
struct TangentCircleDomain {
    double r;
    explicit TangentCircleDomain(double r_);

    std::complex<double> left_point(double phi) const;   // tangency at phi = pi
    std::complex<double> right_point(double phi) const;  // mirror image
};

enum class Side { L, R };

// Boundary values sampled at angles phi_j = 2*pi*j/n on a side circle,
// parameterized so z_L(phi) = -1 + r + r e^{i phi}, z_R(phi) = -z_L(phi).
struct BoundaryTrace {
    std::vector<double> values;
};

struct HarmonicEstimate {
    double value = 0.0;
    double error_bound = 0.0;
    int iterations = 0;
};

struct ConvergenceSample {
    int term_index;
    double partial_sum;
    double term;
};

struct SolverOptions {
    int nodes = 512;
    int max_iterations = 200;
    std::vector<ConvergenceSample>* convergence_log = nullptr;
};

// Harmonic function on G_side (between the side circle and the unit circle)
// with the given data on the side circle and 0 on the unit circle,
// evaluated at an interior point z. The Dirichlet problem is solved through
// the Moebius map w = 1/(z+1) onto a vertical strip and the half-plane
// Poisson kernel pulled back to it.
double subdomain_dirichlet(const TangentCircleDomain& dom, Side side,
                           const BoundaryTrace& data, std::complex<double> z,
                           double quad_tol = 1e-12);

// Harmonic measure of the marked circle at the center by the alternating
// series u0 - v0 + u1 - v1 + ...; stops when the next term drops below tol,
// which also bounds the truncation error.
HarmonicEstimate omega0(double r, double tol, const SolverOptions& opts = {},
                        Side marked = Side::L);

}  // namespace goldberg::schwarz
