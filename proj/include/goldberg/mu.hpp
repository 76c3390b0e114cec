#pragma once

#include "goldberg/schwarz.hpp"

#include <complex>
#include <string>

namespace goldberg::mu {

struct Chain {
    double a;   // > 1
    double q;   // in (-1, 0)
    double mu;  // in (0, 1)
};

struct MuResult {
    long m = 0, n = 0;  // zero for the real-product variant
    double p = 0;       // m*n, or the real product
    double r = 0;
    schwarz::HarmonicEstimate omega0;
    double a = 0;
    double q = 0;
    double mu = 0;
};

struct ChocolateResult {
    double s0 = 0;
    double tstar_lower = 0;
    double delta_star_upper = 0;
    double hempel_smith_tstar = 0;
    MuResult s0_run;
};

struct PipelineOptions {
    double tol = 1e-7;
    int max_iterations = 200;
    int nodes = 512;
    int precision_digits = 30;  // > 18 evaluates the a->q->mu chain extended
};

// Radius of the two excluded disks for the symmetrized gap domain of
// <A^m, B^n>: r = 1/(sqrt(m n) + 1); real products p >= 1 are admitted for
// the length parameterization.
double r_from_product(double p);

// a = J(cos(pi w0)), q = -a + sqrt(a^2-1), mu = (-1+sqrt(1-q^2))/q,
// evaluated in cancellation-free form; digits > 18 switches the chain to
// 50-digit arithmetic (a is large and q tiny when w0 approaches 1/2).
Chain mu_from_omega0(double omega0, int precision_digits = 30);
Chain mu_chain_from_a(double a, int precision_digits = 30);

// Full chain for integer multiplicities m != n.
MuResult compute_mu(long m, long n, const PipelineOptions& opts = {});

// Real-product variant used by the length function.
MuResult compute_mu_p(double p, const PipelineOptions& opts = {});

// Hyperbolic length of the geodesic separating {-t, t} from the unit
// circle: finds p with mu_p(p) = t by bracketing + bisection and returns
// 2*acosh(2p-1). Throws if t is outside the achievable range.
double separating_length(double t, const PipelineOptions& opts = {});

// Inverse direction: p = (cosh(ell/2)+1)/2 in closed form, then t = mu_p(p).
double t_for_length(double ell, const PipelineOptions& opts = {});

// s0 solves ell(s0) = log(3+2sqrt2) (p = (1+sqrt2)/2); tstar_lower and
// delta_star_upper convert s0; hempel_smith_tstar is the closed-form
// fallback bound.
ChocolateResult chocolate(const PipelineOptions& opts = {});

double hempel_smith_tstar();

struct TwoPointResult {
    double pseudo_dist = 0;
    double threshold = 0;  // 2*mu/(1+mu^2)
    bool admissible_holomorphic = false;
    bool admissible_rational = false;
};

// Admissibility of prescribing f^{-1}({0,1}) = {a, b} in the unit disk;
// holomorphic iff the pseudo-hyperbolic distance reaches 2mu/(1+mu^2),
// rational iff it exceeds it.
TwoPointResult two_point_admissible(std::complex<double> a, std::complex<double> b,
                                    const PipelineOptions& opts = {});

std::string to_json(const MuResult& r);
std::string to_json(const ChocolateResult& r);
std::string to_json(const TwoPointResult& r);

struct TableRow {
    long m, n;
    MuResult result;
};

// The five published multiplicity pairs plus any extras, as CSV:
// m,n,p,r,omega0,a,q,mu
std::vector<TableRow> table_a5(const PipelineOptions& opts = {},
                               const std::vector<std::pair<long, long>>& extra = {});
std::string table_a5_csv(const std::vector<TableRow>& rows);

}  // namespace goldberg::mu
