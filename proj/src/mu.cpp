#include "goldberg/mu.hpp"

#include "goldberg/numerics.hpp"
#include "goldberg/rings.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <json.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace goldberg::mu {

namespace {

using Ext = boost::multiprecision::cpp_bin_float_50;

constexpr double kPi = M_PI;

template <class Real>
Chain chain_from_cos(Real c) {
    // c = cos(pi w0) in (0, 1)
    const Real a = (c + 1 / c) / 2;
    const Real q = -1 / (a + sqrt(a * a - 1));
    const Real mu_ = -q / (1 + sqrt(1 - q * q));
    return {static_cast<double>(a), static_cast<double>(q), static_cast<double>(mu_)};
}

template <class Real>
Chain chain_from_a_impl(Real a) {
    const Real q = -1 / (a + sqrt(a * a - 1));
    const Real mu_ = -q / (1 + sqrt(1 - q * q));
    return {static_cast<double>(a), static_cast<double>(q), static_cast<double>(mu_)};
}

schwarz::SolverOptions solver_options(const PipelineOptions& opts) {
    schwarz::SolverOptions s;
    s.nodes = opts.nodes;
    s.max_iterations = opts.max_iterations;
    return s;
}

}  // namespace

double r_from_product(double p) {
    if (!(p >= 1.0)) throw std::domain_error("r_from_product: product must be >= 1");
    return 1.0 / (std::sqrt(p) + 1.0);
}

Chain mu_from_omega0(double omega0, int precision_digits) {
    if (!(omega0 > 0.0 && omega0 < 0.5))
        throw std::domain_error("mu_from_omega0: omega0 must lie in (0, 1/2)");
    const double delta = 0.5 - omega0;  // cos(pi w0) = sin(pi delta), exact near 1/2
    if (precision_digits > 18) return chain_from_cos<Ext>(sin(kPi * Ext(delta)));
    return chain_from_cos<double>(std::sin(kPi * delta));
}

Chain mu_chain_from_a(double a, int precision_digits) {
    if (!(a > 1.0)) throw std::domain_error("mu_chain_from_a: a must exceed 1");
    if (precision_digits > 18) return chain_from_a_impl<Ext>(Ext(a));
    return chain_from_a_impl<double>(a);
}

MuResult compute_mu_p(double p, const PipelineOptions& opts) {
    MuResult res;
    res.p = p;
    res.r = r_from_product(p);
    if (res.r >= 0.5 - 1e-12)
        throw std::domain_error("compute_mu_p: product too close to the tangency limit");
    res.omega0 = schwarz::omega0(res.r, opts.tol, solver_options(opts));
    const Chain chain = mu_from_omega0(res.omega0.value, opts.precision_digits);
    res.a = chain.a;
    res.q = chain.q;
    res.mu = chain.mu;
    return res;
}

MuResult compute_mu(long m, long n, const PipelineOptions& opts) {
    if (m == n || m < 1 || n < 1)
        throw std::domain_error("compute_mu: need distinct multiplicities m, n >= 1");
    MuResult res = compute_mu_p(static_cast<double>(m) * static_cast<double>(n), opts);
    res.m = m;
    res.n = n;
    return res;
}

namespace {

double length_of_p(double p) { return 2.0 * rings::acosh_stable(2.0 * p - 1.0); }
double p_of_length(double ell) { return (std::cosh(ell / 2.0) + 1.0) / 2.0; }

}  // namespace

double separating_length(double t, const PipelineOptions& opts) {
    if (!(t > 0.0 && t < 1.0))
        throw std::domain_error("separating_length: t must lie in (0,1)");
    // bracket mu_p(p) = t by geometric expansion
    double lo = 1.0 + 1e-9;
    double hi = 2.0;
    auto mu_at = [&](double p) { return compute_mu_p(p, opts).mu; };
    double mu_hi = mu_at(hi);
    int guard = 0;
    while (mu_hi < t) {
        hi *= 2.0;
        if (++guard > 24) throw std::domain_error("separating_length: t out of range");
        mu_hi = mu_at(hi);
    }
    double mu_lo;
    guard = 0;
    for (;;) {
        try {
            mu_lo = mu_at(lo);
        } catch (const std::exception&) {
            // solver rejects p too close to 1 (circles nearly tangent)
            lo = 1.0 + 2.0 * (lo - 1.0);
            if (++guard > 60) throw std::domain_error("separating_length: t out of range");
            continue;
        }
        if (mu_lo <= t) break;
        lo = 1.0 + 0.25 * (lo - 1.0);
        if (++guard > 60) throw std::domain_error("separating_length: t out of range");
    }
    // bisection on p until the implied length interval is below tol
    while (length_of_p(hi) - length_of_p(lo) > opts.tol) {
        const double mid = 0.5 * (lo + hi);
        if (mu_at(mid) < t)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (length_of_p(lo) + length_of_p(hi));
}

double t_for_length(double ell, const PipelineOptions& opts) {
    if (!(ell > 0.0)) throw std::domain_error("t_for_length: length must be positive");
    const double p = p_of_length(ell);
    return compute_mu_p(p, opts).mu;
}

double hempel_smith_tstar() {
    // solve 2 pi^2 / (L - pi^2/(4L)) = log(3+2sqrt2) for L = log(16 sqrt(1-r)/r)
    const double target = std::log(3.0 + 2.0 * std::sqrt(2.0));
    auto bound = [&](double r) {
        const double l = std::log(16.0 * std::sqrt(1.0 - r) / r);
        return 2.0 * kPi * kPi / (l - kPi * kPi / (4.0 * l)) - target;
    };
    const double r = numerics::bisect(bound, 1e-10, 1e-2, 1e-18);
    return std::sqrt(r);
}

ChocolateResult chocolate(const PipelineOptions& opts) {
    ChocolateResult res;
    PipelineOptions run = opts;
    run.tol = std::min(opts.tol, 1e-9);  // s0 sits deep in the cancellation zone
    const double p0 = (1.0 + std::sqrt(2.0)) / 2.0;
    res.s0_run = compute_mu_p(p0, run);
    res.s0 = res.s0_run.mu;
    res.tstar_lower = std::sqrt(2.0 * res.s0 / (1.0 + res.s0 * res.s0));
    const double t2 = res.tstar_lower * res.tstar_lower;
    res.delta_star_upper = (1.0 - t2) / (1.0 + t2);
    res.hempel_smith_tstar = hempel_smith_tstar();
    return res;
}

TwoPointResult two_point_admissible(std::complex<double> a, std::complex<double> b,
                                    const PipelineOptions& opts) {
    if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0)
        throw std::domain_error("two_point_admissible: points must lie in the open disk");
    TwoPointResult res;
    res.pseudo_dist = std::abs(b - a) / std::abs(1.0 - std::conj(a) * b);
    const MuResult m21 = compute_mu(2, 1, opts);
    res.threshold = 2.0 * m21.mu / (1.0 + m21.mu * m21.mu);
    const double eps = 1e-12;
    res.admissible_holomorphic = res.pseudo_dist >= res.threshold - eps;
    res.admissible_rational = res.pseudo_dist > res.threshold + eps;
    return res;
}

namespace {

nlohmann::ordered_json mu_json(const MuResult& r) {
    nlohmann::ordered_json j;
    if (r.m != 0) {
        j["m"] = r.m;
        j["n"] = r.n;
    }
    j["p"] = r.p;
    j["r"] = r.r;
    j["omega0"] = r.omega0.value;
    j["omega0_error_bound"] = r.omega0.error_bound;
    j["omega0_iterations"] = r.omega0.iterations;
    j["a"] = r.a;
    j["q"] = r.q;
    j["mu"] = r.mu;
    return j;
}

}  // namespace

std::string to_json(const MuResult& r) { return mu_json(r).dump(); }

std::string to_json(const ChocolateResult& r) {
    nlohmann::ordered_json j;
    j["s0"] = r.s0;
    j["tstar_lower"] = r.tstar_lower;
    j["delta_star_upper"] = r.delta_star_upper;
    j["hempel_smith_tstar"] = r.hempel_smith_tstar;
    j["s0_run"] = mu_json(r.s0_run);
    return j.dump();
}

std::string to_json(const TwoPointResult& r) {
    nlohmann::ordered_json j;
    j["pseudo_dist"] = r.pseudo_dist;
    j["threshold"] = r.threshold;
    j["admissible_holomorphic"] = r.admissible_holomorphic;
    j["admissible_rational"] = r.admissible_rational;
    return j.dump();
}

std::vector<TableRow> table_a5(const PipelineOptions& opts,
                               const std::vector<std::pair<long, long>>& extra) {
    std::vector<std::pair<long, long>> pairs = {{2, 1}, {3, 1}, {4, 1}, {3, 2}, {4, 3}};
    pairs.insert(pairs.end(), extra.begin(), extra.end());
    std::vector<TableRow> rows;
    for (auto [m, n] : pairs) rows.push_back({m, n, compute_mu(m, n, opts)});
    return rows;
}

std::string table_a5_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "m,n,p,r,omega0,a,q,mu\n";
    out.precision(10);
    for (const auto& row : rows) {
        out << row.m << ',' << row.n << ',' << row.result.p << ',' << row.result.r << ','
            << row.result.omega0.value << ',' << row.result.a << ',' << row.result.q << ','
            << row.result.mu << '\n';
    }
    return out.str();
}

}  // namespace goldberg::mu
