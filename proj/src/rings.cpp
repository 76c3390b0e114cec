#include "goldberg/rings.hpp"

#include <cmath>
#include <stdexcept>

namespace goldberg::rings {

double acosh_stable(double x) {
    if (x < 1.0) throw std::domain_error("acosh_stable: x < 1");
    const double u = x - 1.0;
    if (u < 0.5) return std::log1p(u + std::sqrt(u * (x + 1.0)));
    return std::log(x + std::sqrt(x * x - 1.0));
}

RingInvariants ring_from(Field field, double value) {
    constexpr double two_pi = 2.0 * M_PI;
    RingInvariants r{};
    switch (field) {
        case Field::Trace:
            if (value <= 2.0) throw std::domain_error("ring_from: trace must exceed 2");
            r.trace = value;
            r.length = 2.0 * acosh_stable(value / 2.0);
            break;
        case Field::Length:
            if (value <= 0.0) throw std::domain_error("ring_from: length must be positive");
            r.length = value;
            break;
        case Field::Lambda:
            if (value <= 1.0) throw std::domain_error("ring_from: lambda must exceed 1");
            r.length = std::log(value);
            break;
        case Field::Modulus:
            if (value <= 0.0) throw std::domain_error("ring_from: modulus must be positive");
            r.length = M_PI / value;
            break;
        case Field::Rho:
            if (value <= 0.0 || value >= 1.0)
                throw std::domain_error("ring_from: rho must lie in (0,1)");
            r.length = -2.0 * M_PI * M_PI / std::log(value);
            break;
    }
    r.lambda = std::exp(r.length);
    r.modulus = M_PI / r.length;
    r.rho = std::exp(-two_pi * r.modulus);
    r.trace = 2.0 * std::cosh(r.length / 2.0);
    return r;
}

double grotzsch_lower_modulus(double t) {
    if (t <= 0.0 || t >= 1.0) throw std::domain_error("grotzsch_lower_modulus: t not in (0,1)");
    const double s = std::sqrt((1.0 - t) * (1.0 + t));
    return std::log((1.0 + s) * (1.0 + s) / t) / (2.0 * M_PI);
}

double aaa_lower_bound(double a0, int q) {
    if (a0 <= 0.0 || a0 >= 1.0) throw std::domain_error("aaa_lower_bound: a0 not in (0,1)");
    if (q < 1) throw std::domain_error("aaa_lower_bound: q must be >= 1");
    const double x = 16.0 * std::pow(a0, 2.0 * q);
    if (x > 1.0) return a0;
    return std::pow(1.0 + std::sqrt(1.0 - x), 2.0 / q) * a0;
}

}  // namespace goldberg::rings
