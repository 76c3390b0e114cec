#pragma once

namespace goldberg::rings {

// The five equivalent descriptions of a non-degenerate ring normalized to
// {rho < |z| < 1}: modulus, inner radius rho, covering multiplier lambda,
// shortest-geodesic length, and matrix trace of the covering generator.
struct RingInvariants {
    double modulus;
    double rho;     // in (0,1)
    double lambda;  // > 1
    double length;  // = log(lambda) = 2*acosh(trace/2)
    double trace;   // > 2
};

enum class Field { Modulus, Rho, Lambda, Length, Trace };

// Populates all invariants from one of them; throws std::domain_error on
// out-of-range input (e.g. trace <= 2).
RingInvariants ring_from(Field field, double value);

// log(x + sqrt(x^2-1)) with a log1p branch near x = 1.
double acosh_stable(double x);

// Lower bound for the modulus of the unit disk minus a radial slit of
// length t: (1/2pi) * log((1+sqrt(1-t^2))^2 / t), 0 < t < 1.
double grotzsch_lower_modulus(double t);

// (1 + sqrt(1-16*a0^(2q)))^(2/q) * a0 when the radicand is nonnegative,
// else the trivial bound a0.
double aaa_lower_bound(double a0, int q);

}  // namespace goldberg::rings
