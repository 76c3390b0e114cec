#pragma once

#include "goldberg/words.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace goldberg::traces {

using words::BigInt;

// Sparse multivariate polynomial with exact integer coefficients.
// Monomials are exponent vectors over a fixed number of variables;
// zero coefficients are never stored.
class IntPoly {
  public:
    using Monomial = std::vector<unsigned>;

    explicit IntPoly(std::size_t num_vars) : nvars_(num_vars) {}
    static IntPoly constant(std::size_t num_vars, const BigInt& c);
    static IntPoly variable(std::size_t num_vars, std::size_t index);

    std::size_t num_vars() const { return nvars_; }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<Monomial, BigInt>& terms() const { return terms_; }
    BigInt coefficient(const Monomial& m) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    // Replaces variable `index` by c0 + c1 * x_index, expanding exactly.
    IntPoly substitute_affine(std::size_t index, const BigInt& c0, const BigInt& c1) const;

    BigInt evaluate(const std::vector<BigInt>& point) const;
    std::string to_string(const std::vector<std::string>& names) const;

  private:
    void add_term(const Monomial& m, const BigInt& c);
    std::size_t nvars_;
    std::map<Monomial, BigInt> terms_;
};

struct NStarBound {
    long nstar;
    double a0_lower;
};

struct Counterexample {
    std::vector<int> sign_pattern;  // signs of m_1..m_k then n_1..n_k
    IntPoly::Monomial monomial;
    BigInt coefficient;
};

struct ConjectureReport {
    int k = 0;
    long sign_patterns_checked = 0;
    bool verified = false;
    std::optional<Counterexample> counterexample;
};

// Symbolic diagonal entries of A^{m_1}B^{-n_1}...A^{m_k}B^{-n_k}; the
// variables are ordered m_1..m_k, n_1..n_k.
struct TracePolynomial {
    IntPoly a11;
    IntPoly a22;
    IntPoly trace() const { return a11 + a22; }
};

// Minimal |trace| over non-peripheral words of the given length:
// 2*length for odd length, max(2*length, 4*length-6) for even.
// Throws std::domain_error for length < 2.
BigInt min_trace_lower_bound(long length);

// Requires n0 > n1 >= 1; N* = N for odd N = n0+n1, 2N-3 for even N.
NStarBound nstar_bound(long n0, long n1);

// Trace lower bound 2*(2*max(n0,n1) - 1); requires n0 > n1 >= 1.
BigInt baribaud_bound(long n0, long n1);

// exp(-pi^2 / log(2*max(n0,n1))); requires distinct indices, max >= 2.
double eq10_bound(long n0, long n1);

inline constexpr int kDefaultConjectureKMax = 4;
inline constexpr int kHardConjectureKMax = 6;

TracePolynomial trace_polynomial(int k, int k_max = kDefaultConjectureKMax);

// Substitutes m_i = +-(1+p_i), n_j = +-(1+q_j) for every sign pattern and
// checks that all coefficients share the sign of the top monomial
// +-4^k p_1 q_1 ... p_k q_k. k > k_max requires allow_large (runtime grows
// as 4^k with polynomial size 4^k).
ConjectureReport conjecture_check(int k, int k_max = kDefaultConjectureKMax,
                                  bool allow_large = false);

std::string to_json(const ConjectureReport& report);

}  // namespace goldberg::traces
