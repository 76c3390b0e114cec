#include "goldberg/traces.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace goldberg::traces {

IntPoly IntPoly::constant(std::size_t num_vars, const BigInt& c) {
    IntPoly p(num_vars);
    if (c != 0) p.terms_[Monomial(num_vars, 0)] = c;
    return p;
}

IntPoly IntPoly::variable(std::size_t num_vars, std::size_t index) {
    IntPoly p(num_vars);
    Monomial m(num_vars, 0);
    m.at(index) = 1;
    p.terms_[m] = 1;
    return p;
}

BigInt IntPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void IntPoly::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    IntPoly out(lhs.nvars_);
    IntPoly::Monomial prod(lhs.nvars_);
    for (const auto& [ml, cl] : lhs.terms_) {
        for (const auto& [mr, cr] : rhs.terms_) {
            for (std::size_t i = 0; i < lhs.nvars_; ++i) prod[i] = ml[i] + mr[i];
            out.add_term(prod, cl * cr);
        }
    }
    return out;
}

IntPoly IntPoly::substitute_affine(std::size_t index, const BigInt& c0,
                                   const BigInt& c1) const {
    IntPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        unsigned e = m[index];
        if (e == 0) {
            out.add_term(m, c);
            continue;
        }
        // (c0 + c1 x)^e expanded by the binomial theorem
        BigInt binom = 1;
        for (unsigned j = 0; j <= e; ++j) {
            Monomial mm = m;
            mm[index] = j;
            BigInt pow = 1;
            for (unsigned t = 0; t < e - j; ++t) pow *= c0;
            for (unsigned t = 0; t < j; ++t) pow *= c1;
            out.add_term(mm, c * binom * pow);
            binom = binom * (e - j) / (j + 1);
        }
    }
    return out;
}

BigInt IntPoly::evaluate(const std::vector<BigInt>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluate: arity mismatch");
    BigInt total = 0;
    for (const auto& [m, c] : terms_) {
        BigInt term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned t = 0; t < m[i]; ++t) term *= point[i];
        total += term;
    }
    return total;
}

std::string IntPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += (c > 0 ? " + " : " - ");
        else if (c < 0) out += "-";
        out += abs(c).str();
        for (std::size_t i = 0; i < nvars_; ++i) {
            for (unsigned t = 0; t < m[i]; ++t) {
                out += "*";
                out += names.at(i);
            }
        }
    }
    return out;
}

BigInt min_trace_lower_bound(long length) {
    if (length < 2) throw std::domain_error("min_trace_lower_bound: length < 2");
    BigInt l = length;
    if (length % 2 == 1) return 2 * l;
    return std::max(BigInt(2 * l), BigInt(4 * l - 6));
}

namespace {

void check_pair(long n0, long n1) {
    if (!(n0 > n1 && n1 >= 1))
        throw std::domain_error("index pair must satisfy n0 > n1 >= 1");
}

}  // namespace

NStarBound nstar_bound(long n0, long n1) {
    check_pair(n0, n1);
    long n = n0 + n1;
    long nstar = (n % 2 == 1) ? n : 2 * n - 3;
    double bound = std::exp(-M_PI * M_PI / std::acosh(static_cast<double>(nstar)));
    return {nstar, bound};
}

BigInt baribaud_bound(long n0, long n1) {
    check_pair(n0, n1);
    return BigInt(2) * (2 * std::max(n0, n1) - 1);
}

double eq10_bound(long n0, long n1) {
    if (n0 == n1 || n0 == 0 || n1 == 0)
        throw std::domain_error("eq10_bound: indices must be distinct and nonzero");
    long mx = std::max(std::abs(n0), std::abs(n1));
    if (mx < 2) throw std::domain_error("eq10_bound: max index must be >= 2");
    return std::exp(-M_PI * M_PI / std::log(2.0 * static_cast<double>(mx)));
}

namespace {

// Same chain sums as words::entry_formulas, over the polynomial ring.
// Variables: m_i at index i, n_j at index k+j.
struct SymbolicEntrySums {
    int k;
    std::vector<IntPoly> m, n;
    std::vector<std::optional<IntPoly>> memo_pairs;

    explicit SymbolicEntrySums(int k_) : k(k_), memo_pairs(k + 1) {
        const std::size_t nv = 2 * static_cast<std::size_t>(k);
        for (int i = 0; i < k; ++i) m.push_back(IntPoly::variable(nv, i));
        for (int j = 0; j < k; ++j) n.push_back(IntPoly::variable(nv, k + j));
    }

    IntPoly zero() const { return IntPoly(2 * static_cast<std::size_t>(k)); }
    IntPoly one() const { return IntPoly::constant(2 * static_cast<std::size_t>(k), 1); }
    IntPoly four() const { return IntPoly::constant(2 * static_cast<std::size_t>(k), 4); }

    const IntPoly& pair_chains(int p) {
        if (!memo_pairs[p]) {
            IntPoly total = zero();
            for (int i = p; i < k; ++i)
                for (int j = i; j < k; ++j)
                    total += four() * m[i] * n[j] * (one() + pair_chains(j + 1));
            memo_pairs[p] = total;
        }
        return *memo_pairs[p];
    }

    IntPoly desc_chains(int p, std::vector<std::optional<IntPoly>>& memo) {
        if (!memo[p]) {
            IntPoly total = zero();
            for (int i = 1; i <= p; ++i)
                for (int j = 0; j < i; ++j)
                    total += four() * m[i] * n[j] * (one() + desc_chains(j, memo));
            memo[p] = total;
        }
        return *memo[p];
    }
};

}  // namespace

TracePolynomial trace_polynomial(int k, int k_max) {
    if (k < 1 || k > k_max) throw std::domain_error("trace_polynomial: k out of range");
    SymbolicEntrySums es(k);
    IntPoly a11 = es.one() + es.pair_chains(0);
    std::vector<std::optional<IntPoly>> memo(k + 1);
    IntPoly a22 = es.one();
    if (k >= 2) a22 += es.desc_chains(k - 1, memo);
    return {a11, a22};
}

ConjectureReport conjecture_check(int k, int k_max, bool allow_large) {
    const int hard_max = allow_large ? kHardConjectureKMax : k_max;
    if (k < 1 || k > hard_max)
        throw std::domain_error("conjecture_check: k out of range (pass force for k > " +
                                std::to_string(k_max) + ")");
    const IntPoly tr = trace_polynomial(k, hard_max).trace();
    const std::size_t nv = 2 * static_cast<std::size_t>(k);

    // top monomial p_1 q_1 ... p_k q_k
    IntPoly::Monomial top(nv, 1);

    ConjectureReport report;
    report.k = k;
    const long patterns = 1L << (2 * k);
    for (long bits = 0; bits < patterns; ++bits) {
        std::vector<int> signs(2 * k);
        for (int v = 0; v < 2 * k; ++v) signs[v] = (bits >> v) & 1 ? -1 : 1;
        IntPoly sub = tr;
        for (std::size_t v = 0; v < nv; ++v)
            sub = sub.substitute_affine(v, signs[v], signs[v]);
        ++report.sign_patterns_checked;

        const BigInt top_coeff = sub.coefficient(top);
        if (top_coeff == 0) {
            report.verified = false;
            report.counterexample = Counterexample{signs, top, top_coeff};
            return report;
        }
        const int expect = top_coeff > 0 ? 1 : -1;
        for (const auto& [mono, coeff] : sub.terms()) {
            const int sgn = coeff > 0 ? 1 : -1;
            if (sgn != expect) {
                report.verified = false;
                report.counterexample = Counterexample{signs, mono, coeff};
                return report;
            }
        }
    }
    report.verified = true;
    return report;
}

std::string to_json(const ConjectureReport& report) {
    nlohmann::ordered_json j;
    j["k"] = report.k;
    j["sign_patterns_checked"] = report.sign_patterns_checked;
    j["verified"] = report.verified;
    if (report.counterexample) {
        nlohmann::ordered_json c;
        c["sign_pattern"] = report.counterexample->sign_pattern;
        c["monomial"] = report.counterexample->monomial;
        c["coefficient"] = report.counterexample->coefficient.str();
        j["counterexample"] = c;
    } else {
        j["counterexample"] = nullptr;
    }
    return j.dump();
}

}  // namespace goldberg::traces
