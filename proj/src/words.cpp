#include "goldberg/words.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace goldberg::words {

namespace {

// Appends a syllable to an alternation-normalized stack, merging and
// cancelling as needed.
void push_normalized(std::vector<Syllable>& out, Gen g, const BigInt& e) {
    if (e == 0) return;
    if (!out.empty() && out.back().gen == g) {
        out.back().exp += e;
        if (out.back().exp == 0) out.pop_back();
        return;
    }
    out.push_back({g, e});
}

}  // namespace

Mat2Z Mat2Z::gen_power(Gen g, const BigInt& e) {
    if (g == Gen::A) return {1, 2 * e, 0, 1};
    return {1, 0, -2 * e, 1};
}

Word parse_word(const std::string& text) {
    std::vector<Syllable> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.empty()) continue;
        Gen g;
        if (tok[0] == 'A')
            g = Gen::A;
        else if (tok[0] == 'B')
            g = Gen::B;
        else
            throw std::invalid_argument("bad word token: " + tok);
        BigInt e = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^' || tok.size() == 2)
                throw std::invalid_argument("bad word token: " + tok);
            std::string digits = tok.substr(2);
            std::size_t pos = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
            if (pos == digits.size())
                throw std::invalid_argument("bad word token: " + tok);
            for (std::size_t i = pos; i < digits.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(digits[i])))
                    throw std::invalid_argument("bad word token: " + tok);
            e = BigInt(digits);
            if (e == 0) throw std::invalid_argument("zero exponent token: " + tok);
        }
        push_normalized(out, g, e);
    }
    return Word{std::move(out)};
}

CyclicWord canonical_cyclic(const Word& w) {
    std::vector<Syllable> s = w.syllables;
    // cyclic reduction: merge first/last while they share a generator
    while (s.size() >= 2 && s.front().gen == s.back().gen) {
        s.front().exp += s.back().exp;
        s.pop_back();
        if (s.front().exp == 0) s.erase(s.begin());
    }
    if (s.empty()) throw std::domain_error("word reduces to the identity");

    std::vector<Syllable> best = s;
    std::vector<Syllable> rot = s;
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return CyclicWord{std::move(best)};
}

namespace {

Mat2Z product_of(const std::vector<Syllable>& s) {
    Mat2Z m = Mat2Z::identity();
    for (const auto& syl : s) m = m * Mat2Z::gen_power(syl.gen, syl.exp);
    return m;
}

}  // namespace

Mat2Z to_matrix(const Word& w) { return product_of(w.syllables); }
Mat2Z to_matrix(const CyclicWord& w) { return product_of(w.syllables); }

BigInt trace(const CyclicWord& w) { return to_matrix(w).trace(); }

WordStats stats(const CyclicWord& w) {
    WordStats st{0, 0, 0, 0};
    for (const auto& s : w.syllables) {
        st.length += abs(s.exp);
        if (s.gen == Gen::A) {
            st.n0 += s.exp;
            ++st.k;
        } else {
            st.n1 += s.exp;
        }
    }
    return st;
}

bool is_peripheral(const CyclicWord& w) { return abs(trace(w)) == 2; }

namespace {

// Entry sums over index chains, for the word written as
// A^{m_1} B^{-n_1} ... A^{m_k} B^{-n_k} (0-based indices below):
//
//   a11: chains i1 <= j1 < i2 <= j2 < ... <= jl,       weight 4^l
//   a12: chains i1 <= j1 < ... < il (trailing m),      weight 2*4^{l-1}
//   a21: chains j1 < i1 <= j2 < ... <= jl (leading n), weight 2*4^{l-1}
//   a22: chains i1 > j1 >= i2 > j2 >= ... > jl,        weight 4^l
struct EntrySums {
    const std::vector<BigInt>& m;
    const std::vector<BigInt>& n;
    std::size_t k;
    mutable std::vector<BigInt> memo_f, memo_r;
    mutable std::vector<char> have_f, have_r;

    EntrySums(const std::vector<BigInt>& m_, const std::vector<BigInt>& n_)
        : m(m_), n(n_), k(m_.size()),
          memo_f(k + 1), memo_r(k + 1), have_f(k + 1, 0), have_r(k + 1, 0) {}

    // ascending pair chains with first m index >= p, each pair weighted by 4
    const BigInt& pair_chains(std::size_t p) const {
        if (!have_f[p]) {
            BigInt total = 0;
            for (std::size_t i = p; i < k; ++i)
                for (std::size_t j = i; j < k; ++j)
                    total += 4 * m[i] * n[j] * (1 + pair_chains(j + 1));
            memo_f[p] = total;
            have_f[p] = 1;
        }
        return memo_f[p];
    }

    // a12 chains starting with m index >= p; final m carries the factor 2
    const BigInt& trailing_m_chains(std::size_t p) const {
        if (!have_r[p]) {
            BigInt total = 0;
            for (std::size_t i = p; i < k; ++i) {
                BigInt inner = 2;
                for (std::size_t j = i; j < k; ++j)
                    inner += 4 * n[j] * trailing_m_chains(j + 1);
                total += m[i] * inner;
            }
            memo_r[p] = total;
            have_r[p] = 1;
        }
        return memo_r[p];
    }

    // a21 chains starting with n index >= p; final n carries the factor 2
    BigInt leading_n_chains(std::size_t p, std::vector<BigInt>& memo,
                            std::vector<char>& have) const {
        if (!have[p]) {
            BigInt total = 0;
            for (std::size_t j = p; j < k; ++j) {
                BigInt inner = 2;
                for (std::size_t i = j + 1; i < k; ++i)
                    inner += 4 * m[i] * leading_n_chains(i, memo, have);
                total += n[j] * inner;
            }
            memo[p] = total;
            have[p] = 1;
        }
        return memo[p];
    }

    // descending pair chains with first m index <= p (exclusive bound p+1)
    BigInt desc_chains(std::size_t p, std::vector<BigInt>& memo,
                       std::vector<char>& have) const {
        if (!have[p]) {
            BigInt total = 0;
            for (std::size_t i = 1; i <= p; ++i)
                for (std::size_t j = 0; j < i; ++j)
                    total += 4 * m[i] * n[j] * (1 + desc_chains(j, memo, have));
            memo[p] = total;
            have[p] = 1;
        }
        return memo[p];
    }
};

}  // namespace

Mat2Z entry_formulas(const CyclicWord& w) {
    const auto& s = w.syllables;
    if (s.size() == 1) {
        const BigInt& e = s[0].exp;
        if (s[0].gen == Gen::A) return {1, 2 * e, 0, 1};
        return {1, 0, -2 * e, 1};
    }
    if (s.size() % 2 != 0 || s[0].gen != Gen::A)
        throw std::domain_error("entry_formulas: word must alternate starting with A");
    // sign conversion to the B^{-n} convention of the entry sums
    std::vector<BigInt> m, n;
    for (std::size_t i = 0; i < s.size(); i += 2) {
        m.push_back(s[i].exp);
        n.push_back(-s[i + 1].exp);
    }
    const std::size_t k = m.size();
    EntrySums es(m, n);

    Mat2Z r{0, 0, 0, 0};
    r.a = 1 + es.pair_chains(0);
    r.b = es.trailing_m_chains(0);
    {
        std::vector<BigInt> memo(k + 1);
        std::vector<char> have(k + 1, 0);
        r.c = es.leading_n_chains(0, memo, have);
    }
    {
        std::vector<BigInt> memo(k + 1);
        std::vector<char> have(k + 1, 0);
        r.d = 1 + (k >= 2 ? es.desc_chains(k - 1, memo, have) : BigInt(0));
    }
    return r;
}

BigInt tau(const Mat2Z& m) { return abs(m.a) - abs(m.b) - abs(m.c) + abs(m.d); }

bool is_decreasing(const Mat2Z& m) {
    const BigInt a = abs(m.a), b = abs(m.b), c = abs(m.c), d = abs(m.d);
    return a > b && b > d && a > c && c > d;
}

namespace {

std::string format_syllables(const std::vector<Syllable>& s) {
    std::string out;
    for (const auto& syl : s) {
        if (!out.empty()) out += ' ';
        out += (syl.gen == Gen::A) ? 'A' : 'B';
        if (syl.exp != 1) out += "^" + syl.exp.str();
    }
    return out;
}

}  // namespace

std::string to_string(const Word& w) { return format_syllables(w.syllables); }
std::string to_string(const CyclicWord& w) { return format_syllables(w.syllables); }

std::vector<CyclicWord> rotations(const CyclicWord& w) {
    std::vector<CyclicWord> out;
    std::vector<Syllable> rot = w.syllables;
    for (std::size_t i = 0; i < w.syllables.size(); ++i) {
        out.push_back(CyclicWord{rot});
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
    return out;
}

}  // namespace goldberg::words
