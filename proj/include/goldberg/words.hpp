#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace goldberg::words {

using BigInt = boost::multiprecision::cpp_int;

enum class Gen : std::uint8_t { A = 0, B = 1 };

// One factor A^e or B^e of a word, e != 0.
struct Syllable {
    Gen gen;
    BigInt exp;

    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend bool operator<(const Syllable& lhs, const Syllable& rhs) {
        if (lhs.gen != rhs.gen) return lhs.gen < rhs.gen;
        return lhs.exp < rhs.exp;
    }
};

// Alternating sequence of syllables; empty sequence is the identity.
struct Word {
    std::vector<Syllable> syllables;

    bool empty() const { return syllables.empty(); }
    friend bool operator==(const Word&, const Word&) = default;
};

// Conjugacy-class representative: the lexicographically least rotation,
// with first/last syllables also alternating.
struct CyclicWord {
    std::vector<Syllable> syllables;

    std::size_t size() const { return syllables.size(); }
    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
    friend bool operator<(const CyclicWord& lhs, const CyclicWord& rhs) {
        return lhs.syllables < rhs.syllables;
    }
};

struct Mat2Z {
    BigInt a, b, c, d;

    BigInt trace() const { return a + d; }
    BigInt det() const { return a * d - b * c; }
    friend bool operator==(const Mat2Z&, const Mat2Z&) = default;
    friend Mat2Z operator*(const Mat2Z& x, const Mat2Z& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    static Mat2Z identity() { return {1, 0, 0, 1}; }
    static Mat2Z gen_power(Gen g, const BigInt& e);
};

struct WordStats {
    BigInt length;  // sum of |exponents|
    BigInt n0;      // sum of A exponents
    BigInt n1;      // sum of B exponents
    std::size_t k;  // number of A syllables
};

// Parses whitespace-separated tokens `A^k` / `B^k` (`^1` omissible) and
// normalizes: adjacent same-generator syllables merged, zeros dropped.
// Throws std::invalid_argument on malformed or zero-exponent tokens.
Word parse_word(const std::string& text);

// Cyclic reduction (first/last merge) followed by rotation canonicalization.
// Throws std::domain_error if the word reduces to the identity.
CyclicWord canonical_cyclic(const Word& w);

Mat2Z to_matrix(const Word& w);
Mat2Z to_matrix(const CyclicWord& w);

BigInt trace(const CyclicWord& w);
WordStats stats(const CyclicWord& w);
bool is_peripheral(const CyclicWord& w);

// The matrix rebuilt from the closed-form entry sums over index chains,
// an oracle independent of the matrix product in to_matrix.
Mat2Z entry_formulas(const CyclicWord& w);

BigInt tau(const Mat2Z& m);
bool is_decreasing(const Mat2Z& m);

std::string to_string(const Word& w);
std::string to_string(const CyclicWord& w);

// All rotations of the syllable sequence (for property tests).
std::vector<CyclicWord> rotations(const CyclicWord& w);

}  // namespace goldberg::words
