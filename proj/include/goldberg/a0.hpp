#pragma once

#include "goldberg/words.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace goldberg::a0 {

using words::BigInt;
using words::CyclicWord;

struct A0Result {
    long n0 = 0, n1 = 0;            // as given by the caller
    long n0_reduced = 0, n1_reduced = 0;  // after symmetry reduction
    BigInt t_min;
    std::vector<CyclicWord> witnesses;  // sorted canonical forms
    double a0 = 0.0;
    std::uint64_t words_examined = 0;
};

struct SearchOptions {
    std::uint64_t budget = 100'000'000;  // enumeration candidate cap
    bool force = false;                  // bypass the budget guard
};

// Reduces an index pair to n0 > n1 >= 1 via the symmetries
// (n0,n1) ~ (n1,n0) ~ (-n0,-n1) ~ (n0, n0-n1).
// Throws std::domain_error if n0 == n1 or either index is zero.
std::pair<long, long> reduce_pair(long n0, long n1);

// Visits every canonical cyclic word with exponent sums (n0, n1) and
// length <= max_length exactly once. Order: by length, then by k, then
// lexicographic over compositions.
void enumerate_words(long n0, long n1, long max_length,
                     const std::function<void(const CyclicWord&)>& visit);

std::vector<CyclicWord> enumerate_words_vec(long n0, long n1, long max_length);

// Exact minimal |trace| over all words with exponent sums (n0, n1), with
// every witness attaining it; a0 = exp(-pi^2 / acosh(t_min/2)).
A0Result exact_a0(long n0, long n1, const SearchOptions& opts = {});

// Candidate classes for extremal holomorphic functions: canonical cyclic
// words with 2 < |trace| <= t_max and nonzero, distinct index sums of equal
// sign, reported up to rotation, (A,B)->(B,A) and (A,B)->(A^-1,B^-1), each
// orbit shown as its representative with sums n0 > n1 >= 1.
std::vector<CyclicWord> candidates_below_trace(long t_max);

std::string to_json(const A0Result& r);
std::string to_csv_row(const A0Result& r);
extern const char* const kA0CsvHeader;

}  // namespace goldberg::a0
