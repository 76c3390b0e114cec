#include "goldberg/a0.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace goldberg::a0 {

using words::Gen;
using words::Syllable;
using words::Word;

std::pair<long, long> reduce_pair(long n0, long n1) {
    if (n0 == n1 || n0 == 0 || n1 == 0)
        throw std::domain_error("index pair must be nonzero and distinct");
    for (int guard = 0; guard < 8; ++guard) {
        if (n0 > n1 && n1 >= 1) return {n0, n1};
        if (n0 < 0 && n1 < 0) {
            n0 = -n0;
            n1 = -n1;
        } else if (n0 < 0) {
            std::swap(n0, n1);
        } else if (n1 < 0) {
            n1 = n0 - n1;  // A0(n0, n1) = A0(n0, n0 - n1)
        } else if (n0 < n1) {
            std::swap(n0, n1);
        }
    }
    throw std::logic_error("reduce_pair failed to converge");
}

namespace {

// Signed compositions of `total` into k nonzero parts with given |.|-sum.
void signed_compositions(long total, int k, long abs_sum,
                         std::vector<long>& parts,
                         const std::function<void(const std::vector<long>&)>& visit) {
    if (k == 0) {
        if (total == 0 && abs_sum == 0) visit(parts);
        return;
    }
    for (long first = -abs_sum; first <= abs_sum; ++first) {
        if (first == 0) continue;
        const long a = std::abs(first);
        const long rem_abs = abs_sum - a;
        if (rem_abs < k - 1) continue;
        const long rem_sum = total - first;
        if (std::abs(rem_sum) > rem_abs) continue;
        if ((rem_abs - std::abs(rem_sum)) % 2 != 0) continue;
        parts.push_back(first);
        signed_compositions(rem_sum, k - 1, rem_abs, parts, visit);
        parts.pop_back();
    }
}

CyclicWord interleave_canonical(const std::vector<long>& ms, const std::vector<long>& ns) {
    std::vector<Syllable> s;
    s.reserve(2 * ms.size());
    for (std::size_t j = 0; j < ms.size(); ++j) {
        s.push_back({Gen::A, ms[j]});
        s.push_back({Gen::B, ns[j]});
    }
    return words::canonical_cyclic(Word{std::move(s)});
}

// Rough upper bound on the number of composition pairs of one length batch,
// used by the search budget guard.
double batch_estimate(long n0, long n1, long length) {
    double total = 0;
    for (long sa = std::labs(n0); sa <= length - std::labs(n1); ++sa) {
        const long sb = length - sa;
        if (sb < std::labs(n1)) continue;
        if ((sa - std::labs(n0)) % 2 || (sb - std::labs(n1)) % 2) continue;
        const long kmax = std::min(sa, sb);
        for (long k = 1; k <= kmax; ++k) {
            // <= 2^k * C(s-1, k-1) signed compositions of each side
            double ca = 1, cb = 1;
            for (long t = 1; t < k; ++t) {
                ca *= 2.0 * (sa - t) / t;
                cb *= 2.0 * (sb - t) / t;
            }
            total += 4.0 * ca * cb;
            if (total > 1e18) return total;
        }
    }
    return total;
}

void enumerate_length(long n0, long n1, long length,
                      std::set<CyclicWord>& seen,
                      const std::function<void(const CyclicWord&)>& visit) {
    for (long sa = std::labs(n0); sa <= length - std::labs(n1); ++sa) {
        const long sb = length - sa;
        if (sb < std::labs(n1)) continue;
        if ((sa - std::labs(n0)) % 2 || (sb - std::labs(n1)) % 2) continue;
        const long kmax = std::min(sa, sb);
        for (long k = 1; k <= kmax; ++k) {
            std::vector<long> ms, ns;
            signed_compositions(n0, static_cast<int>(k), sa, ms, [&](const std::vector<long>& mfix) {
                std::vector<long> mcopy = mfix;
                signed_compositions(n1, static_cast<int>(k), sb, ns, [&](const std::vector<long>& nfix) {
                    CyclicWord w = interleave_canonical(mcopy, nfix);
                    if (seen.insert(w).second) visit(w);
                });
            });
        }
    }
}

}  // namespace

void enumerate_words(long n0, long n1, long max_length,
                     const std::function<void(const CyclicWord&)>& visit) {
    if (n0 == n1 || n0 == 0 || n1 == 0)
        throw std::domain_error("index pair must be nonzero and distinct");
    if (max_length < std::labs(n0) + std::labs(n1)) return;
    std::set<CyclicWord> seen;
    for (long length = std::labs(n0) + std::labs(n1); length <= max_length; ++length)
        enumerate_length(n0, n1, length, seen, visit);
}

std::vector<CyclicWord> enumerate_words_vec(long n0, long n1, long max_length) {
    std::vector<CyclicWord> out;
    enumerate_words(n0, n1, max_length, [&](const CyclicWord& w) { out.push_back(w); });
    return out;
}

A0Result exact_a0(long n0, long n1, const SearchOptions& opts) {
    A0Result res;
    res.n0 = n0;
    res.n1 = n1;
    auto [r0, r1] = reduce_pair(n0, n1);
    res.n0_reduced = r0;
    res.n1_reduced = r1;

    // seed word A^{r0} B^{r1}; by the trace lower bounds, words longer than
    // best/2 cannot improve and witnesses have length <= t_min/2
    const Word seed{{{Gen::A, r0}, {Gen::B, r1}}};
    BigInt best = abs(words::to_matrix(seed).trace());
    std::set<CyclicWord> witnesses;
    std::set<CyclicWord> seen;
    double budget_used = 0;

    const long min_len = r0 + r1;
    for (long length = min_len; BigInt(2 * length) <= best; ++length) {
        if (length % 2 == 0 && BigInt(4 * length - 6) > best) continue;
        budget_used += batch_estimate(r0, r1, length);
        if (!opts.force && budget_used > static_cast<double>(opts.budget))
            throw std::runtime_error(
                "enumeration budget exceeded; pass force to search anyway");
        enumerate_length(r0, r1, length, seen, [&](const CyclicWord& w) {
            ++res.words_examined;
            const BigInt t = abs(words::trace(w));
            if (t == 2) return;  // peripheral; cannot occur for these sums
            if (t < best) {
                best = t;
                witnesses.clear();
                witnesses.insert(w);
            } else if (t == best) {
                witnesses.insert(w);
            }
        });
    }

    res.t_min = best;
    res.witnesses.assign(witnesses.begin(), witnesses.end());
    const double t = best.convert_to<double>();
    res.a0 = std::exp(-M_PI * M_PI / std::acosh(t / 2.0));
    return res;
}

namespace {

CyclicWord apply_swap(const CyclicWord& w) {
    std::vector<Syllable> s;
    for (const auto& syl : w.syllables)
        s.push_back({syl.gen == Gen::A ? Gen::B : Gen::A, syl.exp});
    return words::canonical_cyclic(Word{std::move(s)});
}

CyclicWord apply_inv(const CyclicWord& w) {
    std::vector<Syllable> s;
    for (const auto& syl : w.syllables) s.push_back({syl.gen, -syl.exp});
    return words::canonical_cyclic(Word{std::move(s)});
}

// Orbit under {id, swap, inv, swap o inv}; key = least member, display =
// least member whose exponent sums are positive.
struct Orbit {
    CyclicWord key;
    CyclicWord display;
};

Orbit orbit_of(const CyclicWord& w) {
    const CyclicWord imgs[4] = {w, apply_swap(w), apply_inv(w), apply_swap(apply_inv(w))};
    Orbit o{imgs[0], imgs[0]};
    bool have_display = false;
    for (const auto& img : imgs) {
        if (img < o.key) o.key = img;
        const auto st = words::stats(img);
        if (st.n0 > 0 && st.n1 > 0 && (!have_display || img < o.display)) {
            o.display = img;
            have_display = true;
        }
    }
    return o;
}

}  // namespace

std::vector<CyclicWord> candidates_below_trace(long t_max) {
    const long max_odd = t_max / 2;
    const long max_even = (t_max + 6) / 4;
    std::map<CyclicWord, CyclicWord> orbits;  // key -> display
    for (long length = 2; length <= std::max(max_odd, max_even); ++length) {
        if (length % 2 == 1 && length > max_odd) continue;
        if (length % 2 == 0 && length > max_even) continue;
        for (long n0 = 1; n0 < length; ++n0) {
            for (long n1 = 1; n0 + n1 <= length; ++n1) {
                if (n0 == n1) continue;
                std::set<CyclicWord> seen;
                enumerate_length(n0, n1, length, seen, [&](const CyclicWord& w) {
                    const BigInt t = abs(words::trace(w));
                    if (t <= 2 || t > t_max) return;
                    Orbit o = orbit_of(w);
                    orbits.emplace(o.key, o.display);
                });
            }
        }
    }
    std::vector<CyclicWord> out;
    for (auto& [key, display] : orbits) out.push_back(display);
    std::sort(out.begin(), out.end(), [](const CyclicWord& x, const CyclicWord& y) {
        const auto sx = words::stats(x), sy = words::stats(y);
        if (sx.length != sy.length) return sx.length < sy.length;
        return x < y;
    });
    return out;
}

std::string to_json(const A0Result& r) {
    nlohmann::ordered_json j;
    j["n0"] = r.n0;
    j["n1"] = r.n1;
    j["n0_reduced"] = r.n0_reduced;
    j["n1_reduced"] = r.n1_reduced;
    j["t_min"] = r.t_min.str();
    j["a0"] = r.a0;
    std::vector<std::string> ws;
    for (const auto& w : r.witnesses) ws.push_back(words::to_string(w));
    j["witnesses"] = ws;
    j["words_examined"] = r.words_examined;
    return j.dump();
}

const char* const kA0CsvHeader = "n0,n1,t_min,a0,witnesses,words_examined";

std::string to_csv_row(const A0Result& r) {
    std::ostringstream out;
    out << r.n0 << ',' << r.n1 << ',' << r.t_min.str() << ',';
    out.precision(12);
    out << r.a0 << ',' << '"';
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        if (i) out << ';';
        out << words::to_string(r.witnesses[i]);
    }
    out << '"' << ',' << r.words_examined;
    return out.str();
}

}  // namespace goldberg::a0
