#pragma once

// Slow, obviously-correct reference implementations used only by the tests.
// Nothing here calls into the library beyond plain data types.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using Word = std::vector<std::uint8_t>;

// Letter i of a_n straight from the block rule: block m of a_n is the image of
// letter m under the morphism of block m's parity.
inline std::uint8_t arshon_letter(unsigned n, std::size_t i) {
    if (n == 2) return static_cast<std::uint8_t>(std::popcount(i) & 1);
    const std::size_t m = i / n, k = i % n;
    const unsigned a = m == 0 ? 0 : arshon_letter(n, m);
    if (m % 2 == 0) return static_cast<std::uint8_t>((a + k) % n);
    return static_cast<std::uint8_t>((a + 2 * n - 1 - k) % n);
}

inline Word arshon_prefix(unsigned n, std::size_t length) {
    Word w(length);
    for (std::size_t i = 0; i < length; ++i) w[i] = arshon_letter(n, i);
    return w;
}

inline bool has_period(const Word& w, std::size_t from, std::size_t len, std::size_t q) {
    for (std::size_t d = 0; d + q < len; ++d)
        if (w[from + d] != w[from + d + q]) return false;
    return true;
}

inline std::size_t smallest_period(const Word& w, std::size_t from, std::size_t len) {
    for (std::size_t q = 1; q < len; ++q)
        if (has_period(w, from, len, q)) return q;
    return len;
}

// (start, end inclusive, period)
using Run = std::tuple<std::size_t, std::size_t, std::size_t>;

// For each period q, every maximal stretch of positions with w[k] == w[k+q]
// gives a maximal q-periodic factor. It is a run when q is also its smallest
// period.
inline std::set<Run> runs(const Word& w) {
    std::set<Run> out;
    const std::size_t L = w.size();
    for (std::size_t q = 1; q < L; ++q) {
        std::size_t k = 0;
        while (k + q < L) {
            if (w[k] != w[k + q]) {
                ++k;
                continue;
            }
            const std::size_t begin = k;
            while (k + q < L && w[k] == w[k + q]) ++k;
            const std::size_t len = (k - begin) + q;
            if (smallest_period(w, begin, len) == q) out.emplace(begin, begin + len - 1, q);
        }
    }
    return out;
}

// Distinct (offset, parity) alignments under which z actually occurs in a
// prefix of a_n. A lower bound for the structural interpretation count.
inline std::set<std::pair<std::size_t, unsigned>> occurring_alignments(const Word& prefix, unsigned n,
                                                                       const Word& z) {
    std::set<std::pair<std::size_t, unsigned>> out;
    if (z.empty() || z.size() > prefix.size()) return out;
    for (std::size_t i = 0; i + z.size() <= prefix.size(); ++i)
        if (std::equal(z.begin(), z.end(), prefix.begin() + static_cast<std::ptrdiff_t>(i)))
            out.emplace((n - i % n) % n, static_cast<unsigned>((i / n) % 2));
    return out;
}

inline Word random_word(std::mt19937_64& rng, unsigned alphabet, std::size_t length) {
    std::uniform_int_distribution<unsigned> letter(0, alphabet - 1);
    Word w(length);
    for (auto& c : w) c = static_cast<std::uint8_t>(letter(rng));
    return w;
}

} // namespace oracle
