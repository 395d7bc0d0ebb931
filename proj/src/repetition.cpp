#include "arshon/repetition.hpp"

#include <algorithm>
#include <unordered_set>

namespace arshon {

namespace {

// KMP failure function: fail[j] = length of the longest proper border of w[0..j].
void failure_function(std::span<const Letter> w, std::vector<std::size_t>& fail) {
    fail.assign(w.size(), 0);
    std::size_t k = 0;
    for (std::size_t j = 1; j < w.size(); ++j) {
        while (k > 0 && w[j] != w[k]) k = fail[k - 1];
        if (w[j] == w[k]) ++k;
        fail[j] = k;
    }
}

bool meets(std::size_t length, std::size_t period, ExponentFraction min_exponent) {
    return static_cast<unsigned __int128>(length) * min_exponent.q >=
           static_cast<unsigned __int128>(min_exponent.p) * period;
}

void scan_reference(std::span<const Letter> w, ExponentFraction min_exponent, const RunVisitor& visit) {
    const std::size_t L = w.size();
    std::vector<std::size_t> fail(L);
    for (std::size_t i = 0; i < L; ++i) {
        const std::span<const Letter> s = w.subspan(i);
        const std::size_t m = s.size();
        std::size_t k = 0;
        fail[0] = 0;
        for (std::size_t j = 1; j < m; ++j) {
            while (k > 0 && s[j] != s[k]) k = fail[k - 1];
            if (s[j] == s[k]) ++k;
            fail[j] = k;
            if (k == 0) continue;
            const std::size_t len = j + 1;
            const std::size_t p = len - k;
            if (!meets(len, p, min_exponent)) continue;
            if (i > 0 && w[i - 1] == w[i - 1 + p]) continue;
            if (i + len < L && w[i + len] == w[i + len - p]) continue;
            visit(RunOccurrence{i, i + len - 1, p});
        }
    }
}

struct PairHash {
    std::size_t operator()(const std::pair<std::size_t, std::size_t>& v) const noexcept {
        return std::hash<std::size_t>{}(v.first * 0x9E3779B97F4A7C15ULL ^ v.second);
    }
};

// For each period q, a run of exponent >= e needs at least k = ceil(e q) - q
// consecutive positions d with w[d] == w[d + q]; probing every k-th position
// hits each such stretch at least once.
void scan_sampled(std::span<const Letter> w, ExponentFraction min_exponent, const RunVisitor& visit) {
    const std::size_t L = w.size();
    std::unordered_set<std::pair<std::size_t, std::size_t>, PairHash> squares;
    std::vector<std::size_t> fail;
    for (std::size_t q = 1; q < L; ++q) {
        std::size_t k = 1;
        if (min_exponent.p > min_exponent.q) {
            const auto num = static_cast<unsigned __int128>(min_exponent.p) * q;
            const auto need = static_cast<std::size_t>((num + min_exponent.q - 1) / min_exponent.q);
            k = std::max<std::size_t>(1, need - q);
        }
        const std::size_t slots = L - q;  // positions d with d + q < L
        if (k > slots) break;
        std::size_t d = k - 1;
        while (d < slots) {
            if (w[d] != w[d + q]) {
                d += k;
                continue;
            }
            std::size_t lo = d, hi = d;
            while (lo > 0 && w[lo - 1] == w[lo - 1 + q]) --lo;
            while (hi + 1 < slots && w[hi + 1] == w[hi + 1 + q]) ++hi;
            const std::size_t matches = hi - lo + 1;
            if (matches >= k) {
                const std::size_t start = lo, end = hi + q, len = end - start + 1;
                bool primitive = false;
                if (len >= 2 * q) {
                    // A smaller period p0 would divide q and its run would be
                    // this very interval, already seen at period p0.
                    primitive = squares.insert({start, end}).second;
                } else {
                    const auto z = w.subspan(start, len);
                    failure_function(z, fail);
                    primitive = len - fail.back() == q;
                }
                if (primitive && meets(len, q, min_exponent)) visit(RunOccurrence{start, end, q});
            }
            d = hi + 1 + k;
        }
    }
}

bool better(const RunOccurrence& a, const RunOccurrence& b) {
    const auto ea = a.exponent(), eb = b.exponent();
    if (ea != eb) return ea > eb;
    if (a.start != b.start) return a.start < b.start;
    return a.period < b.period;
}

void check_inside(std::span<const Letter> host, const RunOccurrence& r) {
    if (r.end >= host.size() || r.start > r.end || r.period == 0 || r.period > r.length())
        throw Error(Errc::occurrence_out_of_range,
                    "run [" + std::to_string(r.start) + ", " + std::to_string(r.end) + "] period " +
                        std::to_string(r.period) + " in host of length " + std::to_string(host.size()));
}

} // namespace

std::size_t smallest_period(std::span<const Letter> w) {
    if (w.empty()) throw Error(Errc::empty_input, "smallest period of the empty word");
    std::vector<std::size_t> fail;
    failure_function(w, fail);
    return w.size() - fail.back();
}

ExponentFraction exponent_of(std::span<const Letter> w) { return {w.size(), smallest_period(w)}; }

void for_each_run(std::span<const Letter> w, ExponentFraction min_exponent, RunEngine engine,
                  const RunVisitor& visit) {
    if (w.size() < 2) return;
    if (engine == RunEngine::reference)
        scan_reference(w, min_exponent, visit);
    else
        scan_sampled(w, min_exponent, visit);
}

std::vector<RunOccurrence> find_runs(std::span<const Letter> w, ExponentFraction min_exponent, RunEngine engine) {
    std::vector<RunOccurrence> runs;
    for_each_run(w, min_exponent, engine, [&](const RunOccurrence& r) { runs.push_back(r); });
    std::sort(runs.begin(), runs.end());
    return runs;
}

std::optional<MaxExponent> max_exponent(std::span<const Letter> w, RunEngine engine) {
    std::optional<RunOccurrence> best;
    auto keep = [&](const RunOccurrence& r) {
        if (!best || better(r, *best)) best = r;
    };
    if (engine == RunEngine::sampled) {
        // Anything of exponent >= 3/2 beats everything below it.
        for_each_run(w, {3, 2}, RunEngine::sampled, keep);
        if (!best) for_each_run(w, {1, 1}, RunEngine::reference, keep);
    } else {
        for_each_run(w, {1, 1}, RunEngine::reference, keep);
    }
    if (!best) return std::nullopt;
    return MaxExponent{best->exponent(), *best};
}

StretchCheck is_left_stretchable(std::span<const Letter> host, const RunOccurrence& r) {
    check_inside(host, r);
    if (r.start == 0) return {false, true};
    return {host[r.start - 1] == host[r.start + r.period - 1], false};
}

StretchCheck is_right_stretchable(std::span<const Letter> host, const RunOccurrence& r) {
    check_inside(host, r);
    if (r.end + 1 == host.size()) return {false, true};
    return {host[r.end + 1] == host[r.end + 1 - r.period], false};
}

PowerFreeCheck check_power_free(std::span<const Letter> w, ExponentFraction threshold, bool strict,
                                RunEngine engine) {
    PowerFreeCheck out;
    for (const auto& r : find_runs(w, threshold, engine)) {
        if (strict && r.exponent() == threshold) continue;
        out.counterexample = r;
        break;
    }
    return out;
}

XYXDecomposition decompose_xyx(const FiniteWord& host, const RunOccurrence& r) {
    check_inside(host, r);
    const std::size_t p = r.length(), q = r.period;
    if (p >= 2 * q) return {host.slice(r.start, q), host.slice(r.start + q, 0), true};
    return {host.slice(r.start, p - q), host.slice(r.start + p - q, 2 * q - p), false};
}

} // namespace arshon
