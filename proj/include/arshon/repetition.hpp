#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "arshon/word.hpp"

namespace arshon {

/// Exponent p/q of a fractional power, kept unreduced so that p is the
/// occurrence length and q the period. Ordering and equality are by value
/// of the rational, computed exactly.
struct ExponentFraction {
    std::uint64_t p = 1;
    std::uint64_t q = 1;

    friend std::strong_ordering operator<=>(const ExponentFraction& a, const ExponentFraction& b) noexcept {
        const auto lhs = static_cast<unsigned __int128>(a.p) * b.q;
        const auto rhs = static_cast<unsigned __int128>(b.p) * a.q;
        return lhs <=> rhs;
    }
    friend bool operator==(const ExponentFraction& a, const ExponentFraction& b) noexcept {
        return (a <=> b) == std::strong_ordering::equal;
    }
    /// Same p and q, not just the same rational.
    bool identical(const ExponentFraction& o) const noexcept { return p == o.p && q == o.q; }
};

/// Maximal repetition [start, end] with its smallest period.
struct RunOccurrence {
    std::size_t start = 0;
    std::size_t end = 0;  // inclusive
    std::size_t period = 1;

    std::size_t length() const noexcept { return end - start + 1; }
    ExponentFraction exponent() const noexcept { return {length(), period}; }

    friend bool operator==(const RunOccurrence&, const RunOccurrence&) = default;
    friend auto operator<=>(const RunOccurrence& a, const RunOccurrence& b) noexcept {
        if (auto c = a.start <=> b.start; c != 0) return c;
        if (auto c = a.period <=> b.period; c != 0) return c;
        return a.end <=> b.end;
    }
};

enum class RunEngine {
    reference,  // per-start border array, Theta(L^2)
    sampled,    // per-period scan sampling every (e - 1) q positions
};

/// Least q >= 1 with w[d] == w[d + q] for all valid d. Throws Errc::empty_input.
std::size_t smallest_period(std::span<const Letter> w);

/// (|w|, smallest_period(w)). Throws Errc::empty_input.
ExponentFraction exponent_of(std::span<const Letter> w);

using RunVisitor = std::function<void(const RunOccurrence&)>;

/// Calls `visit` for every run whose exponent is >= min_exponent. A run
/// always has exponent > 1, so any min_exponent <= 1 selects all runs.
/// Visiting order is engine-specific.
void for_each_run(std::span<const Letter> w, ExponentFraction min_exponent, RunEngine engine,
                  const RunVisitor& visit);

/// Every run with exponent >= min_exponent, sorted by (start, period).
std::vector<RunOccurrence> find_runs(std::span<const Letter> w, ExponentFraction min_exponent,
                                     RunEngine engine = RunEngine::sampled);

struct MaxExponent {
    ExponentFraction exponent;
    RunOccurrence witness;
};

/// Largest exponent over all runs; ties go to the smaller start, then the
/// smaller period. nullopt when w has no repetition of exponent > 1.
std::optional<MaxExponent> max_exponent(std::span<const Letter> w, RunEngine engine = RunEngine::sampled);

struct StretchCheck {
    bool stretchable = false;
    /// The run touches the host boundary, so the answer for the infinite
    /// word is not known from this window.
    bool boundary_unknown = false;
};

/// Throws Errc::occurrence_out_of_range if the run does not fit in the host.
StretchCheck is_left_stretchable(std::span<const Letter> host, const RunOccurrence& r);
StretchCheck is_right_stretchable(std::span<const Letter> host, const RunOccurrence& r);

struct PowerFreeCheck {
    std::optional<RunOccurrence> counterexample;
    bool ok() const noexcept { return !counterexample; }
};

/// strict == false forbids exponents >= threshold, strict == true only
/// exponents > threshold. Reports the first offender in (start, period) order.
PowerFreeCheck check_power_free(std::span<const Letter> w, ExponentFraction threshold, bool strict,
                                RunEngine engine = RunEngine::sampled);

struct XYXDecomposition {
    FiniteWord x;
    FiniteWord y;
    /// Exponent >= 2: y is empty and x is one full period.
    bool exponent_at_least_two = false;
};

/// z = x y x with |xy| = period, |xyx| = length.
XYXDecomposition decompose_xyx(const FiniteWord& host, const RunOccurrence& r);

} // namespace arshon
