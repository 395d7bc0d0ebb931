#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arshon/audits.hpp"
#include "arshon/repetition.hpp"
#include "arshon/word.hpp"

namespace arshon {

enum class AuditKind { mordents, distances, lifting, sync, parity, squarefree };

const char* audit_name(AuditKind kind) noexcept;
std::optional<AuditKind> parse_audit_name(std::string_view name) noexcept;
std::vector<AuditKind> all_audits();

enum class AuditStatus { ok, violation, skipped };

struct AuditEntry {
    AuditKind kind;
    AuditStatus status = AuditStatus::skipped;
    std::size_t checked = 0;
    /// Letters of the prefix the audit looked at.
    std::size_t window = 0;
    std::optional<Violation> violation;
};

/// (3n - 2)/(2n - 2), unreduced.
ExponentFraction expected_exponent(unsigned n) noexcept;
/// Period of the expected witness at position 1: 2n - 2, or 1 for
/// Thue-Morse where the witness is the square 11.
std::size_t expected_witness_period(unsigned n) noexcept;

/// max(2 * 10^4, 10 n^2).
std::size_t default_prefix_length(unsigned n) noexcept;

/// Largest prefix each audit examines. The lifting and synchronization
/// audits are quadratic or worse in the window, so they stay bounded.
std::size_t audit_window(AuditKind kind, unsigned n, std::size_t prefix_length) noexcept;

struct VerificationReport {
    unsigned n = 0;
    std::size_t prefix_length = 0;
    std::optional<MaxExponent> max_exponent;
    ExponentFraction expected;
    /// No run above the expected exponent.
    bool strictly_free_above_expected = false;
    bool theorem_holds = false;
    std::vector<AuditEntry> audits;
    std::chrono::duration<double> wall_time{};

    bool all_audits_ok() const noexcept;
    bool passed() const noexcept { return theorem_holds && all_audits_ok(); }
};

/// Whether an exponent report matches the theorem: exact exponent, witness
/// at position 1 with the expected period.
bool exponent_matches(unsigned n, const std::optional<MaxExponent>& found) noexcept;

VerificationReport verify_prefix(const FiniteWord& prefix, const std::vector<AuditKind>& audits,
                                 RunEngine engine = RunEngine::sampled);

std::string csv_header();
std::string to_csv_row(const VerificationReport& report);

} // namespace arshon
