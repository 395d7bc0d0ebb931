#include "arshon/report.hpp"

#include <algorithm>

namespace arshon {

const char* audit_name(AuditKind kind) noexcept {
    switch (kind) {
    case AuditKind::mordents: return "mordents";
    case AuditKind::distances: return "distances";
    case AuditKind::lifting: return "lifting";
    case AuditKind::sync: return "sync";
    case AuditKind::parity: return "parity";
    case AuditKind::squarefree: return "squarefree";
    }
    return "?";
}

std::vector<AuditKind> all_audits() {
    return {AuditKind::mordents, AuditKind::distances, AuditKind::lifting,
            AuditKind::sync,     AuditKind::parity,    AuditKind::squarefree};
}

std::optional<AuditKind> parse_audit_name(std::string_view name) noexcept {
    for (AuditKind k : all_audits())
        if (name == audit_name(k)) return k;
    return std::nullopt;
}

ExponentFraction expected_exponent(unsigned n) noexcept { return {3ULL * n - 2, 2ULL * n - 2}; }

std::size_t expected_witness_period(unsigned n) noexcept { return n == 2 ? 1 : 2 * std::size_t{n} - 2; }

std::size_t default_prefix_length(unsigned n) noexcept {
    return std::max<std::size_t>(20000, 10 * std::size_t{n} * n);
}

std::size_t audit_window(AuditKind kind, unsigned n, std::size_t prefix_length) noexcept {
    switch (kind) {
    case AuditKind::lifting: return std::min<std::size_t>(prefix_length, 5000);
    case AuditKind::sync: return std::min<std::size_t>(prefix_length, n % 2 == 1 ? 5000 : 2000);
    default: return prefix_length;
    }
}

bool VerificationReport::all_audits_ok() const noexcept {
    return std::none_of(audits.begin(), audits.end(),
                        [](const AuditEntry& a) { return a.status == AuditStatus::violation; });
}

bool exponent_matches(unsigned n, const std::optional<MaxExponent>& found) noexcept {
    return found && found->exponent == expected_exponent(n) && found->witness.start == 1 &&
           found->witness.period == expected_witness_period(n);
}

namespace {

bool applicable(AuditKind kind, unsigned n) {
    if (n < 3) return false;
    switch (kind) {
    case AuditKind::distances: return n % 2 == 1;
    case AuditKind::parity: return n % 2 == 0;
    default: return true;
    }
}

AuditEntry run_audit(AuditKind kind, const FiniteWord& prefix) {
    const unsigned n = prefix.order();
    AuditEntry entry;
    entry.kind = kind;
    if (!applicable(kind, n)) return entry;
    entry.window = audit_window(kind, n, prefix.size());
    const FiniteWord window = prefix.slice(0, entry.window);
    AuditOutcome outcome;
    switch (kind) {
    case AuditKind::mordents: {
        outcome = audit_mordent_pairs(window);
        if (outcome.ok()) {
            auto ancestors = audit_mordent_ancestors(window);
            ancestors.checked += outcome.checked;
            outcome = std::move(ancestors);
        }
        break;
    }
    case AuditKind::distances: outcome = audit_letter_distances(window); break;
    case AuditKind::lifting: outcome = audit_power_lifting(window); break;
    case AuditKind::sync: outcome = audit_synchronization(window); break;
    case AuditKind::parity: outcome = audit_letter_parity(window); break;
    case AuditKind::squarefree: {
        const auto check = check_power_free(window, {2, 1}, false);
        if (check.counterexample) {
            const auto& r = *check.counterexample;
            outcome.violation = Violation{window.base_position() + r.start, "run of exponent " + std::to_string(r.length()) + "/" +
                                                       std::to_string(r.period)};
        }
        outcome.checked = window.size();
        break;
    }
    }
    entry.checked = outcome.checked;
    entry.violation = std::move(outcome.violation);
    entry.status = entry.violation ? AuditStatus::violation : AuditStatus::ok;
    return entry;
}

} // namespace

VerificationReport verify_prefix(const FiniteWord& prefix, const std::vector<AuditKind>& audits, RunEngine engine) {
    const auto started = std::chrono::steady_clock::now();
    VerificationReport report;
    report.n = prefix.order();
    report.prefix_length = prefix.size();
    report.expected = expected_exponent(report.n);
    report.max_exponent = max_exponent(prefix, engine);
    report.strictly_free_above_expected = check_power_free(prefix, report.expected, true, engine).ok();
    report.theorem_holds = exponent_matches(report.n, report.max_exponent) && report.strictly_free_above_expected;
    for (AuditKind kind : audits) report.audits.push_back(run_audit(kind, prefix));
    report.wall_time = std::chrono::steady_clock::now() - started;
    return report;
}

std::string csv_header() { return "n,length,max_p,max_q,witness_start,witness_period,theorem_holds,audit_failures"; }

std::string to_csv_row(const VerificationReport& r) {
    std::string row = std::to_string(r.n) + "," + std::to_string(r.prefix_length) + ",";
    if (r.max_exponent) {
        const auto& m = *r.max_exponent;
        row += std::to_string(m.exponent.p) + "," + std::to_string(m.exponent.q) + "," +
               std::to_string(m.witness.start) + "," + std::to_string(m.witness.period) + ",";
    } else {
        row += ",,,,";
    }
    row += r.theorem_holds ? "true," : "false,";
    bool first = true;
    for (const auto& a : r.audits) {
        if (a.status != AuditStatus::violation) continue;
        if (!first) row += ';';
        row += std::string(audit_name(a.kind)) + "@" + std::to_string(a.violation->position);
        first = false;
    }
    return row;
}

} // namespace arshon
