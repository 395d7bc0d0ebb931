#pragma once

// Empirical checks of the structural facts about a_n over a finite prefix.
// Each audit stops at the first violation (lowest position) and counts the
// items it examined so that a vacuous pass is visible.

#include <cstddef>
#include <optional>
#include <string>

#include "arshon/phi_structure.hpp"
#include "arshon/word.hpp"

namespace arshon {

struct Violation {
    std::size_t position = 0;
    std::string detail;
};

struct AuditOutcome {
    std::optional<Violation> violation;
    std::size_t checked = 0;

    bool ok() const noexcept { return !violation; }
};

/// Every consecutive mordent pair is near, neutral or far; for odd n no two
/// consecutive pairs are both neutral.
AuditOutcome audit_mordent_pairs(const FiniteWord& prefix);

/// For each mordent i(i+1)i the two blocks under it are
/// (i+2)^e (i+1)^o or (i+1)^e (i+2)^o; for i(i-1)i they are
/// (i-1)^o i^e or i^o (i-1)^e. Stated for odd n.
AuditOutcome audit_mordent_ancestors(const FiniteWord& prefix);
AuditOutcome audit_mordent_ancestors(Alphabet alphabet, std::size_t length);

/// Odd n: equal letters at positions of opposite parity are separated by
/// at least n-1 letters; i then i+-1 at positions of equal parity by at
/// least n-2.
AuditOutcome audit_letter_distances(const FiniteWord& prefix);
AuditOutcome audit_letter_distances(Alphabet alphabet, std::size_t length);

/// Every unstretchable run x y x (exponent < 2, inside the prefix) whose x
/// has a synchronization point is the image of an r/s-power starting on a
/// borderline, with p = n r and q = n s.
AuditOutcome audit_power_lifting(const FiniteWord& prefix);
AuditOutcome audit_power_lifting(Alphabet alphabet, std::size_t length);

/// Odd n: every window of length 3n has exactly one interpretation.
/// Even n: every subword of length <= 2n that contains a mordent has at
/// most one interpretation, and every subword without a synchronization
/// point has length <= n and no mordent.
AuditOutcome audit_synchronization(const FiniteWord& prefix);

/// Even n: letter parity equals position parity.
AuditOutcome audit_letter_parity(const FiniteWord& prefix);

} // namespace arshon
