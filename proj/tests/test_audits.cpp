#include <doctest.h>

#include "arshon/audits.hpp"

using namespace arshon;

namespace {

FiniteWord word(unsigned n, std::string_view text) { return FiniteWord::parse(Alphabet(n), text); }

FiniteWord with_letter(const FiniteWord& w, std::size_t at, Letter c) {
    std::vector<Letter> letters(w.letters().begin(), w.letters().end());
    letters[at] = c;
    return FiniteWord(w.alphabet(), std::move(letters));
}

} // namespace

TEST_CASE("audits pass on odd orders") {
    for (unsigned n : {3u, 5u, 7u, 9u}) {
        CAPTURE(n);
        const Alphabet A(n);
        const auto w = generate_prefix(A, 4000);
        CHECK(audit_mordent_pairs(w).ok());
        CHECK(audit_mordent_ancestors(w).ok());
        CHECK(audit_letter_distances(w).ok());
        CHECK(audit_synchronization(w.slice(0, 1500)).ok());
        CHECK(audit_mordent_ancestors(A, 4000).ok());
        CHECK(audit_letter_distances(A, 4000).ok());
    }
}

TEST_CASE("audits pass on even orders") {
    for (unsigned n : {4u, 6u, 8u}) {
        CAPTURE(n);
        const auto w = generate_prefix(Alphabet(n), 4000);
        CHECK(audit_letter_parity(w).ok());
        CHECK(audit_mordent_pairs(w).ok());
        CHECK(audit_mordent_ancestors(w).ok());
        CHECK(audit_synchronization(w.slice(0, 600)).ok());
    }
}

TEST_CASE("power lifting") {
    for (unsigned n : {3u, 4u, 5u}) {
        const auto outcome = audit_power_lifting(Alphabet(n), 2000);
        CHECK(outcome.ok());
        CHECK(outcome.checked > 0);
    }
}

TEST_CASE("letter distance tightness in a_5") {
    // 0 at position 0 (even block) and at 5 (odd block), n - 1 apart
    const auto w = generate_prefix(Alphabet(5), 10);
    CHECK(w[0] == 0);
    CHECK(w[5] == 0);
    CHECK(audit_letter_distances(w).ok());
}

TEST_CASE("audits report violations") {
    const auto a4 = generate_prefix(Alphabet(4), 200);
    const auto broken = with_letter(a4, 11, static_cast<Letter>((a4[11] + 1) % 4));
    const auto parity = audit_letter_parity(broken);
    REQUIRE_FALSE(parity.ok());
    CHECK(parity.violation->position == 11);

    const auto close = audit_letter_distances(word(5, "0012"));
    CHECK_FALSE(close.ok());

    CHECK_FALSE(audit_mordent_pairs(word(5, "0101234")).ok());
    CHECK_FALSE(audit_synchronization(word(3, "000000000000")).ok());

    const auto a5 = generate_prefix(Alphabet(5), 200);
    CHECK_FALSE(audit_mordent_ancestors(with_letter(a5, 6, 1)).ok());
}

TEST_CASE("consecutive neutral pairs are rejected for odd n") {
    // n = 5 neutral gap is 2: mordents at 0, 5, 10
    CHECK_FALSE(audit_mordent_pairs(word(5, "0103412143212")).ok());
}
