#include "arshon/audits.hpp"

#include <array>
#include <optional>
#include <string>
#include <unordered_map>

#include "arshon/repetition.hpp"

namespace arshon {

namespace {

AuditOutcome fail(AuditOutcome out, std::size_t position, std::string detail) {
    out.violation = Violation{position, std::move(detail)};
    return out;
}

PhiDecomposition decompose_full_blocks(const FiniteWord& prefix) {
    const std::size_t n = prefix.order();
    return decompose(prefix.slice(0, prefix.size() / n * n));
}

std::string letter_str(Letter a) { return std::to_string(static_cast<unsigned>(a)); }

} // namespace

AuditOutcome audit_mordent_pairs(const FiniteWord& prefix) {
    const unsigned n = prefix.order();
    AuditOutcome out;
    const auto mordents = find_mordents(prefix, prefix.alphabet());
    bool previous_neutral = false;
    for (std::size_t k = 0; k + 1 < mordents.size(); ++k) {
        const auto& l = mordents[k];
        const auto& r = mordents[k + 1];
        const long long gap = static_cast<long long>(r.position) - static_cast<long long>(l.position + 3);
        const auto cls = mordent_class_for_gap(gap, n);
        const std::size_t where = prefix.base_position() + l.position;
        if (!cls) return fail(out, where, "mordent pair with gap " + std::to_string(gap));
        const bool neutral = *cls == MordentClass::neutral;
        if (n % 2 == 1 && neutral && previous_neutral)
            return fail(out, where, "two consecutive neutral mordent pairs");
        previous_neutral = neutral;
        ++out.checked;
    }
    return out;
}

AuditOutcome audit_mordent_ancestors(const FiniteWord& prefix) {
    const Alphabet alphabet = prefix.alphabet();
    const std::size_t n = alphabet.order();
    AuditOutcome out;
    std::optional<PhiDecomposition> decomposed;
    try {
        decomposed = decompose_full_blocks(prefix);
    } catch (const Error& e) {
        if (e.code() != Errc::invalid_block) throw;
        for (std::size_t k = 0; k + n <= prefix.size(); k += n) {
            try {
                decompose(prefix.slice(k, n));
            } catch (const Error& bad) {
                return fail(out, prefix.base_position() + k, bad.what());
            }
        }
        throw;
    }
    const auto& d = *decomposed;
    const std::size_t first_block = prefix.base_position() / n;
    for (const auto& m : find_mordents(prefix, alphabet)) {
        const std::size_t at = prefix.base_position() + m.position;
        const std::size_t b1 = at / n, b2 = (at + 2) / n;
        if (b2 != b1 + 1) return fail(out, at, "mordent lies inside a single block");
        if (b2 - first_block >= d.block_count) break;
        const Letter a = d.ancestor[b1 - first_block], b = d.ancestor[b2 - first_block];
        const bool first_even = parity_of(b1) == Parity::even;
        const Letter i = m.i;
        bool ok = false;
        if (m.j == letter_shift(i, 1, alphabet)) {
            const Letter i1 = letter_shift(i, 1, alphabet), i2 = letter_shift(i, 2, alphabet);
            ok = first_even && ((a == i2 && b == i1) || (a == i1 && b == i2));
        } else {
            const Letter im = letter_shift(i, -1, alphabet);
            ok = !first_even && ((a == im && b == i) || (a == i && b == im));
        }
        if (!ok)
            return fail(out, at,
                        "mordent " + letter_str(m.i) + letter_str(m.j) + letter_str(m.i) + " has inverse image " +
                            letter_str(a) + "(" + parity_name(parity_of(b1)) + ") " + letter_str(b) + "(" +
                            parity_name(parity_of(b2)) + ")");
        ++out.checked;
    }
    return out;
}

AuditOutcome audit_mordent_ancestors(Alphabet alphabet, std::size_t length) {
    return audit_mordent_ancestors(generate_prefix(alphabet, length));
}

AuditOutcome audit_letter_distances(const FiniteWord& prefix) {
    const Alphabet alphabet = prefix.alphabet();
    const std::size_t n = alphabet.order();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::array<std::size_t, 2>> last(n, {none, none});
    AuditOutcome out;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
        const std::size_t t = prefix.base_position() + k;
        const Letter a = prefix[k];
        const std::size_t par = t % 2;
        if (const std::size_t s = last[a][1 - par]; s != none) {
            if (t - s - 1 < n - 1)
                return fail(out, s,
                            "letter " + letter_str(a) + " repeats at opposite parity after " +
                                std::to_string(t - s - 1) + " letters");
            ++out.checked;
        }
        for (long long step : {-1LL, 1LL}) {
            const Letter i = letter_shift(a, step, alphabet);
            if (const std::size_t s = last[i][par]; s != none) {
                if (t - s - 1 < n - 2)
                    return fail(out, s,
                                "letters " + letter_str(i) + " and " + letter_str(a) + " at equal parity after " +
                                    std::to_string(t - s - 1) + " letters");
                ++out.checked;
            }
        }
        last[a][par] = t;
    }
    return out;
}

AuditOutcome audit_letter_distances(Alphabet alphabet, std::size_t length) {
    return audit_letter_distances(generate_prefix(alphabet, length));
}

AuditOutcome audit_power_lifting(const FiniteWord& prefix) {
    const Alphabet alphabet = prefix.alphabet();
    const std::size_t n = alphabet.order();
    const auto d = decompose_full_blocks(prefix);
    const std::size_t base = prefix.base_position();
    const std::size_t first_block = base / n;
    const auto letters = prefix.letters();

    std::unordered_map<std::string, bool> synchronized;
    AuditOutcome out;
    std::optional<Violation> first;

    for_each_run(letters, {1, 1}, RunEngine::reference, [&](const RunOccurrence& r) {
        // Runs on the window edge may stretch in a_n itself.
        if (r.start == 0 || r.end + 1 == letters.size()) return;
        const std::size_t p = r.length(), q = r.period;
        if (p >= 2 * q) return;
        const std::size_t x_len = p - q;
        // A word of length <= 2 never has a synchronization point.
        if (x_len < 3) return;
        std::string key(reinterpret_cast<const char*>(letters.data() + r.start), x_len);
        auto it = synchronized.find(key);
        if (it == synchronized.end()) {
            const bool sync = has_synchronization_point(prefix.slice(r.start, x_len)).synchronized();
            it = synchronized.emplace(std::move(key), sync).first;
        }
        if (!it->second) return;
        ++out.checked;

        const std::size_t at = base + r.start;
        auto report = [&](std::string detail) {
            if (!first || at < first->position) first = Violation{at, std::move(detail)};
        };
        if (at % n != 0 || p % n != 0 || q % n != 0) {
            report("synchronized run of length " + std::to_string(p) + " and period " + std::to_string(q) +
                   " is not block aligned");
            return;
        }
        const std::size_t block = at / n, r_len = p / n, s_len = q / n;
        if (block - first_block + r_len > d.block_count) return;
        const FiniteWord lifted = d.ancestor.slice(block - first_block, r_len);
        if (smallest_period(lifted) != s_len) {
            report("inverse image " + lifted.to_string() + " is not a " + std::to_string(r_len) + "/" +
                   std::to_string(s_len) + "-power");
            return;
        }
        if (!(apply_phi_operator(lifted, parity_of(block)) == prefix.slice(r.start, p)))
            report("image of " + lifted.to_string() + " differs from the run");
    });
    out.violation = std::move(first);
    return out;
}

AuditOutcome audit_power_lifting(Alphabet alphabet, std::size_t length) {
    return audit_power_lifting(generate_prefix(alphabet, length));
}

AuditOutcome audit_synchronization(const FiniteWord& prefix) {
    const std::size_t n = prefix.order();
    const std::size_t base = prefix.base_position();
    AuditOutcome out;
    try {
        if (n % 2 == 1) {
            for (std::size_t s = 0; s + 3 * n <= prefix.size(); ++s) {
                const auto z = prefix.slice(s, 3 * n);
                const auto count = enumerate_interpretations(z).size();
                if (count != 1)
                    return fail(out, base + s,
                                "window " + z.to_string() + " has " + std::to_string(count) + " interpretations");
                has_synchronization_point(z);
                ++out.checked;
            }
            return out;
        }
        for (std::size_t s = 0; s < prefix.size(); ++s) {
            for (std::size_t len = 1; len <= 2 * n && s + len <= prefix.size(); ++len) {
                const auto z = prefix.slice(s, len);
                const bool has_mordent = !find_mordents(z, z.alphabet()).empty();
                if (has_mordent) {
                    const auto count = enumerate_interpretations(z).size();
                    if (count > 1)
                        return fail(out, base + s,
                                    "subword " + z.to_string() + " has a mordent and " + std::to_string(count) +
                                        " interpretations");
                }
                if (!has_synchronization_point(z).synchronized() && (len > n || has_mordent))
                    return fail(out, base + s, "unsynchronized subword " + z.to_string());
                ++out.checked;
            }
        }
    } catch (const Error& e) {
        return fail(out, base, e.what());
    }
    return out;
}

AuditOutcome audit_letter_parity(const FiniteWord& prefix) {
    AuditOutcome out;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
        const std::size_t t = prefix.base_position() + k;
        if (prefix[k] % 2 != t % 2)
            return fail(out, t, "letter " + letter_str(prefix[k]) + " at position " + std::to_string(t));
        ++out.checked;
    }
    return out;
}

} // namespace arshon
