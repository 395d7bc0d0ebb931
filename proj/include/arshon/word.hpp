#pragma once

// Words over Z/nZ and the Arshon construction.
//
// For n >= 3 the Arshon word a_n is the fixed point of the alternating
// operator phi_n, which maps the letter at an even index through the
// increasing rotation phi_e and the letter at an odd index through the
// decreasing rotation phi_o. For n = 2 the word is Thue-Morse.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arshon/error.hpp"

namespace arshon {

using Letter = std::uint8_t;

class Alphabet {
public:
    static constexpr unsigned min_order = 2;
    static constexpr unsigned max_order = 255;

    /// Throws Errc::invalid_order unless 2 <= order <= 255.
    explicit Alphabet(unsigned order);

    unsigned order() const noexcept { return order_; }
    bool is_even() const noexcept { return order_ % 2 == 0; }
    bool contains(long long value) const noexcept { return value >= 0 && value < order_; }

    friend bool operator==(Alphabet, Alphabet) = default;

private:
    unsigned order_;
};

enum class Parity : std::uint8_t { even, odd };

constexpr Parity parity_of(std::size_t index) noexcept {
    return index % 2 == 0 ? Parity::even : Parity::odd;
}
constexpr Parity flip(Parity p) noexcept {
    return p == Parity::even ? Parity::odd : Parity::even;
}
const char* parity_name(Parity p) noexcept;

enum class MorphismKind : std::uint8_t { phi_even, phi_odd, alpha };

/// (a + d) mod n, always in [0, n).
Letter letter_shift(Letter a, long long d, Alphabet alphabet) noexcept;

/// A finite word over an alphabet. When the word was cut out of a_n,
/// base_position records where it starts; otherwise it is 0.
class FiniteWord {
public:
    explicit FiniteWord(Alphabet alphabet) : alphabet_(alphabet) {}
    /// Validates every letter; throws Errc::invalid_letter.
    FiniteWord(Alphabet alphabet, std::vector<Letter> letters, std::size_t base_position = 0);

    /// Parses "012021" (n <= 10) or a comma/space separated list of integers.
    static FiniteWord parse(Alphabet alphabet, std::string_view text);

    Alphabet alphabet() const noexcept { return alphabet_; }
    unsigned order() const noexcept { return alphabet_.order(); }
    std::size_t base_position() const noexcept { return base_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    operator std::span<const Letter>() const noexcept { return letters_; }

    /// Subword [start, start + length); the result's base position is
    /// base_position() + start. Throws Errc::occurrence_out_of_range.
    FiniteWord slice(std::size_t start, std::size_t length) const;

    /// Digits for n <= 10, comma-separated integers above.
    std::string to_string() const;

    friend bool operator==(const FiniteWord& a, const FiniteWord& b) noexcept {
        return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
    }

private:
    friend class ArshonGenerator;
    friend FiniteWord apply_phi_operator(const FiniteWord&, Parity);

    Alphabet alphabet_;
    std::vector<Letter> letters_;
    std::size_t base_ = 0;
};

std::string format_letters(std::span<const Letter> letters, Alphabet alphabet);

/// Image of a single letter. Always n letters long.
/// Throws Errc::alpha_on_odd_order for MorphismKind::alpha with odd n.
FiniteWord morphism_image(MorphismKind kind, Letter a, Alphabet alphabet);

/// k-th letter of phi_e(a) (increasing) or phi_o(a) (decreasing).
constexpr Letter image_letter(Parity p, Letter a, unsigned k, unsigned n) noexcept {
    return p == Parity::even ? static_cast<Letter>((a + k) % n)
                             : static_cast<Letter>((a + 2 * n - 1 - k) % n);
}

/// phi_n applied to w, with the first letter taking start_parity and
/// parities alternating from there. Throws Errc::empty_input.
FiniteWord apply_phi_operator(const FiniteWord& w, Parity start_parity);

/// Streams a_n one block at a time. The emitted prefix doubles as the
/// ancestor tape: block m is the image of letter m.
class ArshonGenerator {
public:
    explicit ArshonGenerator(Alphabet alphabet) : alphabet_(alphabet) {}

    Alphabet alphabet() const noexcept { return alphabet_; }
    std::size_t produced() const noexcept { return produced_; }

    Letter next();
    /// The next `count` letters as an occurrence in a_n.
    FiniteWord take(std::size_t count);

private:
    void expand_block();

    Alphabet alphabet_;
    std::vector<Letter> buffer_;
    std::size_t produced_ = 0;
};

/// First `length` letters of a_n.
FiniteWord generate_prefix(Alphabet alphabet, std::size_t length);

} // namespace arshon
