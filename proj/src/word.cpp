#include "arshon/word.hpp"

#include <charconv>

namespace arshon {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::invalid_order: return "InvalidOrder";
    case Errc::invalid_letter: return "InvalidLetter";
    case Errc::alpha_on_odd_order: return "AlphaOnOddOrder";
    case Errc::empty_input: return "EmptyInput";
    case Errc::occurrence_out_of_range: return "OccurrenceOutOfRange";
    case Errc::length_not_block_aligned: return "LengthNotBlockAligned";
    case Errc::invalid_block: return "InvalidBlock";
    case Errc::classification_gap: return "ClassificationGapError";
    case Errc::sync_without_unique_ancestor: return "SyncWithoutUniqueAncestor";
    case Errc::range_out_of_prefix: return "RangeOutOfPrefix";
    case Errc::malformed_word: return "MalformedWord";
    case Errc::cache_format: return "CacheFormat";
    }
    return "Unknown";
}

Alphabet::Alphabet(unsigned order) : order_(order) {
    if (order < min_order || order > max_order)
        throw Error(Errc::invalid_order, "order " + std::to_string(order) + " outside [2, 255]");
}

const char* parity_name(Parity p) noexcept { return p == Parity::even ? "even" : "odd"; }

Letter letter_shift(Letter a, long long d, Alphabet alphabet) noexcept {
    const long long n = alphabet.order();
    long long r = (static_cast<long long>(a) + d % n) % n;
    if (r < 0) r += n;
    return static_cast<Letter>(r);
}

FiniteWord::FiniteWord(Alphabet alphabet, std::vector<Letter> letters, std::size_t base_position)
    : alphabet_(alphabet), letters_(std::move(letters)), base_(base_position) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!alphabet_.contains(letters_[i]))
            throw Error(Errc::invalid_letter, "letter " + std::to_string(letters_[i]) + " at index " +
                                                  std::to_string(i) + " not below " +
                                                  std::to_string(alphabet_.order()));
    }
}

FiniteWord FiniteWord::parse(Alphabet alphabet, std::string_view text) {
    std::vector<Letter> out;
    const bool separated = text.find_first_of(", ") != std::string_view::npos;
    if (!separated && alphabet.order() <= 10) {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw Error(Errc::malformed_word, std::string("unexpected character '") + c + "'");
            out.push_back(static_cast<Letter>(c - '0'));
        }
    } else {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
            if (i == text.size()) break;
            unsigned value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc{} || value > 255)
                throw Error(Errc::malformed_word, "bad letter token at offset " + std::to_string(i));
            out.push_back(static_cast<Letter>(value));
            i = static_cast<std::size_t>(ptr - text.data());
            if (i < text.size() && text[i] != ',' && text[i] != ' ')
                throw Error(Errc::malformed_word, "bad separator at offset " + std::to_string(i));
        }
    }
    try {
        return FiniteWord(alphabet, std::move(out));
    } catch (const Error& e) {
        throw Error(Errc::malformed_word, e.what());
    }
}

FiniteWord FiniteWord::slice(std::size_t start, std::size_t length) const {
    if (start > size() || length > size() - start)
        throw Error(Errc::occurrence_out_of_range,
                    "slice [" + std::to_string(start) + ", +" + std::to_string(length) + ") of word of length " +
                        std::to_string(size()));
    FiniteWord out(alphabet_);
    out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(start),
                        letters_.begin() + static_cast<std::ptrdiff_t>(start + length));
    out.base_ = base_ + start;
    return out;
}

std::string format_letters(std::span<const Letter> letters, Alphabet alphabet) {
    std::string s;
    if (alphabet.order() <= 10) {
        s.reserve(letters.size());
        for (Letter c : letters) s.push_back(static_cast<char>('0' + c));
        return s;
    }
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(letters[i]);
    }
    return s;
}

std::string FiniteWord::to_string() const { return format_letters(letters_, alphabet_); }

FiniteWord morphism_image(MorphismKind kind, Letter a, Alphabet alphabet) {
    const unsigned n = alphabet.order();
    if (!alphabet.contains(a))
        throw Error(Errc::invalid_letter, "letter " + std::to_string(a) + " not below " + std::to_string(n));
    Parity p = Parity::even;
    switch (kind) {
    case MorphismKind::phi_even: p = Parity::even; break;
    case MorphismKind::phi_odd: p = Parity::odd; break;
    case MorphismKind::alpha:
        if (!alphabet.is_even())
            throw Error(Errc::alpha_on_odd_order, "alpha_n needs even n, got " + std::to_string(n));
        p = a % 2 == 0 ? Parity::even : Parity::odd;
        break;
    }
    std::vector<Letter> out(n);
    for (unsigned k = 0; k < n; ++k) out[k] = image_letter(p, a, k, n);
    return FiniteWord(alphabet, std::move(out));
}

FiniteWord apply_phi_operator(const FiniteWord& w, Parity start_parity) {
    if (w.empty()) throw Error(Errc::empty_input, "phi_n of the empty word");
    const unsigned n = w.order();
    FiniteWord out(w.alphabet());
    out.letters_.reserve(w.size() * n);
    Parity p = start_parity;
    for (Letter a : w.letters()) {
        for (unsigned k = 0; k < n; ++k) out.letters_.push_back(image_letter(p, a, k, n));
        p = flip(p);
    }
    return out;
}

void ArshonGenerator::expand_block() {
    const unsigned n = alphabet_.order();
    const std::size_t m = buffer_.size() / n;
    const Letter ancestor = m == 0 ? Letter{0} : buffer_[m];
    if (n == 2) {
        // Thue-Morse: 0 -> 01, 1 -> 10 regardless of index parity.
        buffer_.push_back(ancestor);
        buffer_.push_back(static_cast<Letter>(1 - ancestor));
        return;
    }
    const Parity p = parity_of(m);
    for (unsigned k = 0; k < n; ++k) buffer_.push_back(image_letter(p, ancestor, k, n));
}

Letter ArshonGenerator::next() {
    if (produced_ == buffer_.size()) expand_block();
    return buffer_[produced_++];
}

FiniteWord ArshonGenerator::take(std::size_t count) {
    while (buffer_.size() < produced_ + count) expand_block();
    FiniteWord out(alphabet_);
    out.letters_.assign(buffer_.begin() + static_cast<std::ptrdiff_t>(produced_),
                        buffer_.begin() + static_cast<std::ptrdiff_t>(produced_ + count));
    out.base_ = produced_;
    produced_ += count;
    return out;
}

FiniteWord generate_prefix(Alphabet alphabet, std::size_t length) {
    ArshonGenerator gen(alphabet);
    return gen.take(length);
}

} // namespace arshon
