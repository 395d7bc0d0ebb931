#include "arshon/phi_structure.hpp"

#include <algorithm>
#include <functional>

#include "arshon/repetition.hpp"

namespace arshon {

namespace {

void require_block_order(Alphabet alphabet) {
    if (alphabet.order() < 3)
        throw Error(Errc::invalid_order, "block structure needs n >= 3, got " + std::to_string(alphabet.order()));
}

bool adjacent(Letter a, Letter b, unsigned n) {
    return (a + 1) % n == b || (b + 1) % n == a;
}

// Letter c with image(p, c)[window + t] == piece[t] for all t, if any.
std::optional<Letter> invert_piece(std::span<const Letter> piece, std::size_t window, Parity p, unsigned n) {
    const long long first = piece[0];
    const long long w = static_cast<long long>(window);
    long long c = p == Parity::even ? first - w : first + 1 + w;
    c %= static_cast<long long>(n);
    if (c < 0) c += n;
    const auto letter = static_cast<Letter>(c);
    for (std::size_t t = 1; t < piece.size(); ++t) {
        if (image_letter(p, letter, static_cast<unsigned>(window + t), n) != piece[t]) return std::nullopt;
    }
    return letter;
}

} // namespace

const char* mordent_class_name(MordentClass c) noexcept {
    switch (c) {
    case MordentClass::near: return "near";
    case MordentClass::far: return "far";
    case MordentClass::neutral: return "neutral";
    }
    return "?";
}

const char* confirmation_name(Confirmation c) noexcept {
    switch (c) {
    case Confirmation::confirmed: return "confirmed";
    case Confirmation::unconfirmed: return "unconfirmed";
    case Confirmation::not_found_within_horizon: return "not-found-within-horizon";
    }
    return "?";
}

PhiDecomposition decompose(const FiniteWord& occurrence) {
    const Alphabet alphabet = occurrence.alphabet();
    require_block_order(alphabet);
    const unsigned n = alphabet.order();
    if (occurrence.size() % n != 0 || occurrence.base_position() % n != 0)
        throw Error(Errc::length_not_block_aligned, "occurrence at " + std::to_string(occurrence.base_position()) +
                                                        " of length " + std::to_string(occurrence.size()) +
                                                        " is not aligned to blocks of " + std::to_string(n));
    PhiDecomposition d{alphabet, occurrence.size() / n, {}, {}, FiniteWord(alphabet)};
    const std::size_t first_block = occurrence.base_position() / n;
    std::vector<Letter> ancestors;
    ancestors.reserve(d.block_count);
    d.boundaries.reserve(d.block_count);
    d.block_parities.reserve(d.block_count);
    const auto letters = occurrence.letters();
    for (std::size_t m = 0; m < d.block_count; ++m) {
        const Parity p = parity_of(first_block + m);
        const auto block = letters.subspan(m * n, n);
        // Marked: phi_e(a) starts with a, phi_o(a) ends with a.
        const auto a = invert_piece(block, 0, p, n);
        if (!a)
            throw Error(Errc::invalid_block, "block " + std::to_string(first_block + m) + " (" +
                                                 format_letters(block, alphabet) + ") is not a " +
                                                 parity_name(p) + " image");
        d.boundaries.push_back(m * n);
        d.block_parities.push_back(p);
        ancestors.push_back(*a);
    }
    d.ancestor = FiniteWord(alphabet, std::move(ancestors), first_block);
    return d;
}

PhiDecomposition decompose_prefix(Alphabet alphabet, std::size_t length) {
    require_block_order(alphabet);
    if (length % alphabet.order() != 0)
        throw Error(Errc::length_not_block_aligned,
                    "length " + std::to_string(length) + " is not a multiple of " + std::to_string(alphabet.order()));
    return decompose(generate_prefix(alphabet, length));
}

InverseImage inverse_image(const PhiDecomposition& decomposition, std::size_t start, std::size_t end) {
    const std::size_t n = decomposition.alphabet.order();
    if (start > end || end >= decomposition.block_count * n)
        throw Error(Errc::range_out_of_prefix, "range [" + std::to_string(start) + ", " + std::to_string(end) +
                                                   "] outside " + std::to_string(decomposition.block_count * n) +
                                                   " decomposed letters");
    const std::size_t first = start / n, last = end / n;
    return {first, last, decomposition.ancestor.slice(first, last - first + 1)};
}

std::optional<MordentClass> mordent_class_for_gap(long long gap, unsigned n) noexcept {
    const long long m = n;
    if (gap == m - 4) return MordentClass::near;
    if (gap == m - 3) return MordentClass::neutral;
    if (gap == m - 2) return MordentClass::far;
    return std::nullopt;
}

std::vector<MordentOccurrence> find_mordents(std::span<const Letter> host, Alphabet alphabet) {
    const unsigned n = alphabet.order();
    std::vector<MordentOccurrence> out;
    for (std::size_t t = 0; t + 2 < host.size(); ++t) {
        if (host[t + 2] == host[t] && adjacent(host[t], host[t + 1], n))
            out.push_back({t, host[t], host[t + 1]});
    }
    return out;
}

std::vector<MordentPair> classify_mordent_pairs(std::span<const Letter> host, Alphabet alphabet) {
    require_block_order(alphabet);
    const long long n = alphabet.order();
    const auto mordents = find_mordents(host, alphabet);
    std::vector<MordentPair> pairs;
    for (std::size_t k = 0; k + 1 < mordents.size(); ++k) {
        const auto& l = mordents[k];
        const auto& r = mordents[k + 1];
        const long long gap = static_cast<long long>(r.position) - static_cast<long long>(l.position + 3);
        const auto cls = mordent_class_for_gap(gap, static_cast<unsigned>(n));
        if (!cls)
            throw Error(Errc::classification_gap, "mordents at " + std::to_string(l.position) + " and " +
                                                      std::to_string(r.position) + " have gap " +
                                                      std::to_string(gap));
        pairs.push_back({l, r, gap, *cls});
    }
    return pairs;
}

std::vector<Interpretation> enumerate_interpretations(const FiniteWord& z, std::size_t horizon) {
    const Alphabet alphabet = z.alphabet();
    require_block_order(alphabet);
    const unsigned n = alphabet.order();
    const auto letters = z.letters();
    std::vector<Interpretation> out;
    if (z.empty()) return out;

    for (unsigned phase = 0; phase < n; ++phase) {
        for (Parity first : {Parity::even, Parity::odd}) {
            std::vector<Letter> ancestors;
            Parity p = first;
            std::size_t pos = 0, window = phase;
            bool ok = true;
            while (ok && pos < letters.size()) {
                const std::size_t take = std::min<std::size_t>(n - window, letters.size() - pos);
                const auto a = invert_piece(letters.subspan(pos, take), window, p, n);
                if (!a || (alphabet.is_even() && (*a % 2 == 0) != (p == Parity::even)) ||
                    (!ancestors.empty() && !adjacent(ancestors.back(), *a, n))) {
                    ok = false;
                    break;
                }
                ancestors.push_back(*a);
                pos += take;
                window = 0;
                p = flip(p);
            }
            if (!ok) continue;
            // a_n is square-free, so neither is any ancestor that occurs in it.
            if (ancestors.size() >= 4 && !check_power_free(ancestors, {2, 1}, false).ok()) continue;
            Interpretation in{(n - phase) % n, first, FiniteWord(alphabet, std::move(ancestors)), {},
                              Confirmation::unconfirmed};
            for (std::size_t c = in.offset; c < letters.size(); c += n)
                if (c > 0) in.borderlines.push_back(c);
            out.push_back(std::move(in));
        }
    }

    if (horizon > 0 && !out.empty()) {
        const FiniteWord tape = generate_prefix(alphabet, horizon);
        const auto hay = tape.letters();
        for (auto& in : out) {
            const auto needle = in.ancestor.letters();
            in.confirmed = Confirmation::not_found_within_horizon;
            const std::boyer_moore_horspool_searcher searcher(needle.begin(), needle.end());
            for (auto it = hay.begin();;) {
                auto hit = std::search(it, hay.end(), searcher);
                if (hit == hay.end()) break;
                if (parity_of(static_cast<std::size_t>(hit - hay.begin())) == in.start_parity) {
                    in.confirmed = Confirmation::confirmed;
                    break;
                }
                it = hit + 1;
            }
        }
    }
    return out;
}

SyncResult has_synchronization_point(const FiniteWord& z, std::size_t horizon) {
    auto interpretations = enumerate_interpretations(z, horizon);
    SyncResult result;
    if (interpretations.empty()) return result;
    std::vector<std::size_t> common = interpretations.front().borderlines;
    for (std::size_t k = 1; k < interpretations.size() && !common.empty(); ++k) {
        std::vector<std::size_t> next;
        std::set_intersection(common.begin(), common.end(), interpretations[k].borderlines.begin(),
                              interpretations[k].borderlines.end(), std::back_inserter(next));
        common = std::move(next);
    }
    if (common.empty()) return result;
    if (interpretations.size() != 1)
        throw Error(Errc::sync_without_unique_ancestor,
                    "word " + z.to_string() + " has a synchronization point at " + std::to_string(common.front()) +
                        " but " + std::to_string(interpretations.size()) + " interpretations");
    result.points = std::move(common);
    result.interpretation = std::move(interpretations.front());
    return result;
}

} // namespace arshon
