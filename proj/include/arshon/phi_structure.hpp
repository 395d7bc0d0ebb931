#pragma once

// Block structure of a_n (n >= 3) under phi_n: decomposition into
// phi-blocks, mordents, parses of arbitrary words against the block
// grammar, and synchronization points.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arshon/word.hpp"

namespace arshon {

struct PhiDecomposition {
    Alphabet alphabet;
    std::size_t block_count = 0;
    /// Block m spans [boundaries[m], boundaries[m] + n).
    std::vector<std::size_t> boundaries;
    std::vector<Parity> block_parities;
    /// ancestor[m] is the letter whose image is block m.
    FiniteWord ancestor;
};

/// Splits a block-aligned occurrence of a_n into blocks and inverts each
/// one. Throws Errc::invalid_order for n < 3, Errc::length_not_block_aligned
/// when the size or base position is not a multiple of n, and
/// Errc::invalid_block when a block is not the image of any letter.
PhiDecomposition decompose(const FiniteWord& occurrence);

/// decompose(generate_prefix(n, length)).
PhiDecomposition decompose_prefix(Alphabet alphabet, std::size_t length);

struct InverseImage {
    std::size_t start_block = 0;
    std::size_t end_block = 0;
    FiniteWord ancestor;
};

/// Shortest run of blocks whose image covers positions [start, end].
/// Throws Errc::range_out_of_prefix.
InverseImage inverse_image(const PhiDecomposition& decomposition, std::size_t start, std::size_t end);

/// i j i with j = i +- 1 (mod n), starting at `position`.
struct MordentOccurrence {
    std::size_t position = 0;
    Letter i = 0;
    Letter j = 0;

    friend bool operator==(const MordentOccurrence&, const MordentOccurrence&) = default;
};

enum class MordentClass { near, far, neutral };
const char* mordent_class_name(MordentClass c) noexcept;

struct MordentPair {
    MordentOccurrence left;
    MordentOccurrence right;
    /// Letters strictly between the two mordents: right.position - (left.position + 3).
    /// Negative when near mordents overlap (n = 3).
    long long gap = 0;
    MordentClass cls = MordentClass::neutral;
};

/// near for n-4, neutral for n-3, far for n-2, nothing otherwise.
std::optional<MordentClass> mordent_class_for_gap(long long gap, unsigned n) noexcept;

std::vector<MordentOccurrence> find_mordents(std::span<const Letter> host, Alphabet alphabet);

/// Pairs consecutive mordents: gap n-4 is near, n-3 neutral, n-2 far.
/// Any other gap throws Errc::classification_gap.
std::vector<MordentPair> classify_mordent_pairs(std::span<const Letter> host, Alphabet alphabet);

enum class Confirmation { confirmed, unconfirmed, not_found_within_horizon };
const char* confirmation_name(Confirmation c) noexcept;

/// One parse of a word z as (suffix of a block) (whole blocks) (prefix of a block).
struct Interpretation {
    /// Letters of z before the first borderline; 0 when z starts on one.
    /// May reach |z| when z sits inside a single block.
    std::size_t offset = 0;
    /// Parity of the block holding z[0].
    Parity start_parity = Parity::even;
    /// One letter per block touched by z.
    FiniteWord ancestor;
    /// Cut positions c in (0, |z|): a borderline lies between z[c-1] and z[c].
    std::vector<std::size_t> borderlines;
    Confirmation confirmed = Confirmation::unconfirmed;
};

/// Every alignment of z against the block grammar of phi_n.
///
/// An alignment is a position of z[0] inside its block plus the parity of
/// that block. It survives when each block piece is a window of the image
/// of some letter under the parity's morphism (the letter is forced by
/// markedness), when consecutive ancestor letters differ by +-1, when the
/// ancestor is square-free, and, for even n, when each ancestor letter has
/// its block's parity. These are all necessary for the ancestor to occur in
/// a_n, so the count bounds the number of genuine interpretations above.
///
/// With horizon > 0 each ancestor is searched in the first `horizon`
/// letters of a_n at an index of matching parity; horizon == 0 skips the
/// search and leaves every result unconfirmed.
std::vector<Interpretation> enumerate_interpretations(const FiniteWord& z, std::size_t horizon = 0);

struct SyncResult {
    /// Cuts that are borderlines in every interpretation.
    std::vector<std::size_t> points;
    /// The unique interpretation when points is nonempty.
    std::optional<Interpretation> interpretation;

    bool synchronized() const noexcept { return !points.empty(); }
};

/// Intersects borderline sets over all interpretations. A nonempty
/// intersection with more than one interpretation throws
/// Errc::sync_without_unique_ancestor.
SyncResult has_synchronization_point(const FiniteWord& z, std::size_t horizon = 0);

} // namespace arshon
