#include <doctest.h>

#include "arshon/phi_structure.hpp"
#include "oracle.hpp"

using namespace arshon;

namespace {

FiniteWord word(unsigned n, std::string_view text) { return FiniteWord::parse(Alphabet(n), text); }

} // namespace

TEST_CASE("prefix decomposition") {
    const auto d3 = decompose_prefix(Alphabet(3), 12);
    CHECK(d3.block_count == 4);
    CHECK(d3.ancestor.to_string() == "0120");
    CHECK(d3.block_parities == std::vector<Parity>{Parity::even, Parity::odd, Parity::even, Parity::odd});
    CHECK(d3.boundaries == std::vector<std::size_t>{0, 3, 6, 9});

    const auto d5 = decompose_prefix(Alphabet(5), 10);
    CHECK(d5.ancestor.to_string() == "01");

    const auto d4 = decompose_prefix(Alphabet(4), 4);
    CHECK(d4.block_count == 1);
    CHECK(d4.block_parities.front() == Parity::even);
}

TEST_CASE("decompose rejects bad input") {
    const auto w = generate_prefix(Alphabet(5), 40);
    CHECK_THROWS_WITH_AS(decompose(w.slice(0, 7)), doctest::Contains("aligned"), Error);
    CHECK_THROWS_AS(decompose(w.slice(3, 10)), Error);
    CHECK_THROWS_AS(decompose(word(5, "0000000000")), Error);
    CHECK_THROWS_AS(decompose(generate_prefix(Alphabet(2), 8)), Error);
    try {
        decompose(word(5, "0123401234"));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_block);
    }
}

TEST_CASE("decompose works on aligned interior occurrences") {
    const auto w = generate_prefix(Alphabet(4), 400);
    const auto d = decompose(w.slice(44, 80));
    CHECK(d.ancestor.base_position() == 11);
    CHECK(d.ancestor == generate_prefix(Alphabet(4), 31).slice(11, 20));
    CHECK(d.block_parities.front() == Parity::odd);
}

TEST_CASE("self-similarity of small prefixes") {
    for (unsigned n = 3; n <= 8; ++n) {
        const Alphabet A(n);
        CHECK(decompose_prefix(A, n * 300).ancestor == generate_prefix(A, 300));
    }
}

TEST_CASE("inverse images") {
    const auto d3 = decompose_prefix(Alphabet(3), 30);
    auto inv = inverse_image(d3, 0, 8);
    CHECK(inv.start_block == 0);
    CHECK(inv.end_block == 2);
    CHECK(inv.ancestor.to_string() == "012");

    const auto d5 = decompose_prefix(Alphabet(5), 50);
    inv = inverse_image(d5, 4, 10);
    CHECK(inv.start_block == 0);
    CHECK(inv.end_block == 2);
    CHECK(inv.ancestor.to_string() == "012");

    const auto d4 = decompose_prefix(Alphabet(4), 40);
    inv = inverse_image(d4, 4, 7);
    CHECK(inv.start_block == 1);
    CHECK(inv.end_block == 1);
    CHECK(inv.ancestor.to_string() == "1");

    CHECK_THROWS_AS(inverse_image(d4, 30, 40), Error);
    CHECK_THROWS_AS(inverse_image(d4, 7, 4), Error);
}

TEST_CASE("mordents of a_5") {
    const auto w = generate_prefix(Alphabet(5), 40);
    const auto ms = find_mordents(w, Alphabet(5));
    REQUIRE(ms.size() >= 3);
    CHECK(ms[0] == MordentOccurrence{4, 4, 0});
    CHECK(ms[1] == MordentOccurrence{8, 2, 1});
    CHECK(ms[2] == MordentOccurrence{14, 1, 2});
    CHECK(find_mordents(word(4, "0123"), Alphabet(4)).empty());
    CHECK(find_mordents(word(5, "020"), Alphabet(5)).empty());
}

TEST_CASE("mordent pair classes") {
    CHECK(mordent_class_for_gap(1, 5) == MordentClass::near);
    CHECK(mordent_class_for_gap(2, 5) == MordentClass::neutral);
    CHECK(mordent_class_for_gap(3, 5) == MordentClass::far);
    CHECK_FALSE(mordent_class_for_gap(0, 5));
    CHECK(mordent_class_for_gap(-1, 3) == MordentClass::near);

    const auto pairs5 = classify_mordent_pairs(generate_prefix(Alphabet(5), 40), Alphabet(5));
    REQUIRE(pairs5.size() >= 2);
    CHECK(pairs5[0].gap == 1);
    CHECK(pairs5[0].cls == MordentClass::near);
    CHECK(pairs5[1].left.position == 8);
    CHECK(pairs5[1].right.position == 14);
    CHECK(pairs5[1].gap == 3);
    CHECK(pairs5[1].cls == MordentClass::far);

    const auto pairs3 = classify_mordent_pairs(generate_prefix(Alphabet(3), 200), Alphabet(3));
    bool saw_overlap = false;
    for (const auto& p : pairs3) saw_overlap = saw_overlap || (p.gap == -1 && p.cls == MordentClass::near);
    CHECK(saw_overlap);

    CHECK_THROWS_AS(classify_mordent_pairs(word(5, "010101"), Alphabet(5)), Error);
}

TEST_CASE("structural interpretations") {
    const auto ex = enumerate_interpretations(word(5, "01234321040123"));
    CHECK(ex.size() == 2);

    const auto four = enumerate_interpretations(word(4, "01230321"));
    REQUIRE(four.size() == 1);
    CHECK(four[0].ancestor.to_string() == "01");
    CHECK(four[0].offset == 0);
    CHECK(four[0].borderlines == std::vector<std::size_t>{4});

    CHECK(enumerate_interpretations(word(3, "00")).empty());
    CHECK(enumerate_interpretations(FiniteWord(Alphabet(3))).empty());
    CHECK_THROWS_AS(enumerate_interpretations(generate_prefix(Alphabet(2), 4)), Error);
}

TEST_CASE("confirmation against a horizon") {
    const auto w = generate_prefix(Alphabet(5), 5000);
    const auto found = enumerate_interpretations(w.slice(21, 14), 5000);
    REQUIRE(found.size() == 2);
    for (const auto& in : found) CHECK(in.confirmed == Confirmation::confirmed);
    for (const auto& in : enumerate_interpretations(w.slice(21, 14))) CHECK(in.confirmed == Confirmation::unconfirmed);
}

TEST_CASE("every occurring alignment is found") {
    for (unsigned n : {3u, 4u, 5u, 6u}) {
        const auto w = generate_prefix(Alphabet(n), 3000);
        const auto raw = oracle::arshon_prefix(n, 3000);
        for (std::size_t len = 1; len <= 2 * n; ++len) {
            for (std::size_t i = 0; i + len <= 600; i += 7) {
                const auto z = w.slice(i, len);
                const oracle::Word zw(z.letters().begin(), z.letters().end());
                std::set<std::pair<std::size_t, unsigned>> got;
                for (const auto& in : enumerate_interpretations(z))
                    got.emplace(in.offset, in.start_parity == Parity::even ? 0u : 1u);
                for (const auto& a : oracle::occurring_alignments(raw, n, zw)) {
                    CAPTURE(n);
                    CAPTURE(z.to_string());
                    CHECK(got.count(a) == 1);
                }
            }
        }
    }
}

TEST_CASE("synchronization points") {
    const auto z = word(5, "4043212");
    const auto s = has_synchronization_point(z);
    CHECK(s.synchronized());
    CHECK(s.points == std::vector<std::size_t>{1, 6});
    REQUIRE(s.interpretation);
    CHECK(s.interpretation->ancestor.to_string() == "012");

    CHECK_FALSE(has_synchronization_point(word(5, "01234321040123")).synchronized());
    CHECK_FALSE(has_synchronization_point(word(3, "01")).synchronized());
}

TEST_CASE("two-letter words never synchronize") {
    for (unsigned n = 3; n <= 7; ++n)
        for (Letter u = 0; u < n; ++u)
            for (Letter v = 0; v < n; ++v) CHECK_FALSE(has_synchronization_point(FiniteWord(Alphabet(n), {u, v})).synchronized());
}
