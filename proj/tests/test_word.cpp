#include <doctest.h>

#include "arshon/word.hpp"
#include "oracle.hpp"

using namespace arshon;

namespace {

template <class F>
Errc error_code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an arshon::Error");
    return Errc::malformed_word;
}

std::string prefix(unsigned n, std::size_t length) { return generate_prefix(Alphabet(n), length).to_string(); }

} // namespace

TEST_CASE("alphabet bounds") {
    CHECK(Alphabet(2).order() == 2);
    CHECK(Alphabet(255).order() == 255);
    CHECK(error_code_of([] { Alphabet a(1); }) == Errc::invalid_order);
    CHECK(error_code_of([] { Alphabet a(256); }) == Errc::invalid_order);
    CHECK(Alphabet(4).is_even());
    CHECK_FALSE(Alphabet(5).is_even());
    CHECK(Alphabet(5).contains(4));
    CHECK_FALSE(Alphabet(5).contains(5));
    CHECK_FALSE(Alphabet(5).contains(-1));
}

TEST_CASE("letter_shift wraps") {
    CHECK(letter_shift(2, 1, Alphabet(3)) == 0);
    CHECK(letter_shift(0, -1, Alphabet(5)) == 4);
    CHECK(letter_shift(3, 0, Alphabet(7)) == 3);
    CHECK(letter_shift(1, -15, Alphabet(7)) == 0);
}

TEST_CASE("morphism images") {
    CHECK(morphism_image(MorphismKind::phi_even, 0, Alphabet(3)).to_string() == "012");
    CHECK(morphism_image(MorphismKind::phi_odd, 2, Alphabet(5)).to_string() == "10432");
    CHECK(morphism_image(MorphismKind::alpha, 1, Alphabet(4)).to_string() == "0321");
    CHECK(morphism_image(MorphismKind::phi_even, 3, Alphabet(5)).to_string() == "34012");
    CHECK(morphism_image(MorphismKind::phi_odd, 0, Alphabet(3)).to_string() == "210");
    CHECK(error_code_of([] { morphism_image(MorphismKind::alpha, 0, Alphabet(5)); }) == Errc::alpha_on_odd_order);
    CHECK(error_code_of([] { morphism_image(MorphismKind::phi_even, 5, Alphabet(5)); }) == Errc::invalid_letter);
}

TEST_CASE("images are marked") {
    for (unsigned n = 3; n <= 12; ++n) {
        const Alphabet A(n);
        for (auto kind : {MorphismKind::phi_even, MorphismKind::phi_odd}) {
            std::set<Letter> firsts, lasts;
            for (Letter a = 0; a < n; ++a) {
                const auto img = morphism_image(kind, a, A);
                REQUIRE(img.size() == n);
                firsts.insert(img[0]);
                lasts.insert(img[n - 1]);
            }
            CHECK(firsts.size() == n);
            CHECK(lasts.size() == n);
        }
    }
}

TEST_CASE("phi operator alternates parities") {
    const Alphabet A(3);
    CHECK(apply_phi_operator(FiniteWord::parse(A, "0"), Parity::even).to_string() == "012");
    CHECK(apply_phi_operator(FiniteWord::parse(A, "012"), Parity::even).to_string() == "012021201");
    CHECK(apply_phi_operator(FiniteWord::parse(A, "0120"), Parity::even).to_string() == "012021201210");
    CHECK(apply_phi_operator(FiniteWord::parse(A, "1"), Parity::odd).to_string() == "021");
    CHECK(error_code_of([&] { apply_phi_operator(FiniteWord(A), Parity::even); }) == Errc::empty_input);
}

TEST_CASE("generated prefixes") {
    CHECK(prefix(3, 9) == "012021201");
    CHECK(prefix(4, 20) == "01230321230121030123");
    CHECK(prefix(5, 20) == "01234043212340121043");
    CHECK(prefix(2, 8) == "01101001");
    CHECK(prefix(3, 0).empty());
}

TEST_CASE("generator agrees with the block-rule oracle") {
    for (unsigned n : {2u, 3u, 4u, 5u, 6u, 7u, 10u, 16u, 255u}) {
        CAPTURE(n);
        const auto w = generate_prefix(Alphabet(n), 5000);
        const auto expected = oracle::arshon_prefix(n, 5000);
        CHECK(std::equal(w.letters().begin(), w.letters().end(), expected.begin(), expected.end()));
    }
}

TEST_CASE("a_n is a fixed point of the phi operator") {
    for (unsigned n = 3; n <= 9; ++n) {
        const Alphabet A(n);
        const auto w = generate_prefix(A, 400 * n);
        CHECK(apply_phi_operator(w.slice(0, 400), Parity::even) == w);
    }
}

TEST_CASE("streaming generator matches batch generation") {
    ArshonGenerator gen(Alphabet(6));
    auto first = gen.take(17);
    std::vector<Letter> all(first.letters().begin(), first.letters().end());
    for (int i = 0; i < 500; ++i) all.push_back(gen.next());
    CHECK(gen.produced() == 517);
    CHECK(FiniteWord(Alphabet(6), all) == generate_prefix(Alphabet(6), 517));
}

TEST_CASE("parsing words") {
    const Alphabet A(5);
    CHECK(FiniteWord::parse(A, "01234").size() == 5);
    CHECK(FiniteWord::parse(A, "0,1,2").to_string() == "012");
    CHECK(FiniteWord::parse(A, "0 4 3").to_string() == "043");
    const Alphabet B(12);
    const auto w = FiniteWord::parse(B, "0,11,10");
    CHECK(w.size() == 3);
    CHECK(w[1] == 11);
    CHECK(error_code_of([&] { FiniteWord::parse(A, "015"); }) == Errc::malformed_word);
    CHECK(error_code_of([&] { FiniteWord::parse(A, "0x"); }) == Errc::malformed_word);
    CHECK(error_code_of([&] { FiniteWord(A, {0, 7}); }) == Errc::invalid_letter);
}

TEST_CASE("slices keep their position in the host") {
    const auto w = generate_prefix(Alphabet(5), 40);
    const auto s = w.slice(10, 5);
    CHECK(s.base_position() == 10);
    CHECK(s.to_string() == "23401");
    CHECK(s.slice(2, 2).base_position() == 12);
    CHECK(error_code_of([&] { w.slice(38, 3); }) == Errc::occurrence_out_of_range);
}
