#include <doctest.h>

#include "qjunta/boolfn.hpp"
#include "qjunta/rng.hpp"

using namespace qjunta;

namespace {

// All 2^(2^n) functions of small arity, as truth tables.
TruthTable table_from_bits(int n, std::uint32_t bits) {
    TruthTable t(n);
    for (std::uint32_t x = 0; x < t.size(); ++x) t.set(x, (bits >> x) & 1);
    return t;
}

// General 2-input function b0 ^ b1 x1 ^ b2 x0 ^ b3 x0 x1.
AnfFunction general2(unsigned b) {
    AnfFunction f(2);
    if (b & 1) f.toggle_term(0b00);
    if (b & 2) f.toggle_term(0b10);
    if (b & 4) f.toggle_term(0b01);
    if (b & 8) f.toggle_term(0b11);
    return f;
}

// General 3-input function
// b0 ^ b1 x2 ^ b2 x1 ^ b3 x1 x2 ^ b4 x0 ^ b5 x0 x2 ^ b6 x0 x1 ^ b7 x0 x1 x2.
AnfFunction general3(unsigned b) {
    static const Term kTerm[8] = {0b000, 0b100, 0b010, 0b110, 0b001, 0b101, 0b011, 0b111};
    AnfFunction f(3);
    for (int k = 0; k < 8; ++k)
        if (b & (1u << k)) f.toggle_term(kTerm[k]);
    return f;
}

}  // namespace

TEST_CASE("eval on product terms") {
    AnfFunction f(3, {0b011, 0b100});  // x0x1 ^ x2
    CHECK(f.eval(0b011) == true);      // x0=x1=1, x2=0
    CHECK(f.eval(0b111) == false);
    CHECK(f.eval(0b100) == true);

    AnfFunction zero(3);
    for (std::uint32_t x = 0; x < 8; ++x) CHECK(zero.eval(x) == false);

    // b0 ^ b2 x0 ^ b3 x0 x1 with (b0..b3) = (1,0,1,1) at x0 = x1 = 1.
    AnfFunction g = general2(0b1101);
    CHECK(g.eval(0b11) == true);
}

TEST_CASE("eval rejects assignments wider than the arity") {
    AnfFunction f(2, {0b01});
    CHECK_THROWS_AS(f.eval(0b100), std::invalid_argument);
}

TEST_CASE("to_truth_table on small fixtures") {
    CHECK(to_truth_table(AnfFunction(1, {0b1})).bits() == std::vector<std::uint8_t>{0, 1});
    CHECK(to_truth_table(AnfFunction(1, {0b0, 0b1})).bits() == std::vector<std::uint8_t>{1, 0});
    CHECK(to_truth_table(AnfFunction(2, {0b11})).bits() ==
          std::vector<std::uint8_t>{0, 0, 0, 1});
}

TEST_CASE("arity cap is enforced") {
    CHECK_THROWS_AS(AnfFunction(kMaxTableArity + 1), std::invalid_argument);
    CHECK_THROWS_AS(TruthTable(kMaxTableArity + 1), std::invalid_argument);
}

TEST_CASE("fast transform agrees with the naive loop and round-trips") {
    for (int n = 1; n <= 3; ++n) {
        const std::uint32_t n_tables = 1u << (1u << n);
        for (std::uint32_t bits = 0; bits < n_tables; ++bits) {
            const TruthTable t = table_from_bits(n, bits);
            const AnfFunction f = from_truth_table(t);
            CHECK(to_truth_table(f) == t);
            CHECK(to_truth_table_naive(f) == t);
        }
    }
}

TEST_CASE("round trip on random 4-variable tables") {
    Rng rng(42);
    for (int rep = 0; rep < 200; ++rep) {
        TruthTable t(4);
        for (std::uint32_t x = 0; x < t.size(); ++x) t.set(x, uniform_below(rng, 2));
        CHECK(to_truth_table(from_truth_table(t)) == t);
    }
}

TEST_CASE("from_truth_table small fixtures") {
    CHECK(from_truth_table(table_from_bits(2, 0b0110)) == AnfFunction(2, {0b01, 0b10}));
    CHECK(from_truth_table(table_from_bits(2, 0b0000)) == AnfFunction(2));
    CHECK(from_truth_table(table_from_bits(2, 0b1111)) == AnfFunction(2, {0b00}));
}

TEST_CASE("negating x1 in the general 2-input function") {
    // Expansion of b0 ^ b1(x1^1) ^ b2 x0 ^ b3 x0 (x1^1):
    // b0 ^ b1 x1 ^ b1 ^ b2 x0 ^ b3 x0 x1 ^ b3 x0.
    for (unsigned b = 0; b < 16; ++b) {
        AnfFunction expected(2);
        if (b & 1) expected.toggle_term(0b00);
        if (b & 2) {
            expected.toggle_term(0b10);
            expected.toggle_term(0b00);
        }
        if (b & 4) expected.toggle_term(0b01);
        if (b & 8) {
            expected.toggle_term(0b11);
            expected.toggle_term(0b01);
        }
        CHECK(negate_variable(general2(b), 1) == expected);
    }
}

TEST_CASE("negate_variable fixtures") {
    CHECK(negate_variable(AnfFunction(3), 1) == AnfFunction(3));
    CHECK(negate_variable(AnfFunction(3, {0b111}), 0) == AnfFunction(3, {0b111, 0b110}));
    CHECK_THROWS_AS(negate_variable(AnfFunction(2), 2), std::out_of_range);
}

TEST_CASE("negation is semantically a bit flip, exhaustively for n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        const std::uint32_t n_tables = 1u << (1u << n);
        for (std::uint32_t bits = 0; bits < n_tables; ++bits) {
            const AnfFunction f = from_truth_table(table_from_bits(n, bits));
            for (int i = 0; i < n; ++i) {
                const AnfFunction r = negate_variable(f, i);
                for (std::uint32_t x = 0; x < (1u << n); ++x)
                    REQUIRE(r.eval(x) == f.eval(x ^ (1u << i)));
            }
        }
    }
}

TEST_CASE("xor composition") {
    const AnfFunction f(2, {0b01, 0b10});
    CHECK((f ^ f).is_zero());
    CHECK((AnfFunction(2, {0b01}) ^ AnfFunction(2, {0b01, 0b10})) == AnfFunction(2, {0b10}));
    CHECK_THROWS_AS(AnfFunction(2) ^ AnfFunction(3), std::invalid_argument);
}

TEST_CASE("xor of the function and its x1-negation leaves b1 ^ b3 x0") {
    for (unsigned b = 0; b < 16; ++b) {
        const AnfFunction f = general2(b);
        AnfFunction expected(2);
        if (b & 2) expected.toggle_term(0b00);
        if (b & 8) expected.toggle_term(0b01);
        CHECK((f ^ negate_variable(f, 1)) == expected);
        CHECK(derive_g(f, 1) == expected);
    }
}

TEST_CASE("derivative over x0 of the general 3-input function") {
    // b4 ^ b5 x2 ^ b6 x1 ^ b7 x1 x2.
    for (unsigned b = 0; b < 256; ++b) {
        const AnfFunction f = general3(b);
        AnfFunction expected(3);
        if (b & 0x10) expected.toggle_term(0b000);
        if (b & 0x20) expected.toggle_term(0b100);
        if (b & 0x40) expected.toggle_term(0b010);
        if (b & 0x80) expected.toggle_term(0b110);
        CHECK(derive_g(f, 0) == expected);
        CHECK((f ^ negate_variable(f, 0)) == derive_g(f, 0));
    }
}

TEST_CASE("derive_g fixtures") {
    CHECK(derive_g(AnfFunction(3, {0b010, 0b100}), 0).is_zero());
    CHECK(derive_g(AnfFunction(2, {0b01, 0b11}), 0) == AnfFunction(2, {0b00, 0b10}));
}

TEST_CASE("junta ground truth and influence fixtures") {
    const TruthTable f3 = to_truth_table(AnfFunction(3, {0b011}));  // x0x1 over 3 vars
    CHECK(is_junta_ground_truth(f3, 2));
    CHECK(influence(f3, 2) == 0.0);

    const TruthTable f2 = to_truth_table(AnfFunction(2, {0b11}));
    CHECK_FALSE(is_junta_ground_truth(f2, 0));
    CHECK(influence(f2, 0) == 0.5);

    const TruthTable f1 = to_truth_table(AnfFunction(1, {0b1}));
    CHECK_FALSE(is_junta_ground_truth(f1, 0));
    CHECK(influence(f1, 0) == 1.0);
}

TEST_CASE("derivative vanishes exactly on junta variables, exhaustively for n = 3") {
    for (std::uint32_t bits = 0; bits < 256; ++bits) {
        const TruthTable t = table_from_bits(3, bits);
        const AnfFunction f = from_truth_table(t);
        for (int i = 0; i < 3; ++i) {
            const AnfFunction g = derive_g(f, i);
            REQUIRE(g.is_zero() == is_junta_ground_truth(t, i));
            for (Term term : g.terms()) REQUIRE((term & (1u << i)) == 0);
            // Constant term of the derivative == presence of the bare x_i term.
            REQUIRE(g.eval(0) == f.has_term(1u << i));
        }
    }
}

TEST_CASE("term grammar parsing") {
    const AnfFunction f = parse_anf("x0x1 ^ x2 ^ 1");
    CHECK(f.arity() == 3);
    CHECK(f.terms() == std::vector<Term>{0b000, 0b011, 0b100});

    CHECK(parse_anf("x0*x1") == parse_anf("x0x1"));
    CHECK(parse_anf("  x1 ") == AnfFunction(2, {0b10}));
    CHECK(parse_anf("x0 ^ x0") == AnfFunction(1));         // cancellation
    CHECK(parse_anf("1") == AnfFunction(1, {0b0}));
    CHECK(parse_anf("x0", 4).arity() == 4);
    CHECK(parse_anf("x0 x1") == parse_anf("x0x1"));
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_anf("x0 ^ y1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 6);
    }
    try {
        parse_anf("x0 ^\n^ x1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 1);
    }
    CHECK_THROWS_AS(parse_anf("x"), ParseError);
    CHECK_THROWS_AS(parse_anf("x0 ^"), ParseError);
    CHECK_THROWS_AS(parse_anf(""), ParseError);
    CHECK_THROWS_AS(parse_anf("x99"), ParseError);
    CHECK_THROWS_AS(parse_anf("x0 *"), ParseError);
}

TEST_CASE("hex truth tables") {
    const TruthTable parity = parse_table_hex(3, "0x96");
    CHECK(parity == to_truth_table(parse_anf("x0 ^ x1 ^ x2")));
    CHECK(to_hex(parity) == "0x96");

    CHECK(parse_table_hex(2, "0x8") == to_truth_table(parse_anf("x0x1")));
    CHECK(parse_table_hex(2, "8") == parse_table_hex(2, "0x8"));
    CHECK(to_hex(parse_table_hex(1, "0x2")) == "0x2");

    CHECK_THROWS_AS(parse_table_hex(2, "0xg1"), ParseError);
    CHECK_THROWS_AS(parse_table_hex(1, "0xF"), ParseError);  // bits beyond 2^1
    CHECK_THROWS_AS(parse_table_hex(2, ""), ParseError);
}
