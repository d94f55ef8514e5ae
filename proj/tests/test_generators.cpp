#include <doctest.h>

#include <bit>

#include "qjunta/generators.hpp"

using namespace qjunta;

TEST_CASE("generators are deterministic in the seed") {
    Rng a(314), b(314);
    CHECK(gen_random_function(5, a) == gen_random_function(5, b));
    CHECK(gen_random_affine(6, a) == gen_random_affine(6, b));
    CHECK(gen_single_term(6, 3, a) == gen_single_term(6, 3, b));
    CHECK(gen_random_junta(5, 2, a) == gen_random_junta(5, 2, b));
    CHECK(gen_random_dependent(4, 1, a) == gen_random_dependent(4, 1, b));
}

TEST_CASE("random tables are balanced on average") {
    Rng rng(1234);
    int ones = 0;
    const int reps = 100;
    for (int rep = 0; rep < reps; ++rep) {
        const TruthTable t = gen_random_function(6, rng);
        CHECK(t.arity() == 6);
        for (std::uint32_t x = 0; x < t.size(); ++x) ones += t(x);
    }
    const int total = reps * 64;  // mean 3200, sigma = 40
    CHECK(ones > total / 2 - 240);
    CHECK(ones < total / 2 + 240);
}

TEST_CASE("random affine functions are affine and use every coefficient") {
    Rng rng(55);
    bool saw_term[7] = {};
    for (int rep = 0; rep < 200; ++rep) {
        const AnfFunction f = gen_random_affine(6, rng);
        for (Term t : f.terms()) {
            REQUIRE(std::popcount(t) <= 1);
            if (t == 0)
                saw_term[6] = true;
            else
                saw_term[std::countr_zero(t)] = true;
        }
        // affine: f(x) ^ f(y) ^ f(x ^ y) ^ f(0) = 0
        Rng probe(rep);
        for (int k = 0; k < 8; ++k) {
            const auto x = static_cast<std::uint32_t>(uniform_below(probe, 64));
            const auto y = static_cast<std::uint32_t>(uniform_below(probe, 64));
            REQUIRE((f.eval(x) ^ f.eval(y) ^ f.eval(x ^ y) ^ f.eval(0)) == false);
        }
    }
    for (bool seen : saw_term) CHECK(seen);
}

TEST_CASE("single-term fixtures have exactly m distinct variables") {
    Rng rng(77);
    bool used[6] = {};
    for (int rep = 0; rep < 100; ++rep) {
        const AnfFunction f = gen_single_term(6, 3, rng);
        REQUIRE(f.terms().size() == 1);
        const Term t = f.terms()[0];
        REQUIRE(std::popcount(t) == 3);
        for (int j = 0; j < 6; ++j)
            if (t & (1u << j)) used[j] = true;
    }
    for (bool seen : used) CHECK(seen);  // every variable gets picked eventually

    CHECK(gen_single_term(4, 4, rng).terms()[0] == 0b1111);
    CHECK_THROWS_AS(gen_single_term(4, 0, rng), std::invalid_argument);
    CHECK_THROWS_AS(gen_single_term(4, 5, rng), std::invalid_argument);
}

TEST_CASE("majority tables") {
    const TruthTable m3 = gen_majority(3);
    const std::vector<std::uint8_t> want3{0, 0, 0, 1, 0, 1, 1, 1};
    CHECK(m3.bits() == want3);

    CHECK(gen_majority(2) == to_truth_table(parse_anf("x0x1")));

    const TruthTable m4 = gen_majority(4);
    for (std::uint32_t x = 0; x < 16; ++x)
        CHECK(m4(x) == (std::popcount(x) > 2));
}

TEST_CASE("junta fixtures really ignore the chosen variable") {
    Rng rng(9);
    for (int n : {2, 4, 6}) {
        for (int var = 0; var < n; ++var) {
            const TruthTable t = gen_random_junta(n, var, rng);
            CHECK(t.arity() == n);
            CHECK(is_junta_ground_truth(t, var));
        }
    }
    CHECK_THROWS_AS(gen_random_junta(3, 3, rng), std::out_of_range);
}

TEST_CASE("junta fixtures keep the other variables live on average") {
    Rng rng(15);
    int live = 0, cases = 0;
    for (int rep = 0; rep < 50; ++rep) {
        const TruthTable t = gen_random_junta(5, 2, rng);
        for (int var : {0, 1, 3, 4}) {
            ++cases;
            if (!is_junta_ground_truth(t, var)) ++live;
        }
    }
    // a random 16-entry table degenerates in a given variable with
    // probability 2^-8, so a couple of misses in 200 cases are expected
    CHECK(live >= cases - 5);
}

TEST_CASE("dependent fixtures always have positive influence") {
    Rng rng(21);
    for (int n : {1, 3, 5}) {
        for (int var = 0; var < n; ++var) {
            const TruthTable t = gen_random_dependent(n, var, rng);
            CHECK_FALSE(is_junta_ground_truth(t, var));
            CHECK(influence(t, var) > 0.0);
        }
    }
}
