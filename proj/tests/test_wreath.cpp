#include <doctest.h>

#include <emlab/wreath.hpp>

using namespace emlab;

namespace {

ColoredPermutation cp(unsigned r, std::vector<unsigned> values, std::vector<unsigned> colors) {
    unsigned n = static_cast<unsigned>(values.size());
    return ColoredPermutation(n, r, std::move(values), std::move(colors));
}

// the two elements separating involutions from absolute involutions at r=4
const ColoredPermutation kInvNotAbs = cp(4, {3, 2, 1, 4, 6, 5}, {1, 0, 3, 2, 3, 1});
const ColoredPermutation kAbsNotInv = cp(4, {3, 2, 1, 4, 6, 5}, {1, 0, 1, 2, 3, 3});

}  // namespace

TEST_CASE("construction validates window data") {
    CHECK_THROWS_AS(cp(2, {1, 1}, {0, 0}), ParameterError);
    CHECK_THROWS_AS(cp(2, {1, 3}, {0, 0}), ParameterError);
    CHECK_THROWS_AS(cp(2, {1, 2}, {0, 2}), ParameterError);
}

TEST_CASE("composition, identity and inverse laws") {
    ColoredPermutation w = cp(2, {2, 1}, {0, 1});
    ColoredPermutation id = ColoredPermutation::identity(2, 2);
    CHECK(compose(id, w) == w);
    CHECK(compose(w, id) == w);
    CHECK(compose(w, inverse(w)) == id);
    CHECK(compose(inverse(w), w) == id);
    // colors add mod 2 through composition
    ColoredPermutation s = cp(2, {1}, {1});
    CHECK(compose(s, s) == ColoredPermutation::identity(1, 2));
    CHECK_THROWS_AS(compose(w, s), DimensionError);
}

TEST_CASE("inverse negates colors along the way") {
    CHECK(inverse(ColoredPermutation::identity(3, 4)) == ColoredPermutation::identity(3, 4));
    CHECK(inverse(cp(4, {1}, {1})) == cp(4, {1}, {3}));
    CHECK(inverse(cp(2, {2, 1}, {0, 1})) == cp(2, {2, 1}, {1, 0}));
}

TEST_CASE("bar is an involution commuting with inverse") {
    CHECK(bar(bar(kInvNotAbs)) == kInvNotAbs);
    CHECK(bar(cp(1, {2, 1}, {0, 0})) == cp(1, {2, 1}, {0, 0}));
    CHECK(bar(kInvNotAbs) == cp(4, {3, 2, 1, 4, 6, 5}, {3, 0, 1, 2, 1, 3}));
    // exhaustive commutation check
    for (unsigned r = 1; r <= 4; ++r)
        for (unsigned n = 0; n <= 3; ++n)
            enumerate(n, r, Subset::all, [&](const ColoredPermutation& w) {
                CHECK(bar(inverse(w)) == inverse(bar(w)));
            });
}

TEST_CASE("group laws hold exhaustively for small n, r") {
    for (unsigned r = 1; r <= 3; ++r) {
        for (unsigned n = 0; n <= 2; ++n) {
            auto all = enumerate_vector(n, r, Subset::all);
            for (const auto& a : all)
                for (const auto& b : all)
                    for (const auto& c : all)
                        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        }
    }
    // associativity at n=3 sampled across the full group via fixed stride
    auto all = enumerate_vector(3, 3, Subset::all);
    for (std::size_t i = 0; i < all.size(); i += 7)
        for (std::size_t j = 0; j < all.size(); j += 11)
            for (std::size_t k = 0; k < all.size(); k += 13)
                CHECK(compose(compose(all[i], all[j]), all[k]) ==
                      compose(all[i], compose(all[j], all[k])));
}

TEST_CASE("cycle type collects cycle lengths by color sum") {
    auto id_ct = cycle_type(ColoredPermutation::identity(4, 3));
    CHECK(id_ct.rtype.components[0].parts == std::vector<unsigned>{1, 1, 1, 1});
    CHECK(id_ct.rtype.components[1].empty());
    CHECK(id_ct.cycle_color_counts == std::vector<unsigned>{4, 0, 0});

    auto ct = cycle_type(kInvNotAbs);
    CHECK(ct.rtype.components[0].parts == std::vector<unsigned>{2, 2, 1});
    CHECK(ct.rtype.components[1].empty());
    CHECK(ct.rtype.components[2].parts == std::vector<unsigned>{1});
    CHECK(ct.rtype.components[3].empty());

    auto ct1 = cycle_type(cp(2, {1}, {1}));
    CHECK(ct1.rtype.components[1].parts == std::vector<unsigned>{1});
}

TEST_CASE("conjugate elements share their cycle type") {
    auto all = enumerate_vector(3, 3, Subset::all);
    for (std::size_t i = 0; i < all.size(); i += 17) {
        for (std::size_t j = 0; j < all.size(); j += 23) {
            auto conj = compose(compose(all[j], all[i]), inverse(all[j]));
            CHECK(cycle_type(conj).rtype == cycle_type(all[i]).rtype);
        }
    }
}

TEST_CASE("classification of involution flavors") {
    auto c1 = classify(kInvNotAbs);
    CHECK(c1.is_involution);
    CHECK_FALSE(c1.is_absolute_involution);
    auto c2 = classify(kAbsNotInv);
    CHECK(c2.is_absolute_involution);
    CHECK_FALSE(c2.is_involution);

    auto cid = classify(ColoredPermutation::identity(3, 1));
    CHECK(cid.is_involution);
    CHECK(cid.is_absolute_involution);
    CHECK(cid.fix_by_color == std::vector<unsigned>{3});
    CHECK_FALSE(cid.is_derangement);

    // involutions and absolute involutions coincide for r <= 2 and differ for r >= 3
    for (unsigned r = 1; r <= 2; ++r)
        for (unsigned n = 0; n <= 3; ++n)
            enumerate(n, r, Subset::all, [&](const ColoredPermutation& w) {
                auto c = classify(w);
                CHECK(c.is_involution == c.is_absolute_involution);
            });
}

TEST_CASE("enumeration counts and order") {
    CHECK(enumerate_vector(2, 2, Subset::all).size() == 8);
    CHECK(enumerate_vector(2, 2, Subset::derangements).size() == 5);
    auto d3 = enumerate_vector(3, 1, Subset::derangements);
    REQUIRE(d3.size() == 2);
    CHECK(format_window(d3[0]) == "2 3 1");
    CHECK(format_window(d3[1]) == "3 1 2");
    // n = 0: the empty permutation qualifies for every subset
    for (Subset s : {Subset::all, Subset::derangements, Subset::involutions,
                     Subset::absolute_involutions})
        CHECK(enumerate_vector(0, 2, s).size() == 1);
    // lexicographic in (values, colors)
    auto all = enumerate_vector(2, 2, Subset::all);
    CHECK(format_window(all[0]) == "1^0 2^0");
    CHECK(format_window(all[1]) == "1^0 2^1");
    CHECK(format_window(all[2]) == "1^1 2^0");
    CHECK(format_window(all[4]) == "2^0 1^0");
}

TEST_CASE("absolute involution count satisfies the closed sum and recurrence") {
    for (unsigned r = 1; r <= 3; ++r) {
        std::vector<BigInt> counts;
        for (unsigned n = 0; n <= 5; ++n)
            counts.push_back(
                BigInt(enumerate_vector(n, r, Subset::absolute_involutions).size()));
        for (unsigned n = 1; n + 1 <= 5; ++n)
            CHECK(counts[n + 1] == BigInt(r) * (counts[n] + BigInt(n) * counts[n - 1]));
        for (unsigned n = 0; n <= 5; ++n) {
            BigInt closed = 0;
            for (unsigned k = 0; 2 * k <= n; ++k)
                closed += int_pow(r, n - k) * factorial(n) /
                          (factorial(k) * int_pow(2, k) * factorial(n - 2 * k));
            CHECK(counts[n] == closed);
        }
    }
}

TEST_CASE("window notation parse and format") {
    ColoredPermutation w = parse_window("3^1 2^0 1^3 4^2 6^3 5^1", 4);
    CHECK(w == kInvNotAbs);
    CHECK(format_window(w) == "3^1 2^0 1^3 4^2 6^3 5^1");
    ColoredPermutation t = parse_window("2 1", 1);
    CHECK(t == cp(1, {2, 1}, {0, 0}));
    CHECK(format_window(t) == "2 1");
    CHECK(parse_window("2 1^1", 2) == cp(2, {2, 1}, {0, 1}));
    CHECK_THROWS_AS(parse_window("1^5", 4), ParseError);
    CHECK_THROWS_AS(parse_window("1 1", 2), ParseError);
    CHECK_THROWS_AS(parse_window("1 3", 2), ParseError);
    CHECK_THROWS_AS(parse_window("x", 2), ParseError);
}

TEST_CASE("window json round trip") {
    auto j = window_to_json(kAbsNotInv);
    CHECK(window_from_json(j) == kAbsNotInv);
    CHECK(j["n"] == 6);
    CHECK(j["r"] == 4);
}
