#include <doctest.h>

#include <emlab/qseries.hpp>
#include <emlab/stats.hpp>
#include <emlab/tableaux.hpp>

using namespace emlab;

namespace {

ColoredPermutation cp(unsigned r, std::vector<unsigned> values, std::vector<unsigned> colors) {
    unsigned n = static_cast<unsigned>(values.size());
    return ColoredPermutation(n, r, std::move(values), std::move(colors));
}

// classical hook length formula, used as the counting oracle for SYT
BigInt hook_count(const Partition& lam) {
    unsigned n = lam.size();
    if (n == 0) return 1;
    Partition conj = lam.conjugate();
    BigInt denom = 1;
    for (std::size_t i = 0; i < lam.parts.size(); ++i)
        for (unsigned j = 1; j <= lam.parts[i]; ++j)
            denom *= lam.parts[i] - j + conj.parts[j - 1] - static_cast<unsigned>(i);
    return factorial(n) / denom;
}

BigInt rpartite_syt_count(const RPartitePartition& shape) {
    BigInt count = factorial(shape.size());
    for (const auto& comp : shape.components) {
        count /= factorial(comp.size());
        count *= hook_count(comp);
    }
    return count;
}

}  // namespace

TEST_CASE("partition helpers") {
    Partition lam({4, 2, 1});
    CHECK(lam.size() == 7);
    CHECK(lam.conjugate().parts == std::vector<unsigned>{3, 2, 1, 1});
    CHECK(lam.b_stat() == 0 * 4 + 1 * 2 + 2 * 1);
    CHECK(Partition({2, 1}).odd_columns() == 1);
    CHECK(Partition({1, 1}).odd_columns() == 0);
    CHECK_THROWS_AS(Partition({1, 2}), ParameterError);
}

TEST_CASE("partition and r-partite enumeration") {
    CHECK(partitions_of(0).size() == 1);
    auto p2 = partitions_of(2);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0].parts == std::vector<unsigned>{2});
    CHECK(p2[1].parts == std::vector<unsigned>{1, 1});

    auto rp12 = rpartite_partitions(1, 2);
    REQUIRE(rp12.size() == 2);
    CHECK(rp12[0].components[0].parts == std::vector<unsigned>{1});
    CHECK(rp12[0].components[1].empty());
    CHECK(rp12[1].components[0].empty());
    CHECK(rp12[1].components[1].parts == std::vector<unsigned>{1});

    CHECK(rpartite_partitions(2, 2).size() == 5);
    // total count = coefficient check against a direct double sum
    unsigned total = 0;
    for (unsigned a = 0; a <= 3; ++a)
        total += static_cast<unsigned>(partitions_of(a).size() *
                                       partitions_of(3 - a).size());
    CHECK(rpartite_partitions(3, 2).size() == total);
}

TEST_CASE("standard tableaux enumeration counts") {
    RPartitePartition two_singletons({Partition({1}), Partition({1})});
    CHECK(enumerate_syt_vector(two_singletons).size() == 2);
    RPartitePartition row({Partition({2}), Partition()});
    CHECK(enumerate_syt_vector(row).size() == 1);
    RPartitePartition col({Partition({1, 1})});
    CHECK(enumerate_syt_vector(col).size() == 1);
    for (unsigned n = 0; n <= 5; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(BigInt(enumerate_syt_vector(RPartitePartition({lam})).size()) ==
                  hook_count(lam));
    for (unsigned n = 0; n <= 4; ++n)
        for (const auto& shape : rpartite_partitions(n, 3))
            CHECK(BigInt(enumerate_syt_vector(shape).size()) ==
                  rpartite_syt_count(shape));
}

TEST_CASE("tableau descent rules") {
    RPartiteTableau column(1);
    column.components[0] = {{1}, {2}};
    CHECK(tableau_descent_set(column) == std::set<unsigned>{1});

    RPartiteTableau split(2);
    split.components[0] = {{2}};
    split.components[1] = {{1}};
    CHECK(tableau_descent_set(split) == std::set<unsigned>{0});

    RPartiteTableau ordered(2);
    ordered.components[0] = {{1}};
    ordered.components[1] = {{2}};
    CHECK(tableau_descent_set(ordered) == std::set<unsigned>{1});
}

TEST_CASE("colored insertion worked examples") {
    auto [p1, q1] = colored_rsk(cp(2, {2, 1}, {0, 1}));
    CHECK(p1.components[0] == std::vector<std::vector<unsigned>>{{2}});
    CHECK(p1.components[1] == std::vector<std::vector<unsigned>>{{1}});
    CHECK(q1.components[0] == std::vector<std::vector<unsigned>>{{1}});
    CHECK(q1.components[1] == std::vector<std::vector<unsigned>>{{2}});
    CHECK(tableau_descent_set(q1) == std::set<unsigned>{1});

    auto [p2, q2] = colored_rsk(cp(1, {2, 1}, {0, 0}));
    CHECK(p2.components[0] == std::vector<std::vector<unsigned>>{{1}, {2}});
    CHECK(p2 == q2);

    auto [p3, q3] = colored_rsk(cp(2, {1}, {1}));
    CHECK(p3.components[0].empty());
    CHECK(p3.components[1] == std::vector<std::vector<unsigned>>{{1}});
    CHECK(p3 == q3);
    CHECK(tableau_descent_set(p3) == std::set<unsigned>{0});
}

TEST_CASE("colored insertion is a descent-preserving bijection") {
    for (unsigned r = 1; r <= 3; ++r) {
        for (unsigned n = 0; n <= 4; ++n) {
            enumerate(n, r, Subset::all, [&](const ColoredPermutation& w) {
                auto [p, q] = colored_rsk(w);
                CHECK(p.shape() == q.shape());
                CHECK(rsk_inverse(p, q, r) == w);
                CHECK(tableau_descent_set(q) ==
                      descent_set(w, TotalOrder::color,
                                  DescentConvention::zero_augmented));
                CHECK(tableau_descent_set(p) ==
                      descent_set(inverse(bar(w)), TotalOrder::color,
                                  DescentConvention::zero_augmented));
            });
        }
    }
}

TEST_CASE("absolute involutions are the P = Q elements") {
    for (unsigned r = 1; r <= 3; ++r) {
        for (unsigned n = 0; n <= 4; ++n) {
            enumerate(n, r, Subset::all, [&](const ColoredPermutation& w) {
                auto [p, q] = colored_rsk(w);
                auto cls = classify(w);
                CHECK(cls.is_absolute_involution == (p == q));
                if (cls.is_absolute_involution) {
                    auto shape = p.shape();
                    for (unsigned c = 0; c < r; ++c)
                        CHECK(cls.fix_by_color[c] == shape.components[c].odd_columns());
                }
            });
        }
    }
}

TEST_CASE("hook content binomial") {
    VarSet vq{"q"};
    for (unsigned m = 1; m <= 5; ++m)
        CHECK(hook_content_binomial(m, Partition({1}), vq, "q") ==
              q_analogue(m, vq, "q"));
    // one column of height 2 evaluated at m: [m choose 2]_q-style product
    Poly got = hook_content_binomial(3, Partition({1, 1}), vq, "q");
    // cells: contents 0 and -1, hooks 2 and 1 -> (1-q^3)(1-q^4)/((1-q^2)(1-q))
    Poly expect = (Poly::constant(vq, 1) - Poly::monomial(vq, 1, {{"q", 3}})) *
                  (Poly::constant(vq, 1) - Poly::monomial(vq, 1, {{"q", 4}}));
    expect = expect.exact_div((Poly::constant(vq, 1) - Poly::monomial(vq, 1, {{"q", 2}})) *
                              (Poly::constant(vq, 1) - Poly::monomial(vq, 1, {{"q", 1}})));
    CHECK(got == expect);
    // more rows than m kills the evaluation
    CHECK(hook_content_binomial(1, Partition({2, 2}).conjugate(), vq, "q").is_zero());
}

TEST_CASE("tableau json round trip") {
    RPartiteTableau t(2);
    t.components[0] = {{1, 3}, {4}};
    t.components[1] = {{2}};
    auto j = t.to_json();
    CHECK(RPartiteTableau::from_json(j) == t);
    CHECK(j["shape"][0][0] == 2);
}
