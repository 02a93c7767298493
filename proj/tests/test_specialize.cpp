#include <doctest.h>

#include <emlab/qseries.hpp>
#include <emlab/specialize.hpp>

using namespace emlab;

namespace {

using Tag = SpecializationId::Tag;

ColoredPermutation cp(unsigned r, std::vector<unsigned> values, std::vector<unsigned> colors) {
    unsigned n = static_cast<unsigned>(values.size());
    return ColoredPermutation(n, r, std::move(values), std::move(colors));
}

SpecializationId sid(Tag tag, unsigned r, unsigned m = 0, unsigned k = 1, unsigned l = 0,
                     unsigned I = 0) {
    SpecializationId s;
    s.tag = tag;
    s.r = r;
    s.m = m;
    s.k = k;
    s.l = l;
    s.stable_index = I;
    return s;
}

const VarSet vq{"q"};

std::vector<unsigned> exps(const SubstitutionTable& t, unsigned c) {
    std::vector<unsigned> out;
    for (unsigned i = 1; i <= t.support(c); ++i)
        if (auto e = t.entry(c, i)) out.push_back(*e);
    return out;
}

}  // namespace

TEST_CASE("substitution tables") {
    auto psm = build_table(sid(Tag::ps_m, 2, 2));
    CHECK(exps(psm, 0) == std::vector<unsigned>{0, 1});
    CHECK(exps(psm, 1) == std::vector<unsigned>{0});

    auto phi = build_table(sid(Tag::phi_m, 2, 2));
    CHECK(exps(phi, 0) == std::vector<unsigned>{0});
    CHECK(exps(phi, 1) == std::vector<unsigned>{1});

    auto theta = build_table(sid(Tag::theta_m, 2, 2, 3, 2));
    CHECK(exps(theta, 0) == std::vector<unsigned>{0, 3});
    CHECK(exps(theta, 1) == std::vector<unsigned>{2});

    auto psi = build_table(sid(Tag::psi_m, 3, 3));
    CHECK(exps(psi, 0) == std::vector<unsigned>{0, 3, 6});
    CHECK(exps(psi, 1) == std::vector<unsigned>{1, 4});
    CHECK(exps(psi, 2) == std::vector<unsigned>{2, 5});

    // the two flag boundary conditions: colors >= 1 vanish at index m, and
    // the last nonzero entry is q^{m-1} at (c-1, m-c+1) for m = c mod r
    for (unsigned r = 1; r <= 4; ++r) {
        for (unsigned m = 1; m <= 9; ++m) {
            auto t = build_table(sid(Tag::phi_m, r, m));
            for (unsigned c = 1; c < r; ++c) CHECK_FALSE(t.entry(c, m).has_value());
            unsigned cmod = (m - 1) % r + 1;  // m = cmod (mod r), 1 <= cmod <= r
            auto last = t.entry(cmod - 1, m - cmod + 1);
            REQUIRE(last.has_value());
            CHECK(*last == m - 1);
            // nothing larger anywhere
            for (unsigned c = 0; c < r; ++c)
                for (unsigned i = 1; i <= t.support(c); ++i)
                    if (auto e = t.entry(c, i)) CHECK(*e <= m - 1);
        }
    }

    CHECK_THROWS_AS(build_table(sid(Tag::theta_m, 3, 2)), ParameterError);
    CHECK_THROWS_AS(build_table(sid(Tag::ps_m, 2, 0)), ParameterError);
    CHECK_THROWS_AS(build_table(sid(Tag::ps, 2, 0)), ParameterError);
}

TEST_CASE("specialization text forms") {
    CHECK(SpecializationId::parse("ps_m[m=3]").tag == Tag::ps_m);
    CHECK(SpecializationId::parse("ps_m[m=3]").m == 3);
    CHECK(SpecializationId::parse("psi_m~[m=3]").tag == Tag::psi_m_tilde);
    auto th = SpecializationId::parse("theta_m[k=3,l=2,m=4]");
    CHECK(th.k == 3);
    CHECK(th.l == 2);
    CHECK(th.m == 4);
    CHECK(SpecializationId::parse("ps[I=10]").stable_index == 10);
    CHECK_THROWS_AS(SpecializationId::parse("zeta"), ParameterError);
}

TEST_CASE("evaluate_F worked examples") {
    auto t = build_table(sid(Tag::ps_m, 1, 2));
    Poly got = evaluate_F(cp(1, {1}, {0}), t, vq, "q");
    CHECK(got == q_analogue(2, vq, "q"));

    auto t2 = build_table(sid(Tag::ps_m, 2, 2));
    CHECK(evaluate_F(cp(2, {1}, {1}), t2, vq, "q") == Poly::constant(vq, 1));

    // n = 0 subject: empty product
    CHECK(evaluate_F(ColoredPermutation::identity(0, 2), t2, vq, "q") ==
          Poly::constant(vq, 1));

    CHECK_THROWS_AS(evaluate_F(cp(3, {1}, {0}), t2, vq, "q"), DimensionError);
}

TEST_CASE("closed forms match the per-element statistics") {
    ColoredPermutation w = cp(2, {1}, {1});
    auto cf = closed_form(w, sid(Tag::phi_m, 2, 1), VarSet{"q", "x"});
    CHECK(cf.x_exponent == 1);  // fdes = 1
    CHECK(cf.numerator == Poly::monomial(VarSet{"q", "x"}, 1, {{"q", 1}}));  // fmaj = 1
    REQUIRE(cf.denominator.size() == 2);

    auto stable = closed_form(w, sid(Tag::ps, 2, 0, 1, 0, 5), VarSet{"q"});
    CHECK(stable.x_exponent == 0);
    CHECK(stable.denominator.size() == 1);
}

TEST_CASE("order-m oracle equals the series coefficient of the closed form") {
    // the acceptance suite runs the full grid; this is the smoke version
    VarSet vars{"q", "x"};
    for (unsigned r = 1; r <= 2; ++r) {
        for (unsigned n = 1; n <= 3; ++n) {
            enumerate(n, r, Subset::all, [&](const ColoredPermutation& w) {
                for (Tag tag : {Tag::ps_m, Tag::psi_m, Tag::phi_m}) {
                    SpecializationId base = sid(tag, r, 1);
                    ClosedForm cf = closed_form(w, base, vars);
                    Poly series =
                        expand_rational(cf.numerator * Poly::monomial(vars, 1,
                                                                      {{"x", cf.x_exponent}}),
                                        cf.denominator, "x", 3);
                    for (unsigned m = 1; m <= 4; ++m) {
                        SpecializationId s = sid(tag, r, m);
                        Poly lhs = evaluate_F(w, build_table(s), vars, "q");
                        CHECK(lhs == series.coefficient_of("x", m - 1));
                    }
                }
            });
        }
    }
}

TEST_CASE("stable oracle agrees with the series modulo q^{I-n}") {
    VarSet vars{"q"};
    for (unsigned r = 1; r <= 2; ++r) {
        for (unsigned n = 1; n <= 3; ++n) {
            unsigned I = n + 6;
            enumerate(n, r, Subset::all, [&](const ColoredPermutation& w) {
                SpecializationId s = sid(Tag::ps, r, 0, 1, 0, I);
                Poly lhs = evaluate_F(w, build_table(s), vars, "q");
                ClosedForm cf = closed_form(w, s, vars);
                Poly series = expand_rational(cf.numerator, cf.denominator, "q", I - n - 1);
                DegreeCap cap;
                cap.limit("q", I - n - 1);
                CHECK(lhs.truncated(cap) == series);
            });
        }
    }
}

TEST_CASE("whole-group F-sum is the power of the entry sum") {
    for (unsigned r = 1; r <= 3; ++r) {
        auto t = build_table(sid(Tag::psi_m, r, 2));
        for (unsigned n = 0; n <= 3; ++n) {
            Poly sum(vq);
            enumerate(n, r, Subset::all, [&](const ColoredPermutation& w) {
                sum += evaluate_F(w, t, vq, "q");
            });
            CHECK(sum == t.entry_sum(vq, "q").pow(n));
        }
    }
}

TEST_CASE("SYT F-sums are symmetric in the alphabet and homogeneous in shifts") {
    // swapping two entries within one color leaves the Schur-type sum fixed;
    // shifting a color multiplies by q^{shift * |component|}
    for (unsigned r = 1; r <= 2; ++r) {
        for (unsigned n = 1; n <= 3; ++n) {
            for (const auto& shape : rpartite_partitions(n, r)) {
                auto base = build_table(sid(Tag::ps_m_tilde, r, 3));
                Poly sum0(vq);
                enumerate_syt(shape, [&](const RPartiteTableau& q) {
                    sum0 += evaluate_F(q, base, vq, "q");
                });
                // transpose entries 1 and 2 of color 0: {q^1, q^0, q^2}
                SubstitutionTable swapped = base;
                std::swap(swapped.entries[0][0], swapped.entries[0][1]);
                Poly sum1(vq);
                enumerate_syt(shape, [&](const RPartiteTableau& q) {
                    sum1 += evaluate_F(q, swapped, vq, "q");
                });
                CHECK(sum0 == sum1);

                SubstitutionTable shifted = base;
                unsigned color = r - 1;
                for (auto& e : shifted.entries[color])
                    if (e) e = *e + 2;
                Poly sum2(vq);
                enumerate_syt(shape, [&](const RPartiteTableau& q) {
                    sum2 += evaluate_F(q, shifted, vq, "q");
                });
                CHECK(sum2 == sum0 * Poly::monomial(
                                        vq, 1, {{"q", 2 * shape.components[color].size()}}));
            }
        }
    }
}
