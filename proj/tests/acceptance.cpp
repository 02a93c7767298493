// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Each criterion pins its grids and truncations in code; comparisons are
// exact integer-polynomial equality throughout.

#include <emlab/identities.hpp>
#include <emlab/qseries.hpp>
#include <emlab/specialize.hpp>
#include <emlab/stats.hpp>
#include <emlab/tableaux.hpp>
#include <emlab/wreath.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

using namespace emlab;

namespace {

using Kind = StatisticId::Kind;
using Tag = SpecializationId::Tag;

struct Criterion {
    std::string name;
    std::function<bool(std::ostream&)> run;
};

bool run_registry_rows(std::ostream& log, const std::vector<GridEntry>& rows) {
    auto reports = verify_all(&rows, 0);
    bool ok = true;
    for (const auto& rep : reports) {
        if (rep.pass) continue;
        ok = false;
        log << "    FAIL " << rep.id;
        for (const auto& [k, v] : rep.params) log << " " << k << "=" << v;
        if (rep.error) log << "  error: " << *rep.error;
        if (rep.mismatch) {
            log << "  first mismatch";
            if (!rep.mismatch->context.empty()) log << " at " << rep.mismatch->context;
            log << ": lhs=" << rep.mismatch->lhs << " rhs=" << rep.mismatch->rhs;
        }
        log << "\n";
    }
    return ok;
}

std::vector<GridEntry> rows_nr(const std::string& id, int nmax, int rmax, ParamMap truncs) {
    std::vector<GridEntry> out;
    for (int n = 1; n <= nmax; ++n)
        for (int r = 1; r <= rmax; ++r)
            out.push_back({id, {{"n", n}, {"r", r}}, truncs});
    return out;
}

std::vector<GridEntry> rows_n(const std::string& id, int nmax, ParamMap truncs) {
    std::vector<GridEntry> out;
    for (int n = 1; n <= nmax; ++n) out.push_back({id, {{"n", n}}, truncs});
    return out;
}

std::vector<GridEntry> rows_nkl(const std::string& id, int nmax, ParamMap truncs) {
    std::vector<GridEntry> out;
    for (int n = 1; n <= nmax; ++n)
        for (auto [k, l] : {std::pair{1, 0}, std::pair{2, 1}, std::pair{3, 2}})
            out.push_back({id, {{"n", n}, {"k", k}, {"l", l}}, truncs});
    return out;
}

// 1. Mahonian closed forms over the whole group
bool criterion1(std::ostream& log) {
    std::vector<GridEntry> rows = rows_nr("maj_dist_colored", 5, 3, {});
    auto f = rows_nr("fmaj_dist", 5, 3, {});  // checks all three orders internally
    rows.insert(rows.end(), f.begin(), f.end());
    return run_registry_rows(log, rows);
}

// 2. Euler--Mahonian x-series identities
bool criterion2(std::ostream& log) {
    ParamMap m5{{"M", 5}};
    std::vector<GridEntry> rows = rows_n("carlitz", 5, m5);
    auto app = [&](std::vector<GridEntry> more) {
        rows.insert(rows.end(), more.begin(), more.end());
    };
    app(rows_n("euler", 5, m5));
    app(rows_nr("steingrimsson_des_natural", 5, 3, m5));
    app(rows_nr("steingrimsson_des_color", 5, 3, m5));
    app(rows_nr("steingrimsson_des_length", 5, 3, m5));
    app(rows_nr("des_fmaj", 5, 3, m5));
    app(rows_nr("desL_majL", 5, 3, m5));
    app(rows_nr("fdes_fmaj", 5, 3, m5));
    app(rows_nr("ldes_lmaj", 5, 3, m5));
    app(rows_nr("des_maj_colored", 5, 3, m5));
    app(rows_nr("desstar_maj", 5, 3, m5));
    app(rows_nr("fmaj_family", 5, 3, m5));
    app(rows_nr("fdes_fmaj_colored", 5, 3, m5));
    app(rows_nkl("fmajkl_dist", 5, {}));
    app(rows_nkl("des_fmajkl", 5, m5));
    app(rows_nkl("desstar_fmajkl", 5, m5));
    return run_registry_rows(log, rows);
}

// 3. derangements
bool criterion3(std::ostream& log) {
    std::vector<GridEntry> rows;
    for (int n = 0; n <= 6; ++n)
        for (int r = 1; r <= 3; ++r)
            rows.push_back({"derangement_count", {{"n", n}, {"r", r}}, {}});
    auto app = [&](std::vector<GridEntry> more) {
        rows.insert(rows.end(), more.begin(), more.end());
    };
    app(rows_n("wachs", 6, {}));
    app(rows_n("des_maj_derangements", 6, {{"M", 5}}));
    app(rows_nr("fz_fmaj_derangements", 5, 3, {}));
    app(rows_nr("des_fmaj_colored_derangements", 5, 3, {{"M", 5}}));
    app(rows_nr("assaf_maj_derangements", 5, 3, {}));
    app(rows_nkl("des_fmajkl_signed_derangements", 5, {{"M", 5}}));
    app(rows_nkl("fmajkl_signed_derangements", 5, {}));
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r)
            for (int m = 1; m <= 4; ++m)
                rows.push_back(
                    {"derangement_psi_helper", {{"n", n}, {"r", r}, {"m", m}}, {}});
    return run_registry_rows(log, rows);
}

// 4. involutions and absolute involutions
bool criterion4(std::ostream& log) {
    std::vector<GridEntry> rows = rows_n("em_involutions", 6, {{"M", 5}});
    auto app = [&](std::vector<GridEntry> more) {
        rows.insert(rows.end(), more.begin(), more.end());
    };
    for (int n = 0; n <= 6; ++n)
        for (int r = 1; r <= 3; ++r)
            rows.push_back({"abs_involution_count", {{"n", n}, {"r", r}}, {}});
    for (int n = 1; n <= 5; ++n)
        for (int r : {2, 4})
            rows.push_back({"gamma_colored_involutions", {{"n", n}, {"r", r}}, {}});
    app(rows_nr("gamma_abs_involutions", 5, 3, {}));
    app(rows_nr("des_fmaj_abs_inv", 4, 3, {{"M", 4}}));
    app(rows_nr("des_maj_abs_inv", 4, 3, {{"M", 4}}));
    rows.push_back({"df_involutions", {}, {{"N", 3}, {"M", 4}}});
    for (int r = 1; r <= 3; ++r) {
        rows.push_back({"colored_df", {{"r", r}}, {{"N", 3}, {"M", 4}}});
        rows.push_back({"flag_colored_df", {{"r", r}}, {{"N", 3}, {"M", 4}}});
    }
    app(rows_nr("colored_athanasiadis", 4, 3, {}));
    return run_registry_rows(log, rows);
}

// 5. bimahonian and multivariate distributions
bool criterion5(std::ostream& log) {
    std::vector<GridEntry> rows;
    ParamMap caps{{"N", 3}, {"capq", 12}, {"capp", 12}};
    ParamMap nm{{"N", 3}, {"M", 4}};
    for (int r = 1; r <= 3; ++r) {
        rows.push_back({"maj_imaj", {{"r", r}}, caps});
        rows.push_back({"fmaj_ifmaj", {{"r", r}}, caps});
        for (const char* id : {"des_ides_maj_imaj", "desstar_idesstar_maj_imaj",
                               "des_ides_fmaj_ifmaj", "desstar_idesstar_fmaj_ifmaj",
                               "fdes_ifdes_fmaj_ifmaj"})
            rows.push_back({id, {{"r", r}}, nm});
    }
    for (auto [k, l] : {std::pair{1, 0}, std::pair{2, 1}}) {
        for (auto [k2, l2] : {std::pair{1, 0}, std::pair{2, 1}}) {
            ParamMap p{{"k", k}, {"l", l}, {"k2", k2}, {"l2", l2}};
            rows.push_back({"fmajkl_ifmajkl", p, {{"N", 4}, {"capq", 12}, {"capp", 12}}});
            rows.push_back({"des_ides_fmajkl", p, {{"N", 4}, {"M", 4}}});
        }
    }
    return run_registry_rows(log, rows);
}

// 6. brute-force specialization oracle vs closed forms, every tag
bool criterion6(std::ostream& log) {
    bool ok = true;
    const unsigned NMAX = 4, MMAX = 5;
    VarSet vars{"q", "x"};
    VarSet vq{"q"};
    auto fail = [&](const ColoredPermutation& w, const SpecializationId& s,
                    const std::string& what) {
        log << "    FAIL oracle " << s.str() << " on " << format_window(w) << " (" << what
            << ")\n";
        ok = false;
    };
    for (unsigned r = 1; r <= 3; ++r) {
        std::vector<std::pair<Tag, std::pair<unsigned, unsigned>>> mfams = {
            {Tag::ps_m, {1, 0}}, {Tag::ps_m_tilde, {1, 0}},
            {Tag::psi_m, {1, 0}}, {Tag::psi_m_tilde, {1, 0}},
            {Tag::phi_m, {1, 0}}};
        std::vector<std::pair<Tag, std::pair<unsigned, unsigned>>> sfams = {
            {Tag::ps, {1, 0}}, {Tag::psi, {1, 0}}};
        if (r == 2) {
            for (auto kl : {std::pair{1u, 0u}, std::pair{2u, 1u}, std::pair{3u, 2u}}) {
                mfams.push_back({Tag::theta_m, kl});
                mfams.push_back({Tag::theta_m_tilde, kl});
                sfams.push_back({Tag::theta, kl});
            }
        }
        for (unsigned n = 0; n <= NMAX; ++n) {
            enumerate(n, r, Subset::all, [&](const ColoredPermutation& w) {
                for (const auto& [tag, kl] : mfams) {
                    SpecializationId s;
                    s.tag = tag;
                    s.r = r;
                    s.k = kl.first;
                    s.l = kl.second;
                    s.m = 1;
                    ClosedForm cf = closed_form(w, s, vars);
                    Poly series = expand_rational(
                        cf.numerator *
                            Poly::monomial(vars, 1, {{"x", cf.x_exponent}}),
                        cf.denominator, "x", MMAX - 1);
                    for (unsigned m = 1; m <= MMAX; ++m) {
                        s.m = m;
                        Poly lhs =
                            evaluate_F(w, build_table(s), vars, "q");
                        if (lhs != series.coefficient_of("x", m - 1)) {
                            fail(w, s, "order " + std::to_string(m));
                            return;
                        }
                    }
                }
                for (const auto& [tag, kl] : sfams) {
                    SpecializationId s;
                    s.tag = tag;
                    s.r = r;
                    s.k = kl.first;
                    s.l = kl.second;
                    s.stable_index = n + 6;
                    unsigned deg = s.stable_index - n - 1;
                    ClosedForm cf = closed_form(w, s, vq);
                    Poly series = expand_rational(cf.numerator, cf.denominator, "q", deg);
                    DegreeCap cap;
                    cap.limit("q", deg);
                    Poly lhs = evaluate_F(w, build_table(s), vq, "q");
                    if (lhs.truncated(cap) != series) {
                        fail(w, s, "stable, modulo q^" + std::to_string(deg + 1));
                        return;
                    }
                }
            });
        }
    }
    return ok;
}

// 7. colored insertion correspondence, exhaustively
bool criterion7(std::ostream& log) {
    bool ok = true;
    for (unsigned r = 1; r <= 3 && ok; ++r) {
        for (unsigned n = 0; n <= 5 && ok; ++n) {
            enumerate(n, r, Subset::all, [&](const ColoredPermutation& w) {
                if (!ok) return;
                auto [p, q] = colored_rsk(w);
                bool good = p.shape() == q.shape();
                good = good && rsk_inverse(p, q, r) == w;
                good = good && tableau_descent_set(q) ==
                                   descent_set(w, TotalOrder::color,
                                               DescentConvention::zero_augmented);
                good = good && tableau_descent_set(p) ==
                                   descent_set(inverse(bar(w)), TotalOrder::color,
                                               DescentConvention::zero_augmented);
                auto cls = classify(w);
                good = good && (cls.is_absolute_involution == (p == q));
                if (cls.is_absolute_involution) {
                    auto shape = p.shape();
                    for (unsigned c = 0; c < r; ++c)
                        good = good &&
                               cls.fix_by_color[c] == shape.components[c].odd_columns();
                }
                if (!good) {
                    log << "    FAIL insertion properties on " << format_window(w)
                        << " (r=" << r << ")\n";
                    ok = false;
                }
            });
        }
    }
    return ok;
}

// 8. hook-content oracle
bool criterion8(std::ostream& log) {
    std::vector<GridEntry> rows;
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m)
            rows.push_back({"hook_content", {{"n", n}, {"m", m}}, {}});
    return run_registry_rows(log, rows);
}

// 9. structural invariants
bool criterion9(std::ostream& log) {
    bool ok = true;
    // group laws, exhaustively for n <= 3, r <= 3
    for (unsigned r = 1; r <= 3 && ok; ++r) {
        for (unsigned n = 0; n <= 3 && ok; ++n) {
            auto all = enumerate_vector(n, r, Subset::all);
            ColoredPermutation id = ColoredPermutation::identity(n, r);
            for (const auto& a : all) {
                if (!(compose(a, inverse(a)) == id) || !(compose(inverse(a), a) == id) ||
                    !(compose(a, id) == a) || !(compose(id, a) == a)) {
                    log << "    FAIL identity/inverse law on " << format_window(a) << "\n";
                    ok = false;
                    break;
                }
            }
            if (n == 3 && r == 3) continue;  // associativity cube below is enough at 162^3
            for (const auto& a : all)
                for (const auto& b : all)
                    for (const auto& c : all)
                        if (!(compose(compose(a, b), c) == compose(a, compose(b, c)))) {
                            log << "    FAIL associativity\n";
                            ok = false;
                        }
        }
    }
    if (ok) {
        auto all = enumerate_vector(3, 3, Subset::all);
        for (std::size_t i = 0; i < all.size() && ok; ++i)
            for (std::size_t j = 0; j < all.size() && ok; ++j)
                for (std::size_t k = 0; k < all.size(); k += 1) {
                    if (!(compose(compose(all[i], all[j]), all[k]) ==
                          compose(all[i], compose(all[j], all[k])))) {
                        log << "    FAIL associativity at n=3 r=3\n";
                        ok = false;
                        break;
                    }
                }
    }
    // bar/inverse commutation for n <= 3, r <= 4
    for (unsigned r = 1; r <= 4 && ok; ++r)
        for (unsigned n = 0; n <= 3 && ok; ++n)
            enumerate(n, r, Subset::all, [&](const ColoredPermutation& w) {
                if (ok && !(bar(inverse(w)) == inverse(bar(w)))) {
                    log << "    FAIL bar/inverse commutation on " << format_window(w)
                        << "\n";
                    ok = false;
                }
            });
    if (!ok) return false;

    std::vector<GridEntry> rows;
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 4; ++r)
            rows.push_back({"chow_mansour_relation", {{"n", n}, {"r", r}}, {}});
    auto app = [&](std::vector<GridEntry> more) {
        rows.insert(rows.end(), more.begin(), more.end());
    };
    app(rows_nr("des_order_equidistribution", 4, 3, {}));
    app(rows_nr("fmaj_order_equidistribution", 4, 3, {}));
    app(rows_nr("poincare_lmaj", 4, 3, {}));
    app(rows_nr("power_sum_identity", 3, 3, {}));
    app(rows_nr("cauchy_kernel", 3, 3, {}));
    return run_registry_rows(log, rows) && ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1 Mahonian closed forms (maj, fmaj under three orders)", criterion1},
        {"2 Euler-Mahonian x-series identities", criterion2},
        {"3 derangement counts and distributions", criterion3},
        {"4 involutions and absolute involutions", criterion4},
        {"5 bimahonian and multivariate distributions", criterion5},
        {"6 specialization oracle vs closed forms", criterion6},
        {"7 colored insertion correspondence", criterion7},
        {"8 hook-content oracle", criterion8},
        {"9 structural invariants", criterion9},
    };
    int failures = 0;
    for (auto& crit : criteria) {
        std::ostringstream log;
        auto start = std::chrono::steady_clock::now();
        bool ok = crit.run(log);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << crit.name << "  ("
                  << ms / 1000.0 << " s)\n";
        std::cout << log.str();
        if (!ok) ++failures;
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    else std::cout << "all criteria passed\n";
    return failures == 0 ? 0 : 1;
}
