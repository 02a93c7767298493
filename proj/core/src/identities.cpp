#include <emlab/identities.hpp>

#include <emlab/qseries.hpp>
#include <emlab/specialize.hpp>
#include <emlab/stats.hpp>
#include <emlab/tableaux.hpp>
#include <emlab/wreath.hpp>

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace emlab {

namespace {

using Kind = StatisticId::Kind;
using Mod = StatisticId::Modifier;
using Tag = SpecializationId::Tag;

int need(const ParamMap& m, const std::string& k) {
    auto it = m.find(k);
    if (it == m.end()) throw ParameterError("missing parameter: " + k);
    return it->second;
}

unsigned uneed(const ParamMap& m, const std::string& k) {
    int v = need(m, k);
    if (v < 0) throw ParameterError("parameter must be nonnegative: " + k);
    return static_cast<unsigned>(v);
}

std::optional<Mismatch> compare_polys(const Poly& lhs, const Poly& rhs,
                                      const std::string& context) {
    if (!(lhs.vars() == rhs.vars()))
        throw DimensionError("internal: compared polynomials use different universes");
    if (lhs == rhs) return std::nullopt;
    Mismatch mm;
    mm.vars = lhs.vars().names();
    mm.context = context;
    auto li = lhs.terms().begin(), le = lhs.terms().end();
    auto ri = rhs.terms().begin(), re = rhs.terms().end();
    GradedLexLess less;
    while (li != le || ri != re) {
        if (ri == re || (li != le && less(li->first, ri->first))) {
            mm.exponents = li->first;
            mm.lhs = to_decimal(li->second);
            mm.rhs = "0";
            return mm;
        }
        if (li == le || less(ri->first, li->first)) {
            mm.exponents = ri->first;
            mm.lhs = "0";
            mm.rhs = to_decimal(ri->second);
            return mm;
        }
        if (li->second != ri->second) {
            mm.exponents = li->first;
            mm.lhs = to_decimal(li->second);
            mm.rhs = to_decimal(ri->second);
            return mm;
        }
        ++li;
        ++ri;
    }
    return mm;  // unreachable for same-universe polys
}

StatisticId st(Kind k, TotalOrder o = TotalOrder::color) { return StatisticId::make(k, o); }

Poly qpow(const VarSet& vars, std::string_view v, unsigned e) {
    return Poly::monomial(vars, 1, {{std::string(v), e}});
}

Poly one_of(const VarSet& vars) { return Poly::constant(vars, 1); }

// (1 - x^xstep q^{qstep*i}) for i = 0..count-1
std::vector<Poly> geometric_factors(const VarSet& vars, std::string_view xv, unsigned xstep,
                                    std::string_view qv, unsigned qstep, unsigned count) {
    std::vector<Poly> fs;
    fs.reserve(count);
    for (unsigned i = 0; i < count; ++i)
        fs.push_back(one_of(vars) - Poly::monomial(vars, 1,
                                                   {{std::string(xv), xstep},
                                                    {std::string(qv), qstep * i}}));
    return fs;
}

// (1 - q^{step*i}) for i = 1..n  ==  (q^step; q^step)_n
std::vector<Poly> qfact_factors(const VarSet& vars, std::string_view qv, unsigned step,
                                unsigned n) {
    std::vector<Poly> fs;
    for (unsigned i = 1; i <= n; ++i)
        fs.push_back(one_of(vars) - qpow(vars, qv, step * i));
    return fs;
}

BigInt binom_c2(unsigned k) { return BigInt(k) * (k - 1) / 2; }  // k choose 2 (0 for k<2)

BigInt gamma_two_cycles(unsigned n, unsigned i) {
    if (2 * i > n) return 0;
    return factorial(n) / (factorial(i) * int_pow(2, i) * factorial(n - 2 * i));
}

// Sum over m <= M of lhs_coeff(m) x^m compared against the truncated
// expansion of numerator / prod(denominator).
std::optional<Mismatch> check_x_series(const VarSet& vars,
                                       const std::function<Poly(unsigned)>& lhs_coeff,
                                       const Poly& numerator,
                                       const std::vector<Poly>& denominator, unsigned M) {
    Poly lhs(vars);
    for (unsigned m = 0; m <= M; ++m) lhs += lhs_coeff(m) * qpow(vars, "x", m);
    Poly rhs = expand_rational(numerator, denominator, "x", M);
    return compare_polys(lhs, rhs, "x-series coefficients 0.." + std::to_string(M));
}

// ---------------------------------------------------------------------------
// zx strategy: generating functions in z whose z^n coefficient is a
// distribution over absolute involutions divided by an x-Pochhammer, versus
// per-x-coefficient products of geometric factors built from a substitution
// table of order m+1.
// ---------------------------------------------------------------------------
std::optional<Mismatch> run_zx(unsigned r, bool flag, unsigned N, unsigned M) {
    std::vector<std::string> names{"q", "x", "z"};
    for (unsigned c = 0; c < r; ++c) names.push_back("p" + std::to_string(c));
    VarSet vars(names);

    std::vector<Poly> lhs_by_n;
    for (unsigned n = 0; n <= N; ++n) {
        std::vector<std::pair<StatisticId, std::string>> specs;
        specs.push_back({st(flag ? Kind::fdes : Kind::des), "x"});
        specs.push_back({st(Kind::fmaj), "q"});
        for (unsigned c = 0; c < r; ++c)
            specs.push_back({StatisticId::fix(c), "p" + std::to_string(c)});
        Poly D = distribution(n, r, Subset::absolute_involutions, specs, vars);
        if (flag) D *= q_analogue(r, vars, "x");
        auto xf = flag ? geometric_factors(vars, "x", r, "q", r, n + 1)
                       : geometric_factors(vars, "x", 1, "q", r, n + 1);
        lhs_by_n.push_back(expand_rational(D, xf, "x", M));
    }

    for (unsigned m = 0; m <= M; ++m) {
        SpecializationId sid;
        sid.tag = flag ? Tag::phi_m : Tag::psi_m;
        sid.r = r;
        sid.m = m + 1;
        SubstitutionTable t = build_table(sid);
        std::vector<Poly> factors;
        for (unsigned c = 0; c < r; ++c) {
            std::vector<unsigned> exps;
            for (unsigned i = 1; i <= t.support(c); ++i)
                if (auto e = t.entry(c, i)) exps.push_back(*e);
            std::string pc = "p" + std::to_string(c);
            for (unsigned e : exps)
                factors.push_back(one_of(vars) -
                                  Poly::monomial(vars, 1, {{"z", 1}, {pc, 1}, {"q", e}}));
            for (std::size_t i = 0; i < exps.size(); ++i)
                for (std::size_t j = i + 1; j < exps.size(); ++j)
                    factors.push_back(one_of(vars) -
                                      Poly::monomial(vars, 1,
                                                     {{"z", 2}, {"q", exps[i] + exps[j]}}));
        }
        Poly G = expand_rational(one_of(vars), factors, "z", N);
        for (unsigned n = 0; n <= N; ++n) {
            auto mm = compare_polys(lhs_by_n[n].coefficient_of("x", m),
                                    G.coefficient_of("z", n),
                                    "z^" + std::to_string(n) + " x^" + std::to_string(m));
            if (mm) return mm;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// zxy strategy, m-indexed: four-variate distributions with bar-inverse
// partner statistics against per-(m1, m2) products over table entry pairs.
// ---------------------------------------------------------------------------
struct ZxySpec {
    Kind eul;           // des / des_star / fdes
    Kind mah;           // maj / fmaj / fmaj_kl
    Tag fam;            // table family (order-m tag)
    unsigned k = 1, l = 0;    // x-side fmaj_kl parameters
    unsigned k2 = 1, l2 = 0;  // y-side fmaj_kl parameters
    bool flag = false;        // fdes variant: [r]_x [r]_y prefactor, x^r denominators
};

StatisticId side_stat(Kind kind, unsigned k, unsigned l, Mod mod) {
    StatisticId id = kind == Kind::fmaj_kl ? StatisticId::fmajkl(k, l) : st(kind);
    return id.with_modifier(mod);
}

unsigned side_qstep(const ZxySpec& zs, unsigned r, bool yside) {
    if (zs.fam == Tag::theta_m || zs.fam == Tag::theta_m_tilde)
        return yside ? zs.k2 : zs.k;
    if (zs.fam == Tag::psi_m || zs.fam == Tag::psi_m_tilde || zs.fam == Tag::phi_m) return r;
    return 1;
}

std::optional<Mismatch> run_zxy_m(unsigned r, const ZxySpec& zs, unsigned N, unsigned M) {
    VarSet vars{"q", "p", "x", "y", "z"};
    std::vector<Poly> lhs_by_n;
    for (unsigned n = 0; n <= N; ++n) {
        std::vector<std::pair<StatisticId, std::string>> specs = {
            {side_stat(zs.eul, zs.k, zs.l, Mod::plain), "x"},
            {side_stat(zs.eul, zs.k2, zs.l2, Mod::bar_inverse), "y"},
            {side_stat(zs.mah, zs.k, zs.l, Mod::plain), "q"},
            {side_stat(zs.mah, zs.k2, zs.l2, Mod::bar_inverse), "p"},
        };
        Poly D = distribution(n, r, Subset::all, specs, vars);
        std::vector<Poly> denoms;
        if (zs.flag) {
            D *= q_analogue(r, vars, "x") * q_analogue(r, vars, "y");
            denoms = geometric_factors(vars, "x", r, "q", r, n + 1);
            auto yf = geometric_factors(vars, "y", r, "p", r, n + 1);
            denoms.insert(denoms.end(), yf.begin(), yf.end());
        } else {
            denoms = geometric_factors(vars, "x", 1, "q", side_qstep(zs, r, false), n + 1);
            auto yf = geometric_factors(vars, "y", 1, "p", side_qstep(zs, r, true), n + 1);
            denoms.insert(denoms.end(), yf.begin(), yf.end());
        }
        DegreeCap cap;
        cap.limit("x", M).limit("y", M);
        lhs_by_n.push_back(expand_rational(D, denoms, cap));
    }

    auto make_table = [&](unsigned order, bool yside) {
        SpecializationId sid;
        sid.tag = zs.fam;
        sid.r = r;
        sid.m = order;
        sid.k = yside ? zs.k2 : zs.k;
        sid.l = yside ? zs.l2 : zs.l;
        return build_table(sid);
    };
    for (unsigned m1 = 0; m1 <= M; ++m1) {
        SubstitutionTable tx = make_table(m1 + 1, false);
        for (unsigned m2 = 0; m2 <= M; ++m2) {
            SubstitutionTable ty = make_table(m2 + 1, true);
            std::vector<Poly> factors;
            for (unsigned c = 0; c < r; ++c) {
                for (unsigned i = 1; i <= tx.support(c); ++i) {
                    auto a = tx.entry(c, i);
                    if (!a) continue;
                    for (unsigned j = 1; j <= ty.support(c); ++j) {
                        auto b = ty.entry(c, j);
                        if (!b) continue;
                        factors.push_back(
                            one_of(vars) -
                            Poly::monomial(vars, 1, {{"z", 1}, {"q", *a}, {"p", *b}}));
                    }
                }
            }
            Poly G = expand_rational(one_of(vars), factors, "z", N);
            for (unsigned n = 0; n <= N; ++n) {
                auto mm = compare_polys(
                    lhs_by_n[n].coefficient_of("x", m1).coefficient_of("y", m2),
                    G.coefficient_of("z", n),
                    "z^" + std::to_string(n) + " x^" + std::to_string(m1) + " y^" +
                        std::to_string(m2));
                if (mm) return mm;
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// zxy strategy, stable: bimahonian distributions over (q)_n-type
// denominators against infinite double products, all modulo the q/p caps.
// ---------------------------------------------------------------------------
std::optional<Mismatch> run_zxy_stable(unsigned r, Kind mah, unsigned k, unsigned l,
                                       unsigned k2, unsigned l2, unsigned N, unsigned capq,
                                       unsigned capp) {
    VarSet vars{"q", "p"};
    DegreeCap cap;
    cap.limit("q", capq).limit("p", capp);

    // alphabet of the double product, truncated to the caps
    std::vector<Poly> alphabet;
    auto push_letters = [&](unsigned qstep, unsigned qoff, unsigned pstep, unsigned poff) {
        for (unsigned a = qoff; a <= capq; a += qstep)
            for (unsigned b = poff; b <= capp; b += pstep)
                alphabet.push_back(Poly::monomial(vars, 1, {{"q", a}, {"p", b}}));
    };
    unsigned qstep = 1, pstep = 1;
    if (mah == Kind::maj) {
        for (unsigned c = 0; c < r; ++c) push_letters(1, 0, 1, 0);
    } else if (mah == Kind::fmaj) {
        qstep = pstep = r;
        for (unsigned c = 0; c < r; ++c) push_letters(r, c, r, c);
    } else {  // fmaj_kl on signed permutations
        qstep = k;
        pstep = k2;
        push_letters(k, 0, k2, 0);
        push_letters(k, l, k2, l2);
    }
    std::vector<Poly> H = homogeneous_series(alphabet, N, cap);

    for (unsigned n = 0; n <= N; ++n) {
        std::vector<std::pair<StatisticId, std::string>> specs = {
            {side_stat(mah, k, l, Mod::plain), "q"},
            {side_stat(mah, k2, l2, Mod::bar_inverse), "p"},
        };
        Poly D = distribution(n, r, Subset::all, specs, vars);
        std::vector<Poly> denoms = qfact_factors(vars, "q", qstep, n);
        auto pf = qfact_factors(vars, "p", pstep, n);
        denoms.insert(denoms.end(), pf.begin(), pf.end());
        Poly lhs = expand_rational(D, denoms, cap);
        auto mm = compare_polys(lhs, H[n].truncated(cap), "z^" + std::to_string(n));
        if (mm) return mm;
    }
    return std::nullopt;
}

// grid builders ------------------------------------------------------------

std::vector<ParamMap> grid_n(int lo, int hi) {
    std::vector<ParamMap> g;
    for (int n = lo; n <= hi; ++n) g.push_back({{"n", n}});
    return g;
}

std::vector<ParamMap> grid_nr(int nlo, int nhi, int rlo, int rhi) {
    std::vector<ParamMap> g;
    for (int n = nlo; n <= nhi; ++n)
        for (int r = rlo; r <= rhi; ++r) g.push_back({{"n", n}, {"r", r}});
    return g;
}

std::vector<ParamMap> grid_r(int rlo, int rhi) {
    std::vector<ParamMap> g;
    for (int r = rlo; r <= rhi; ++r) g.push_back({{"r", r}});
    return g;
}

const std::vector<std::pair<int, int>> kKlPairs = {{1, 0}, {2, 1}, {3, 2}};

std::vector<ParamMap> grid_nkl(int nlo, int nhi) {
    std::vector<ParamMap> g;
    for (int n = nlo; n <= nhi; ++n)
        for (auto [k, l] : kKlPairs) g.push_back({{"n", n}, {"k", k}, {"l", l}});
    return g;
}

// distributions used by several records ------------------------------------

Poly dist2(unsigned n, unsigned r, Subset subset, const StatisticId& sx,
           const StatisticId& sq, const VarSet& vars) {
    return distribution(n, r, subset, {{sx, "x"}, {sq, "q"}}, vars);
}

Poly dist_q(unsigned n, unsigned r, Subset subset, const StatisticId& sq,
            const VarSet& vars) {
    return distribution(n, r, subset, {{sq, "q"}}, vars);
}

}  // namespace

// ---------------------------------------------------------------------------
// the catalog
// ---------------------------------------------------------------------------

namespace {

std::vector<IdentityRecord> build_registry() {
    std::vector<IdentityRecord> recs;
    auto add = [&](IdentityRecord rec) { recs.push_back(std::move(rec)); };

    // ---- classical base cases -------------------------------------------

    add({"carlitz",
         "sum_m [m+1]_q^n x^m = A_n(x,q) / (x;q)_{n+1} on the symmetric group",
         "x_series",
         {{"n", 0, 7}},
         {{"M", 5}},
         grid_n(1, 5),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             unsigned n = uneed(p, "n"), M = uneed(t, "M");
             VarSet vars{"q", "x"};
             Poly num = dist2(n, 1, Subset::all, st(Kind::des), st(Kind::maj), vars);
             return check_x_series(
                 vars,
                 [&](unsigned m) { return q_analogue(m + 1, vars, "q").pow(n); }, num,
                 geometric_factors(vars, "x", 1, "q", 1, n + 1), M);
         }});

    add({"euler",
         "sum_m (m+1)^n x^m = A_n(x) / (1-x)^{n+1}",
         "x_series",
         {{"n", 0, 7}},
         {{"M", 5}},
         grid_n(1, 5),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             unsigned n = uneed(p, "n"), M = uneed(t, "M");
             VarSet vars{"x"};
             Poly num = distribution(n, 1, Subset::all, {{st(Kind::des), "x"}}, vars);
             return check_x_series(
                 vars,
                 [&](unsigned m) {
                     return Poly::constant(vars, int_pow(BigInt(m + 1), n));
                 },
                 num, geometric_factors(vars, "x", 1, "x", 0, n + 1), M);
         }});

    add({"macmahon",
         "sum over S_n of q^maj = [n]_q!",
         "poly_equal",
         {{"n", 0, 7}},
         {},
         grid_n(0, 6),
         nullptr,
         [](const ParamMap& p, const ParamMap&) {
             unsigned n = uneed(p, "n");
             VarSet vars{"q"};
             return compare_polys(dist_q(n, 1, Subset::all, st(Kind::maj), vars),
                                  q_factorial(n, vars, "q"), "");
         }});

    add({"wachs",
         "q-derangement numbers: d_n(q) = [n]_q! sum_k (-1)^k q^C(k,2) / [k]_q!",
         "poly_equal",
         {{"n", 0, 7}},
         {},
         grid_n(0, 6),
         nullptr,
         [](const ParamMap& p, const ParamMap&) {
             unsigned n = uneed(p, "n");
             VarSet vars{"q"};
             Poly lhs = dist_q(n, 1, Subset::derangements, st(Kind::maj), vars);
             Poly rhs(vars);
             for (unsigned k = 0; k <= n; ++k) {
                 Poly term = Poly::constant(vars, (k % 2 == 0) ? 1 : -1);
                 term *= qpow(vars, "q", static_cast<unsigned>(binom_c2(k).get_ui()));
                 for (unsigned i = k + 1; i <= n; ++i) term *= q_analogue(i, vars, "q");
                 rhs += term;
             }
             return compare_polys(lhs, rhs, "");
         }});

    // ---- Eulerian distributions, three orders ---------------------------

    auto steingrimsson = [](Kind deskind, TotalOrder order) {
        return [deskind, order](const ParamMap& p, const ParamMap& t) {
            unsigned n = uneed(p, "n"), r = uneed(p, "r"), M = uneed(t, "M");
            VarSet vars{"x"};
            Poly num =
                distribution(n, r, Subset::all, {{st(deskind, order), "x"}}, vars);
            return check_x_series(
                vars,
                [&, r](unsigned m) {
                    return Poly::constant(vars, int_pow(BigInt(r) * m + 1, n));
                },
                num, geometric_factors(vars, "x", 1, "x", 0, n + 1), M);
        };
    };
    add({"steingrimsson_des_natural",
         "sum_m (rm+1)^n x^m = des-distribution (natural order, n-augmented) / (1-x)^{n+1}",
         "x_series",
         {{"n", 0, 6}, {"r", 1, 4}},
         {{"M", 5}},
         grid_nr(1, 5, 1, 3),
         nullptr,
         steingrimsson(Kind::des_naug, TotalOrder::natural)});
    add({"steingrimsson_des_color",
         "sum_m (rm+1)^n x^m = des-distribution (color order) / (1-x)^{n+1}",
         "x_series",
         {{"n", 0, 6}, {"r", 1, 4}},
         {{"M", 5}},
         grid_nr(1, 5, 1, 3),
         nullptr,
         steingrimsson(Kind::des, TotalOrder::color)});
    add({"steingrimsson_des_length",
         "sum_m (rm+1)^n x^m = des-distribution (length order) / (1-x)^{n+1}",
         "x_series",
         {{"n", 0, 6}, {"r", 1, 4}},
         {{"M", 5}},
         grid_nr(1, 5, 1, 3),
         nullptr,
         steingrimsson(Kind::des, TotalOrder::length)});

    // ---- Mahonian distributions ------------------------------------------

    add({"poincare_lmaj",
         "length-order major index: sum q^lmaj = [n]_q! prod_{i=1..n} (1 + q^i [r-1]_q)",
         "poly_equal",
         {{"n", 0, 5}, {"r", 1, 4}},
         {},
         grid_nr(1, 4, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap&) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r");
             VarSet vars{"q"};
             Poly lhs = dist_q(n, r, Subset::all, st(Kind::lmaj), vars);
             Poly rhs = q_factorial(n, vars, "q");
             for (unsigned i = 1; i <= n; ++i)
                 rhs *= one_of(vars) + qpow(vars, "q", i) * q_analogue(r - 1, vars, "q");
             return compare_polys(lhs, rhs, "");
         }});

    add({"fmaj_dist",
         "flag major index distribution [r]_q [2r]_q ... [nr]_q, under all three orders",
         "poly_equal",
         {{"n", 0, 6}, {"r", 1, 4}},
         {},
         grid_nr(1, 5, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap&) -> std::optional<Mismatch> {
             unsigned n = uneed(p, "n"), r = uneed(p, "r");
             VarSet vars{"q"};
             Poly rhs = one_of(vars);
             for (unsigned i = 1; i <= n; ++i) rhs *= q_analogue(r * i, vars, "q");
             for (TotalOrder o :
                  {TotalOrder::color, TotalOrder::length, TotalOrder::natural}) {
                 Poly lhs = dist_q(n, r, Subset::all, st(Kind::fmaj, o), vars);
                 auto mm = compare_polys(lhs, rhs, "order=" + order_to_string(o));
                 if (mm) return mm;
             }
             return std::nullopt;
         }});

    add({"maj_dist_colored",
         "sum over the colored group of q^maj (color order) = r^n [n]_q!",
         "poly_equal",
         {{"n", 0, 6}, {"r", 1, 4}},
         {},
         grid_nr(1, 5, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap&) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r");
             VarSet vars{"q"};
             Poly lhs = dist_q(n, r, Subset::all, st(Kind::maj), vars);
             Poly rhs = q_factorial(n, vars, "q");
             rhs *= Poly::constant(vars, int_pow(r, n));
             return compare_polys(lhs, rhs, "");
         }});

    // ---- Euler--Mahonian identities on the full group --------------------

    add({"des_fmaj",
         "sum_m [rm+1]_q^n x^m = (des, fmaj) distribution / (x; q^r)_{n+1}",
         "x_series",
         {{"n", 0, 6}, {"r", 1, 4}},
         {{"M", 5}},
         grid_nr(1, 5, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r"), M = uneed(t, "M");
             VarSet vars{"q", "x"};
             Poly num = dist2(n, r, Subset::all, st(Kind::des), st(Kind::fmaj), vars);
             return check_x_series(
                 vars,
                 [&, r](unsigned m) { return q_analogue(r * m + 1, vars, "q").pow(n); },
                 num, geometric_factors(vars, "x", 1, "q", r, n + 1), M);
         }});

    add({"desL_majL",
         "sum_m ([m+1]_q + (r-1)[m]_q)^n x^m = (des, maj) distribution at length order / (x;q)_{n+1}",
         "x_series",
         {{"n", 0, 6}, {"r", 1, 4}},
         {{"M", 5}},
         grid_nr(1, 5, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r"), M = uneed(t, "M");
             VarSet vars{"q", "x"};
             Poly num = dist2(n, r, Subset::all, st(Kind::des, TotalOrder::length),
                              st(Kind::maj, TotalOrder::length), vars);
             return check_x_series(
                 vars,
                 [&, r](unsigned m) {
                     Poly base = q_analogue(m + 1, vars, "q");
                     Poly rest = q_analogue(m, vars, "q");
                     rest *= Poly::constant(vars, BigInt(r) - 1);
                     return (base + rest).pow(n);
                 },
                 num, geometric_factors(vars, "x", 1, "q", 1, n + 1), M);
         }});

    auto fdes_fmaj_run = [](const ParamMap& p, const ParamMap& t) {
        unsigned n = uneed(p, "n"), r = uneed(p, "r"), M = uneed(t, "M");
        VarSet vars{"q", "x"};
        Poly num = dist2(n, r, Subset::all, st(Kind::fdes), st(Kind::fmaj), vars);
        std::vector<Poly> denoms;
        denoms.push_back(one_of(vars) - qpow(vars, "x", 1));
        for (unsigned i = 1; i <= n; ++i)
            denoms.push_back(one_of(vars) -
                             Poly::monomial(vars, 1, {{"x", r}, {"q", r * i}}));
        return check_x_series(
            vars, [&](unsigned m) { return q_analogue(m + 1, vars, "q").pow(n); }, num,
            denoms, M);
    };
    add({"fdes_fmaj",
         "sum_m [m+1]_q^n x^m = (fdes, fmaj) distribution / ((1-x)(1-x^r q^r)...(1-x^r q^{nr}))",
         "x_series",
         {{"n", 0, 6}, {"r", 1, 4}},
         {{"M", 5}},
         grid_nr(1, 5, 1, 3),
         nullptr,
         fdes_fmaj_run});

    add({"ldes_lmaj",
         "sum_m [m+1]_q^n x^m = (ldes, lmaj) distribution / ((x;q)_{n+1} (-x [r-1]_{qx}; q)_{n+1}); "
         "the unshifted product as registered fails for r >= 2 and the mismatch is reported",
         "x_series",
         {{"n", 0, 6}, {"r", 1, 4}},
         {{"M", 5}},
         grid_nr(1, 5, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r"), M = uneed(t, "M");
             VarSet vars{"q", "x"};
             Poly num = dist2(n, r, Subset::all, st(Kind::ldes), st(Kind::lmaj), vars);
             std::vector<Poly> denoms = geometric_factors(vars, "x", 1, "q", 1, n + 1);
             // [r-1]_{qx} = sum_{t=0}^{r-2} q^t x^t
             Poly bracket(vars);
             for (unsigned u = 0; u + 2 <= r; ++u)
                 bracket += Poly::monomial(vars, 1, {{"q", u}, {"x", u}});
             for (unsigned i = 0; i <= n; ++i)
                 denoms.push_back(one_of(vars) +
                                  bracket * Poly::monomial(vars, 1, {{"x", 1}, {"q", i}}));
             return check_x_series(
                 vars, [&](unsigned m) { return q_analogue(m + 1, vars, "q").pow(n); },
                 num, denoms, M);
         }});

    // ---- order relations --------------------------------------------------

    add({"chow_mansour_relation",
         "pointwise: fmaj at color order of wbar = r*maj(natural order, n-augmented) - csum; "
         "the two sides coincide on w itself only for r <= 2, where bar fixes colors",
         "poly_equal",
         {{"n", 0, 5}, {"r", 1, 4}},
         {},
         grid_nr(1, 4, 1, 4),
         nullptr,
         [](const ParamMap& p, const ParamMap&) -> std::optional<Mismatch> {
             unsigned n = uneed(p, "n"), r = uneed(p, "r");
             VarSet vars{"q"};
             std::optional<Mismatch> bad;
             enumerate(n, r, Subset::all, [&](const ColoredPermutation& w) {
                 if (bad) return;
                 long f = statistic(bar(w), st(Kind::fmaj));
                 long m = statistic(w, st(Kind::maj_naug, TotalOrder::natural));
                 long c = statistic(w, st(Kind::csum));
                 long cm = static_cast<long>(r) * m - c;
                 if (f != cm)
                     bad = Mismatch{vars.names(), {}, std::to_string(f),
                                    std::to_string(cm), "on w=" + format_window(w)};
             });
             return bad;
         }});

    add({"des_order_equidistribution",
         "des (zero-augmented) is equidistributed at color and length order, and with the "
         "n-augmented natural-order descent number",
         "poly_equal",
         {{"n", 0, 5}, {"r", 1, 4}},
         {},
         grid_nr(1, 4, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap&) -> std::optional<Mismatch> {
             unsigned n = uneed(p, "n"), r = uneed(p, "r");
             VarSet vars{"x"};
             Poly base = distribution(n, r, Subset::all, {{st(Kind::des), "x"}}, vars);
             Poly dl = distribution(n, r, Subset::all,
                                    {{st(Kind::des, TotalOrder::length), "x"}}, vars);
             if (auto mm = compare_polys(base, dl, "color vs length")) return mm;
             Poly dn = distribution(
                 n, r, Subset::all,
                 {{st(Kind::des_naug, TotalOrder::natural), "x"}}, vars);
             return compare_polys(base, dn, "color vs natural (n-augmented)");
         }});

    add({"fmaj_order_equidistribution",
         "fmaj is equidistributed under the color, length and natural orders",
         "poly_equal",
         {{"n", 0, 5}, {"r", 1, 4}},
         {},
         grid_nr(1, 4, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap&) -> std::optional<Mismatch> {
             unsigned n = uneed(p, "n"), r = uneed(p, "r");
             VarSet vars{"q"};
             Poly base = dist_q(n, r, Subset::all, st(Kind::fmaj), vars);
             for (TotalOrder o : {TotalOrder::length, TotalOrder::natural}) {
                 auto mm = compare_polys(base, dist_q(n, r, Subset::all, st(Kind::fmaj, o), vars),
                                         "color vs " + order_to_string(o));
                 if (mm) return mm;
             }
             return std::nullopt;
         }});

    // ---- colored (des*, maj/fmaj) variants --------------------------------

    add({"des_maj_colored",
         "sum_m ([m+1]_q + (r-1)[m]_q)^n x^m = (des, maj) distribution at color order / (x;q)_{n+1}",
         "x_series",
         {{"n", 0, 6}, {"r", 1, 4}},
         {{"M", 5}},
         grid_nr(1, 5, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r"), M = uneed(t, "M");
             VarSet vars{"q", "x"};
             Poly num = dist2(n, r, Subset::all, st(Kind::des), st(Kind::maj), vars);
             return check_x_series(
                 vars,
                 [&, r](unsigned m) {
                     Poly base = q_analogue(m + 1, vars, "q");
                     Poly rest = q_analogue(m, vars, "q");
                     rest *= Poly::constant(vars, BigInt(r) - 1);
                     return (base + rest).pow(n);
                 },
                 num, geometric_factors(vars, "x", 1, "q", 1, n + 1), M);
         }});

    add({"desstar_maj",
         "sum_m r^n [m+1]_q^n x^m = (des*, maj) distribution / (x;q)_{n+1}",
         "x_series",
         {{"n", 0, 6}, {"r", 1, 4}},
         {{"M", 5}},
         grid_nr(1, 5, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r"), M = uneed(t, "M");
             VarSet vars{"q", "x"};
             Poly num = dist2(n, r, Subset::all, st(Kind::des_star), st(Kind::maj), vars);
             return check_x_series(
                 vars,
                 [&, r](unsigned m) {
                     Poly out = q_analogue(m + 1, vars, "q").pow(n);
                     out *= Poly::constant(vars, int_pow(r, n));
                     return out;
                 },
                 num, geometric_factors(vars, "x", 1, "q", 1, n + 1), M);
         }});

    add({"fmaj_family",
         "sum_m [r(m+1)]_q^n x^m = (des*, fmaj) distribution / (x; q^r)_{n+1}",
         "x_series",
         {{"n", 0, 6}, {"r", 1, 4}},
         {{"M", 5}},
         grid_nr(1, 5, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r"), M = uneed(t, "M");
             VarSet vars{"q", "x"};
             Poly num = dist2(n, r, Subset::all, st(Kind::des_star), st(Kind::fmaj), vars);
             return check_x_series(
                 vars,
                 [&, r](unsigned m) { return q_analogue(r * (m + 1), vars, "q").pow(n); },
                 num, geometric_factors(vars, "x", 1, "q", r, n + 1), M);
         }});

    add({"fdes_fmaj_colored",
         "(fdes, fmaj) identity rederived over the colored group via specialization",
         "x_series",
         {{"n", 0, 6}, {"r", 1, 4}},
         {{"M", 5}},
         grid_nr(1, 5, 1, 3),
         nullptr,
         fdes_fmaj_run});

    // ---- two-parameter flag major on signed permutations ------------------

    add({"fmajkl_dist",
         "sum over B_n of q^fmaj[k,l] = (1+q^l)^n [n]_{q^k}!",
         "poly_equal",
         {{"n", 0, 6}, {"k", 1, 5}, {"l", 0, 5}},
         {},
         grid_nkl(1, 5),
         nullptr,
         [](const ParamMap& p, const ParamMap&) {
             unsigned n = uneed(p, "n"), k = uneed(p, "k"), l = uneed(p, "l");
             VarSet vars{"q"};
             Poly lhs = dist_q(n, 2, Subset::all, StatisticId::fmajkl(k, l), vars);
             Poly rhs = q_factorial(n, vars, "q").substituted_power("q", k);
             rhs *= (one_of(vars) + qpow(vars, "q", l)).pow(n);
             return compare_polys(lhs, rhs, "");
         }});

    add({"des_fmajkl",
         "sum_m ([m+1]_{q^k} + q^l [m]_{q^k})^n x^m = (des, fmaj[k,l]) distribution / (x; q^k)_{n+1}",
         "x_series",
         {{"n", 0, 6}, {"k", 1, 5}, {"l", 0, 5}},
         {{"M", 5}},
         grid_nkl(1, 5),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             unsigned n = uneed(p, "n"), k = uneed(p, "k"), l = uneed(p, "l"),
                      M = uneed(t, "M");
             VarSet vars{"q", "x"};
             Poly num =
                 dist2(n, 2, Subset::all, st(Kind::des), StatisticId::fmajkl(k, l), vars);
             return check_x_series(
                 vars,
                 [&](unsigned m) {
                     Poly a = q_analogue(m + 1, vars, "q").substituted_power("q", k);
                     Poly b = q_analogue(m, vars, "q").substituted_power("q", k);
                     return (a + qpow(vars, "q", l) * b).pow(n);
                 },
                 num, geometric_factors(vars, "x", 1, "q", k, n + 1), M);
         }});

    add({"desstar_fmajkl",
         "sum_m (1+q^l)^n [m+1]_{q^k}^n x^m = (des*, fmaj[k,l]) distribution / (x; q^k)_{n+1}",
         "x_series",
         {{"n", 0, 6}, {"k", 1, 5}, {"l", 0, 5}},
         {{"M", 5}},
         grid_nkl(1, 5),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             unsigned n = uneed(p, "n"), k = uneed(p, "k"), l = uneed(p, "l"),
                      M = uneed(t, "M");
             VarSet vars{"q", "x"};
             Poly num = dist2(n, 2, Subset::all, st(Kind::des_star),
                              StatisticId::fmajkl(k, l), vars);
             return check_x_series(
                 vars,
                 [&](unsigned m) {
                     Poly a = q_analogue(m + 1, vars, "q").substituted_power("q", k);
                     return ((one_of(vars) + qpow(vars, "q", l)).pow(n)) * a.pow(n);
                 },
                 num, geometric_factors(vars, "x", 1, "q", k, n + 1), M);
         }});

    // ---- derangements ------------------------------------------------------

    add({"derangement_count",
         "colored derangement count r^n n! sum_k (-1)^k / (r^k k!)",
         "poly_equal",
         {{"n", 0, 6}, {"r", 1, 4}},
         {},
         grid_nr(0, 6, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap&) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r");
             BigInt count = 0;
             enumerate(n, r, Subset::derangements,
                       [&](const ColoredPermutation&) { ++count; });
             BigInt rhs = 0;
             for (unsigned k = 0; k <= n; ++k) {
                 BigInt term = int_pow(r, n - k) * (factorial(n) / factorial(k));
                 rhs += (k % 2 == 0) ? term : -term;
             }
             VarSet vars{"q"};
             return compare_polys(Poly::constant(vars, count), Poly::constant(vars, rhs),
                                  "");
         }});

    add({"des_maj_derangements",
         "sum_m sum_k (-1)^k q^C(k,2) binom(m+1,k)_q [m+1]_q^{n-k} x^m = D_n(x,q) / (x;q)_{n+1}",
         "x_series",
         {{"n", 0, 7}},
         {{"M", 5}},
         grid_n(1, 6),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             unsigned n = uneed(p, "n"), M = uneed(t, "M");
             VarSet vars{"q", "x"};
             Poly num =
                 dist2(n, 1, Subset::derangements, st(Kind::des), st(Kind::maj), vars);
             return check_x_series(
                 vars,
                 [&](unsigned m) {
                     Poly acc(vars);
                     for (unsigned k = 0; k <= n; ++k) {
                         Poly term = q_binomial(m + 1, k, vars, "q");
                         term *= qpow(vars, "q", static_cast<unsigned>(binom_c2(k).get_ui()));
                         term *= q_analogue(m + 1, vars, "q").pow(n - k);
                         if (k % 2) term *= Poly::constant(vars, -1);
                         acc += term;
                     }
                     return acc;
                 },
                 num, geometric_factors(vars, "x", 1, "q", 1, n + 1), M);
         }});

    add({"fz_fmaj_derangements",
         "colored q-derangement numbers: fmaj distribution on colored derangements",
         "poly_equal",
         {{"n", 0, 6}, {"r", 1, 4}},
         {},
         grid_nr(1, 5, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap&) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r");
             VarSet vars{"q"};
             Poly lhs = dist_q(n, r, Subset::derangements, st(Kind::fmaj), vars);
             Poly rhs(vars);
             for (unsigned k = 0; k <= n; ++k) {
                 Poly term =
                     qpow(vars, "q", r * static_cast<unsigned>(binom_c2(k).get_ui()));
                 for (unsigned i = k + 1; i <= n; ++i)
                     term *= q_analogue(r * i, vars, "q");
                 if (k % 2) term *= Poly::constant(vars, -1);
                 rhs += term;
             }
             return compare_polys(lhs, rhs, "");
         }});

    add({"des_fmaj_colored_derangements",
         "sum_m sum_k (-1)^k q^{r C(k,2)} binom(m+1,k)_{q^r} [rm+1]_q^{n-k} x^m = "
         "(des, fmaj) distribution on colored derangements / (x; q^r)_{n+1}",
         "x_series",
         {{"n", 0, 6}, {"r", 1, 4}},
         {{"M", 5}},
         grid_nr(1, 5, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r"), M = uneed(t, "M");
             VarSet vars{"q", "x"};
             Poly num =
                 dist2(n, r, Subset::derangements, st(Kind::des), st(Kind::fmaj), vars);
             return check_x_series(
                 vars,
                 [&, r](unsigned m) {
                     Poly acc(vars);
                     for (unsigned k = 0; k <= n; ++k) {
                         Poly term =
                             q_binomial(m + 1, k, vars, "q").substituted_power("q", r);
                         term *= qpow(vars, "q",
                                      r * static_cast<unsigned>(binom_c2(k).get_ui()));
                         term *= q_analogue(r * m + 1, vars, "q").pow(n - k);
                         if (k % 2) term *= Poly::constant(vars, -1);
                         acc += term;
                     }
                     return acc;
                 },
                 num, geometric_factors(vars, "x", 1, "q", r, n + 1), M);
         }});

    add({"assaf_maj_derangements",
         "maj distribution on colored derangements: r^n [n]_q! sum_k (-1)^k q^C(k,2) / (r^k [k]_q!)",
         "poly_equal",
         {{"n", 0, 6}, {"r", 1, 4}},
         {},
         grid_nr(1, 5, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap&) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r");
             VarSet vars{"q"};
             Poly lhs = dist_q(n, r, Subset::derangements, st(Kind::maj), vars);
             Poly rhs(vars);
             for (unsigned k = 0; k <= n; ++k) {
                 Poly term = qpow(vars, "q", static_cast<unsigned>(binom_c2(k).get_ui()));
                 term *= Poly::constant(vars, int_pow(r, n - k));
                 for (unsigned i = k + 1; i <= n; ++i) term *= q_analogue(i, vars, "q");
                 if (k % 2) term *= Poly::constant(vars, -1);
                 rhs += term;
             }
             return compare_polys(lhs, rhs, "");
         }});

    add({"derangement_psi_helper",
         "order-m flag specialization of the derangement generating function: alternating "
         "e_k/h_1 sum = closed q-binomial sum = brute-force F-sum over colored derangements",
         "poly_equal",
         {{"n", 0, 4}, {"r", 1, 3}, {"m", 1, 6}},
         {},
         [] {
             std::vector<ParamMap> g;
             for (int n = 1; n <= 3; ++n)
                 for (int r = 1; r <= 3; ++r)
                     for (int m = 1; m <= 4; ++m)
                         g.push_back({{"n", n}, {"r", r}, {"m", m}});
             return g;
         }(),
         nullptr,
         [](const ParamMap& p, const ParamMap&) -> std::optional<Mismatch> {
             unsigned n = uneed(p, "n"), r = uneed(p, "r"), m = uneed(p, "m");
             VarSet vars{"q"};
             SpecializationId sid;
             sid.tag = Tag::psi_m;
             sid.r = r;
             sid.m = m;
             SubstitutionTable table = build_table(sid);
             Poly closed(vars);
             for (unsigned k = 0; k <= n; ++k) {
                 Poly term = q_binomial(m, k, vars, "q").substituted_power("q", r);
                 term *= qpow(vars, "q", r * static_cast<unsigned>(binom_c2(k).get_ui()));
                 term *= q_analogue(r * (m - 1) + 1, vars, "q").pow(n - k);
                 if (k % 2) term *= Poly::constant(vars, -1);
                 closed += term;
             }
             Poly gr(vars);
             Poly h1 = table.entry_sum(vars, "q");
             std::vector<Poly> zero_alpha = table.alphabet(0, vars, "q");
             for (unsigned k = 0; k <= n; ++k) {
                 Poly term = elementary_symmetric(zero_alpha, k) * h1.pow(n - k);
                 if (k % 2) term *= Poly::constant(vars, -1);
                 gr += term;
             }
             if (auto mm = compare_polys(gr, closed, "symmetric-function sum vs closed sum"))
                 return mm;
             Poly brute(vars);
             enumerate(n, r, Subset::derangements, [&](const ColoredPermutation& w) {
                 brute += evaluate_F(w, table, vars, "q");
             });
             return compare_polys(brute, closed, "F-sum vs closed sum");
         }});

    add({"des_fmajkl_signed_derangements",
         "sum_m sum_i (-1)^i q^{k C(i,2)} binom(m+1,i)_{q^k} ([m+1]_{q^k}+q^l[m]_{q^k})^{n-i} x^m = "
         "(des, fmaj[k,l]) distribution on signed derangements / (x; q^k)_{n+1}",
         "x_series",
         {{"n", 0, 6}, {"k", 1, 5}, {"l", 0, 5}},
         {{"M", 5}},
         grid_nkl(1, 5),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             unsigned n = uneed(p, "n"), k = uneed(p, "k"), l = uneed(p, "l"),
                      M = uneed(t, "M");
             VarSet vars{"q", "x"};
             Poly num = dist2(n, 2, Subset::derangements, st(Kind::des),
                              StatisticId::fmajkl(k, l), vars);
             return check_x_series(
                 vars,
                 [&](unsigned m) {
                     Poly acc(vars);
                     Poly base = q_analogue(m + 1, vars, "q").substituted_power("q", k) +
                                 qpow(vars, "q", l) *
                                     q_analogue(m, vars, "q").substituted_power("q", k);
                     for (unsigned i = 0; i <= n; ++i) {
                         Poly term =
                             q_binomial(m + 1, i, vars, "q").substituted_power("q", k);
                         term *= qpow(vars, "q",
                                      k * static_cast<unsigned>(binom_c2(i).get_ui()));
                         term *= base.pow(n - i);
                         if (i % 2) term *= Poly::constant(vars, -1);
                         acc += term;
                     }
                     return acc;
                 },
                 num, geometric_factors(vars, "x", 1, "q", k, n + 1), M);
         }});

    add({"fmajkl_signed_derangements",
         "fmaj[k,l] distribution on signed derangements: alternating (1+q^l)/[i]_{q^k}! sum",
         "poly_equal",
         {{"n", 0, 6}, {"k", 1, 5}, {"l", 0, 5}},
         {},
         grid_nkl(1, 5),
         nullptr,
         [](const ParamMap& p, const ParamMap&) {
             unsigned n = uneed(p, "n"), k = uneed(p, "k"), l = uneed(p, "l");
             VarSet vars{"q"};
             Poly lhs =
                 dist_q(n, 2, Subset::derangements, StatisticId::fmajkl(k, l), vars);
             Poly rhs(vars);
             for (unsigned i = 0; i <= n; ++i) {
                 Poly term = qpow(vars, "q", k * static_cast<unsigned>(binom_c2(i).get_ui()));
                 term *= (one_of(vars) + qpow(vars, "q", l)).pow(n - i);
                 for (unsigned j = i + 1; j <= n; ++j)
                     term *= q_analogue(j, vars, "q").substituted_power("q", k);
                 if (i % 2) term *= Poly::constant(vars, -1);
                 rhs += term;
             }
             return compare_polys(lhs, rhs, "");
         }});

    // ---- involutions -------------------------------------------------------

    add({"df_involutions",
         "involutions by (des, maj, fix): sum_n I_n(x,q,p0)/(x;q)_{n+1} z^n = "
         "sum_m (p0 z; q)_{m+1}^{-1} prod_{0<=i<j<=m} (1 - z^2 q^{i+j})^{-1} x^m",
         "zx_series",
         {},
         {{"N", 3}, {"M", 5}},
         {ParamMap{}},
         nullptr,
         [](const ParamMap&, const ParamMap& t) {
             return run_zx(1, false, uneed(t, "N"), uneed(t, "M"));
         }});

    add({"em_involutions",
         "sum_m sum_{lambda of n} q^{b(lambda)} binom(m+1, lambda')_q x^m = I_n(x,q) / (x;q)_{n+1}",
         "x_series",
         {{"n", 0, 7}},
         {{"M", 5}},
         grid_n(1, 6),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             unsigned n = uneed(p, "n"), M = uneed(t, "M");
             VarSet vars{"q", "x"};
             Poly num =
                 dist2(n, 1, Subset::involutions, st(Kind::des), st(Kind::maj), vars);
             auto lambdas = partitions_of(n);
             return check_x_series(
                 vars,
                 [&, lambdas](unsigned m) {
                     Poly acc(vars);
                     for (const Partition& lam : lambdas) {
                         Poly term = hook_content_binomial(m + 1, lam.conjugate(), vars, "q");
                         term *= qpow(vars, "q", lam.b_stat());
                         acc += term;
                     }
                     return acc;
                 },
                 num, geometric_factors(vars, "x", 1, "q", 1, n + 1), M);
         }});

    add({"abs_involution_count",
         "absolute involutions: closed count sum_k r^{n-k} n!/(k! 2^k (n-2k)!) and the "
         "recurrence a_{n+1} = r (a_n + n a_{n-1})",
         "poly_equal",
         {{"n", 0, 6}, {"r", 1, 4}},
         {},
         grid_nr(0, 6, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap&) -> std::optional<Mismatch> {
             unsigned n = uneed(p, "n"), r = uneed(p, "r");
             VarSet vars{"q"};
             auto count_at = [&](unsigned size) {
                 BigInt count = 0;
                 enumerate(size, r, Subset::absolute_involutions,
                           [&](const ColoredPermutation&) { ++count; });
                 return count;
             };
             BigInt an = count_at(n);
             BigInt closed = 0;
             for (unsigned k = 0; 2 * k <= n; ++k)
                 closed += int_pow(r, n - k) * gamma_two_cycles(n, k);
             if (auto mm = compare_polys(Poly::constant(vars, an),
                                         Poly::constant(vars, closed), "closed sum"))
                 return mm;
             if (n >= 2) {
                 BigInt lhs = an;
                 BigInt rhs = BigInt(r) * (count_at(n - 1) +
                                           BigInt(n - 1) * count_at(n - 2));
                 return compare_polys(Poly::constant(vars, lhs),
                                      Poly::constant(vars, rhs), "recurrence");
             }
             return std::nullopt;
         }});

    add({"gamma_colored_involutions",
         "exc on colored involutions is gamma-positive for even r: "
         "sum_i r^i gamma_{n,i} x^i (1+x)^{n-2i}",
         "poly_equal",
         {{"n", 0, 6}, {"r", 2, 4}},
         {},
         [] {
             std::vector<ParamMap> g;
             for (int n = 1; n <= 5; ++n)
                 for (int r : {2, 4}) g.push_back({{"n", n}, {"r", r}});
             return g;
         }(),
         [](const ParamMap& p) -> std::optional<std::string> {
             if (need(p, "r") % 2 != 0) return "r must be even";
             return std::nullopt;
         },
         [](const ParamMap& p, const ParamMap&) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r");
             VarSet vars{"x"};
             Poly lhs = distribution(n, r, Subset::involutions, {{st(Kind::exc), "x"}}, vars);
             Poly rhs(vars);
             Poly onepx = one_of(vars) + qpow(vars, "x", 1);
             for (unsigned i = 0; 2 * i <= n; ++i) {
                 Poly term = onepx.pow(n - 2 * i);
                 term *= qpow(vars, "x", i);
                 term *= Poly::constant(vars, int_pow(r, i) * gamma_two_cycles(n, i));
                 rhs += term;
             }
             return compare_polys(lhs, rhs, "");
         }});

    add({"gamma_abs_involutions",
         "exc on absolute involutions: sum_i r^i gamma_{n,i} x^i (1+(r-1)x)^{n-2i}",
         "poly_equal",
         {{"n", 0, 6}, {"r", 1, 4}},
         {},
         grid_nr(1, 5, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap&) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r");
             VarSet vars{"x"};
             Poly lhs = distribution(n, r, Subset::absolute_involutions,
                                     {{st(Kind::exc), "x"}}, vars);
             Poly rhs(vars);
             Poly base = one_of(vars);
             base += Poly::constant(vars, BigInt(r) - 1) * qpow(vars, "x", 1);
             for (unsigned i = 0; 2 * i <= n; ++i) {
                 Poly term = base.pow(n - 2 * i);
                 term *= qpow(vars, "x", i);
                 term *= Poly::constant(vars, int_pow(r, i) * gamma_two_cycles(n, i));
                 rhs += term;
             }
             return compare_polys(lhs, rhs, "");
         }});

    add({"hook_content",
         "order-m principal specialization of a Schur function: SYT F-sum = q^{b(lambda)} "
         "binom(m, lambda')_q",
         "poly_equal",
         {{"n", 0, 6}, {"m", 1, 6}},
         {},
         [] {
             std::vector<ParamMap> g;
             for (int n = 1; n <= 5; ++n)
                 for (int m = 1; m <= 5; ++m) g.push_back({{"n", n}, {"m", m}});
             return g;
         }(),
         nullptr,
         [](const ParamMap& p, const ParamMap&) -> std::optional<Mismatch> {
             unsigned n = uneed(p, "n"), m = uneed(p, "m");
             VarSet vars{"q"};
             SpecializationId sid;
             sid.tag = Tag::ps_m;
             sid.r = 1;
             sid.m = m;
             SubstitutionTable table = build_table(sid);
             for (const Partition& lam : partitions_of(n)) {
                 Poly lhs(vars);
                 enumerate_syt(RPartitePartition({lam}), [&](const RPartiteTableau& q) {
                     lhs += evaluate_F(q, table, vars, "q");
                 });
                 Poly rhs = hook_content_binomial(m, lam.conjugate(), vars, "q");
                 rhs *= qpow(vars, "q", lam.b_stat());
                 if (auto mm = compare_polys(lhs, rhs, "lambda=" + lam.str())) return mm;
             }
             return std::nullopt;
         }});

    add({"colored_df",
         "absolute involutions by (des, fmaj, colored fix): z-series against per-x products "
         "of geometric factors from the color-shifted substitution",
         "zx_series",
         {{"r", 1, 4}},
         {{"N", 3}, {"M", 4}},
         grid_r(1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             return run_zx(uneed(p, "r"), false, uneed(t, "N"), uneed(t, "M"));
         }});

    add({"flag_colored_df",
         "absolute involutions by (fdes, fmaj, colored fix): [r]_x-corrected z-series against "
         "per-x products from the flag substitution",
         "zx_series",
         {{"r", 1, 4}},
         {{"N", 3}, {"M", 4}},
         grid_r(1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             return run_zx(uneed(p, "r"), true, uneed(t, "N"), uneed(t, "M"));
         }});

    auto thm411 = [](bool flagged) {
        return [flagged](const ParamMap& p, const ParamMap& t) {
            unsigned n = uneed(p, "n"), r = uneed(p, "r"), M = uneed(t, "M");
            VarSet vars{"q", "x"};
            Poly num = dist2(n, r, Subset::absolute_involutions, st(Kind::des),
                             st(flagged ? Kind::fmaj : Kind::maj), vars);
            unsigned step = flagged ? r : 1;
            auto lambdas = rpartite_partitions(n, r);
            return check_x_series(
                vars,
                [&, lambdas, step, flagged, r](unsigned m) {
                    Poly acc(vars);
                    for (const RPartitePartition& lam : lambdas) {
                        unsigned bsum = 0, jshift = 0;
                        for (unsigned j = 0; j < r; ++j) {
                            bsum += lam.components[j].b_stat();
                            jshift += j * lam.components[j].size();
                        }
                        Poly term = qpow(vars, "q", flagged ? r * bsum + jshift : bsum);
                        term *= hook_content_binomial(m + 1, lam.components[0].conjugate(),
                                                      vars, "q")
                                    .substituted_power("q", step);
                        for (unsigned j = 1; j < r; ++j)
                            term *= hook_content_binomial(m, lam.components[j].conjugate(),
                                                          vars, "q")
                                        .substituted_power("q", step);
                        acc += term;
                    }
                    return acc;
                },
                num, geometric_factors(vars, "x", 1, "q", step, n + 1), M);
        };
    };
    add({"des_fmaj_abs_inv",
         "sum_m sum_{r-partite lambda} q^{r b(lambda) + sum_j j |lambda^j|} "
         "binom(m+1)binom(m)... x^m = (des, fmaj) distribution on absolute involutions / (x;q^r)_{n+1}",
         "x_series",
         {{"n", 0, 5}, {"r", 1, 4}},
         {{"M", 4}},
         grid_nr(1, 4, 1, 3),
         nullptr,
         thm411(true)});
    add({"des_maj_abs_inv",
         "sum_m sum_{r-partite lambda} q^{b(lambda)} binom(m+1)binom(m)... x^m = "
         "(des, maj) distribution on absolute involutions / (x;q)_{n+1}",
         "x_series",
         {{"n", 0, 5}, {"r", 1, 4}},
         {{"M", 4}},
         grid_nr(1, 4, 1, 3),
         nullptr,
         thm411(false)});

    add({"colored_athanasiadis",
         "r^n n! I_n^abs(x) = sum_w (1-x)^{n - c^0(w wbar)} A_{c^0(w wbar), r}(x), with the "
         "left side exactly divisible by r^n n!",
         "poly_equal",
         {{"n", 0, 5}, {"r", 1, 4}},
         {},
         grid_nr(1, 4, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap&) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r");
             VarSet vars{"x"};
             Poly lhs = distribution(n, r, Subset::absolute_involutions,
                                     {{st(Kind::des), "x"}}, vars);
             lhs *= Poly::constant(vars, int_pow(r, n) * factorial(n));
             // group the sum by the number of color-0 cycles of w wbar
             std::vector<BigInt> by_c0(n + 1, 0);
             enumerate(n, r, Subset::all, [&](const ColoredPermutation& w) {
                 auto ct = cycle_type(compose(w, bar(w)));
                 ++by_c0[ct.cycle_color_counts[0]];
             });
             Poly rhs(vars);
             Poly onemx = one_of(vars) - qpow(vars, "x", 1);
             for (unsigned c = 0; c <= n; ++c) {
                 if (by_c0[c] == 0) continue;
                 Poly term = distribution(c, r, Subset::all, {{st(Kind::des), "x"}}, vars);
                 term *= onemx.pow(n - c);
                 term *= Poly::constant(vars, by_c0[c]);
                 rhs += term;
             }
             return compare_polys(lhs, rhs, "");
         }});

    // ---- bimahonian and multivariate ---------------------------------------

    add({"maj_imaj",
         "sum_n [sum q^maj p^bar-imaj]/((q)_n (p)_n) z^n = (z; q, p)_{inf,inf}^{-r}, "
         "modulo the q/p caps; r = 1 is the classical bimahonian identity",
         "zxy_qp_series",
         {{"r", 1, 4}},
         {{"N", 3}, {"capq", 12}, {"capp", 12}},
         grid_r(1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             return run_zxy_stable(uneed(p, "r"), Kind::maj, 1, 0, 1, 0, uneed(t, "N"),
                                   uneed(t, "capq"), uneed(t, "capp"));
         }});

    add({"fmaj_ifmaj",
         "sum_n [sum q^fmaj p^bar-ifmaj]/((q^r)_n (p^r)_n) z^n = prod_c (z (qp)^c; q^r, p^r)_{inf,inf}^{-1}",
         "zxy_qp_series",
         {{"r", 1, 4}},
         {{"N", 3}, {"capq", 12}, {"capp", 12}},
         grid_r(1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             return run_zxy_stable(uneed(p, "r"), Kind::fmaj, 1, 0, 1, 0, uneed(t, "N"),
                                   uneed(t, "capq"), uneed(t, "capp"));
         }});

    add({"fmajkl_ifmajkl",
         "signed bimahonian with two-parameter flag major indices (k,l) and (k2,l2)",
         "zxy_qp_series",
         {{"k", 1, 4}, {"l", 0, 4}, {"k2", 1, 4}, {"l2", 0, 4}},
         {{"N", 4}, {"capq", 12}, {"capp", 12}},
         [] {
             std::vector<ParamMap> g;
             for (auto [k, l] : {std::pair{1, 0}, std::pair{2, 1}})
                 for (auto [k2, l2] : {std::pair{1, 0}, std::pair{2, 1}})
                     g.push_back({{"k", k}, {"l", l}, {"k2", k2}, {"l2", l2}});
             return g;
         }(),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             return run_zxy_stable(2, Kind::fmaj_kl, uneed(p, "k"), uneed(p, "l"),
                                   uneed(p, "k2"), uneed(p, "l2"), uneed(t, "N"),
                                   uneed(t, "capq"), uneed(t, "capp"));
         }});

    auto add_zxy = [&](std::string id, std::string summary, ZxySpec zs) {
        add({std::move(id),
             std::move(summary),
             "zxy_qp_series",
             {{"r", 1, 4}},
             {{"N", 3}, {"M", 4}},
             grid_r(1, 3),
             nullptr,
             [zs](const ParamMap& p, const ParamMap& t) {
                 return run_zxy_m(uneed(p, "r"), zs, uneed(t, "N"), uneed(t, "M"));
             }});
    };
    add_zxy("des_ides_maj_imaj",
            "four-variate (des, bar-ides, maj, bar-imaj) generating function against "
            "double Pochhammer products; r = 1 is the classical bieulerian-bimahonian identity",
            {Kind::des, Kind::maj, Tag::ps_m, 1, 0, 1, 0, false});
    add_zxy("desstar_idesstar_maj_imaj",
            "starred variant (des*, bar-ides*, maj, bar-imaj) with all-color order-m tables",
            {Kind::des_star, Kind::maj, Tag::ps_m_tilde, 1, 0, 1, 0, false});
    add_zxy("des_ides_fmaj_ifmaj",
            "four-variate (des, bar-ides, fmaj, bar-ifmaj) against color-shifted products",
            {Kind::des, Kind::fmaj, Tag::psi_m, 1, 0, 1, 0, false});
    add_zxy("desstar_idesstar_fmaj_ifmaj",
            "starred variant (des*, bar-ides*, fmaj, bar-ifmaj)",
            {Kind::des_star, Kind::fmaj, Tag::psi_m_tilde, 1, 0, 1, 0, false});
    add_zxy("fdes_ifdes_fmaj_ifmaj",
            "flag variant ([r]_x [r]_y prefactor): (fdes, bar-ifdes, fmaj, bar-ifmaj) "
            "against flag-substitution products",
            {Kind::fdes, Kind::fmaj, Tag::phi_m, 1, 0, 1, 0, true});

    add({"des_ides_fmajkl",
         "signed four-variate (des, bar-ides, fmaj[k,l], bar-ifmaj[k2,l2])",
         "zxy_qp_series",
         {{"k", 1, 4}, {"l", 0, 4}, {"k2", 1, 4}, {"l2", 0, 4}},
         {{"N", 4}, {"M", 4}},
         [] {
             std::vector<ParamMap> g;
             for (auto [k, l] : {std::pair{1, 0}, std::pair{2, 1}})
                 for (auto [k2, l2] : {std::pair{1, 0}, std::pair{2, 1}})
                     g.push_back({{"k", k}, {"l", l}, {"k2", k2}, {"l2", l2}});
             return g;
         }(),
         nullptr,
         [](const ParamMap& p, const ParamMap& t) {
             ZxySpec zs{Kind::des, Kind::fmaj_kl, Tag::theta_m,
                        uneed(p, "k"), uneed(p, "l"), uneed(p, "k2"), uneed(p, "l2"),
                        false};
             return run_zxy_m(2, zs, uneed(t, "N"), uneed(t, "M"));
         }});

    add({"cauchy_kernel",
         "sum_w F_w(t; q) F_{wbar^{-1}}(t'; p) equals the z^n coefficient of the product "
         "kernel over per-color entry pairs",
         "poly_equal",
         {{"n", 0, 4}, {"r", 1, 4}},
         {},
         grid_nr(1, 3, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap&) {
             unsigned n = uneed(p, "n"), r = uneed(p, "r");
             VarSet vars{"q", "p"};
             SpecializationId sa, sb;
             sa.tag = Tag::ps_m;
             sa.r = r;
             sa.m = 2;
             sb.tag = Tag::psi_m;
             sb.r = r;
             sb.m = 2;
             SubstitutionTable ta = build_table(sa), tb = build_table(sb);
             Poly lhs(vars);
             enumerate(n, r, Subset::all, [&](const ColoredPermutation& w) {
                 lhs += evaluate_F(w, ta, vars, "q") *
                        evaluate_F(inverse(bar(w)), tb, vars, "p");
             });
             std::vector<Poly> alphabet;
             for (unsigned c = 0; c < r; ++c)
                 for (const Poly& a : ta.alphabet(c, vars, "q"))
                     for (const Poly& b : tb.alphabet(c, vars, "p"))
                         alphabet.push_back(a * b);
             return compare_polys(lhs, complete_homogeneous(alphabet, n), "");
         }});

    add({"power_sum_identity",
         "sum over the whole colored group of F_w under any finite substitution equals "
         "(sum of all entries)^n",
         "poly_equal",
         {{"n", 0, 4}, {"r", 1, 4}},
         {},
         grid_nr(1, 3, 1, 3),
         nullptr,
         [](const ParamMap& p, const ParamMap&) -> std::optional<Mismatch> {
             unsigned n = uneed(p, "n"), r = uneed(p, "r");
             VarSet vars{"q"};
             for (Tag tag : {Tag::ps_m, Tag::psi_m}) {
                 SpecializationId sid;
                 sid.tag = tag;
                 sid.r = r;
                 sid.m = tag == Tag::ps_m ? 2 : 3;
                 SubstitutionTable table = build_table(sid);
                 Poly lhs(vars);
                 enumerate(n, r, Subset::all, [&](const ColoredPermutation& w) {
                     lhs += evaluate_F(w, table, vars, "q");
                 });
                 Poly rhs = table.entry_sum(vars, "q").pow(n);
                 if (auto mm = compare_polys(lhs, rhs, "table " + sid.str())) return mm;
             }
             return std::nullopt;
         }});

    return recs;
}

}  // namespace

const std::vector<IdentityRecord>& registry() {
    static const std::vector<IdentityRecord> recs = build_registry();
    return recs;
}

const IdentityRecord* find_record(const std::string& id) {
    for (const auto& rec : registry())
        if (rec.id == id) return &rec;
    return nullptr;
}

VerifyReport verify(const std::string& id, const ParamMap& params, const ParamMap& truncs) {
    const IdentityRecord* rec = find_record(id);
    if (!rec) throw ParameterError("unknown identity id: " + id);
    for (const auto& spec : rec->params) {
        auto it = params.find(spec.name);
        if (it == params.end())
            throw ParameterError(id + ": missing parameter " + spec.name);
        if (it->second < spec.min || it->second > spec.max)
            throw ParameterError(id + ": parameter " + spec.name + "=" +
                                 std::to_string(it->second) + " outside [" +
                                 std::to_string(spec.min) + "," + std::to_string(spec.max) +
                                 "]");
    }
    for (const auto& [k, v] : params) {
        bool known = false;
        for (const auto& spec : rec->params) known = known || spec.name == k;
        if (!known) throw ParameterError(id + ": undeclared parameter " + k);
    }
    if (rec->validate_extra) {
        if (auto msg = rec->validate_extra(params))
            throw ParameterError(id + ": " + *msg);
    }
    ParamMap effective = rec->default_truncations;
    for (const auto& [k, v] : truncs) {
        if (!effective.count(k))
            throw ParameterError(id + ": strategy does not consume truncation " + k);
        if (v < 0) throw ParameterError(id + ": truncation " + k + " must be nonnegative");
        effective[k] = v;
    }
    VerifyReport report;
    report.id = id;
    report.params = params;
    report.truncations = effective;
    report.mismatch = rec->run(params, effective);
    report.pass = !report.mismatch.has_value();
    return report;
}

std::vector<GridEntry> default_grid_entries() {
    std::vector<GridEntry> out;
    for (const auto& rec : registry())
        for (const auto& row : rec.default_grid)
            out.push_back({rec.id, row, rec.default_truncations});
    return out;
}

std::vector<VerifyReport> verify_all(const std::vector<GridEntry>* override_grid,
                                     unsigned workers) {
    std::vector<GridEntry> tasks =
        override_grid ? *override_grid : default_grid_entries();
    std::vector<VerifyReport> reports(tasks.size());
    if (workers == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = hw == 0 ? 1 : hw;
    }
    if (!tasks.empty() && workers > tasks.size())
        workers = static_cast<unsigned>(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            try {
                reports[i] = verify(tasks[i].id, tasks[i].params, tasks[i].truncations);
            } catch (const Error& e) {
                VerifyReport rep;
                rep.id = tasks[i].id;
                rep.params = tasks[i].params;
                rep.truncations = tasks[i].truncations;
                rep.pass = false;
                rep.error = e.what();
                reports[i] = std::move(rep);
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    std::sort(reports.begin(), reports.end(),
              [](const VerifyReport& a, const VerifyReport& b) {
                  if (a.id != b.id) return a.id < b.id;
                  if (a.params != b.params) return a.params < b.params;
                  return a.truncations < b.truncations;
              });
    return reports;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json j;
    j["id"] = id;
    j["params"] = params;
    j["truncations"] = truncations;
    j["pass"] = pass;
    if (mismatch) {
        nlohmann::json m;
        m["vars"] = mismatch->vars;
        m["exponents"] = mismatch->exponents;
        m["lhs"] = mismatch->lhs;
        m["rhs"] = mismatch->rhs;
        if (!mismatch->context.empty()) m["context"] = mismatch->context;
        j["mismatch"] = std::move(m);
    }
    if (error) j["error"] = *error;
    return j;
}

}  // namespace emlab
