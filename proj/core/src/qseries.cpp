#include <emlab/qseries.hpp>

namespace emlab {

Poly q_analogue(unsigned n, const VarSet& vars, std::string_view v) {
    Poly out(vars);
    std::size_t idx = vars.index(v);
    Exponents e(vars.size(), 0);
    for (unsigned i = 0; i < n; ++i) {
        e[idx] = i;
        out.add_term(e, 1);
    }
    return out;
}

Poly q_factorial(unsigned n, const VarSet& vars, std::string_view v) {
    Poly out = Poly::constant(vars, 1);
    for (unsigned i = 1; i <= n; ++i) out *= q_analogue(i, vars, v);
    return out;
}

Poly q_binomial(unsigned n, unsigned k, const VarSet& vars, std::string_view v) {
    if (k > n) return Poly::zero(vars);
    // row-by-row q-Pascal: [n k] = [n-1 k-1] + v^k [n-1 k]
    std::vector<Poly> row(n + 1, Poly::zero(vars));
    row[0] = Poly::constant(vars, 1);
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(i, k); j >= 1; --j) {
            Poly shift = Poly::monomial(vars, 1, {{std::string(v), j}});
            row[j] = row[j - 1] + shift * row[j];
        }
    }
    return row[k];
}

Poly pochhammer(const Poly& a, std::string_view qv, unsigned n) {
    const VarSet& vars = a.vars();
    Poly out = Poly::constant(vars, 1);
    for (unsigned i = 0; i < n; ++i) {
        Poly qi = Poly::monomial(vars, 1, {{std::string(qv), i}});
        out *= Poly::constant(vars, 1) - a * qi;
    }
    return out;
}

Poly double_pochhammer(const VarSet& vars, std::string_view zv, std::string_view qv,
                       std::string_view pv, std::optional<unsigned> k,
                       std::optional<unsigned> l, const DegreeCap& cap) {
    unsigned imax, jmax;
    if (k) {
        imax = *k;
    } else {
        auto qcap = cap.limit_for(qv);
        if (!qcap)
            throw TruncationRequired("unbounded q-index needs a degree cap on " +
                                     std::string(qv));
        imax = *qcap + 1;  // factors with q-exponent beyond the cap are 1 mod cap
    }
    if (l) {
        jmax = *l;
    } else {
        auto pcap = cap.limit_for(pv);
        if (!pcap)
            throw TruncationRequired("unbounded p-index needs a degree cap on " +
                                     std::string(pv));
        jmax = *pcap + 1;
    }
    Poly out = Poly::constant(vars, 1);
    for (unsigned i = 1; i <= imax; ++i) {
        for (unsigned j = 1; j <= jmax; ++j) {
            Poly factor = Poly::constant(vars, 1) -
                          Poly::monomial(vars, 1,
                                         {{std::string(zv), 1},
                                          {std::string(qv), i - 1},
                                          {std::string(pv), j - 1}});
            out = out.mul_truncated(factor, cap);
        }
    }
    return out;
}

namespace {

// 1 / f modulo the cap, where f = 1 - u with u free of constant term.
Poly series_inverse(const Poly& f, const DegreeCap& cap) {
    const VarSet& vars = f.vars();
    if (f.constant_term() != 1)
        throw NotInvertibleAsSeries("series denominator must have constant term 1");
    Poly u = Poly::constant(vars, 1) - f;
    for (const auto& [e, c] : u.terms()) {
        bool capped = false;
        for (std::size_t i = 0; i < vars.size() && !capped; ++i)
            if (e[i] > 0 && cap.limit_for(vars.name(i))) capped = true;
        if (!capped)
            throw TruncationRequired(
                "denominator term involves no capped variable; series would not terminate");
    }
    Poly acc = Poly::constant(vars, 1);
    Poly term = u.truncated(cap);
    while (!term.is_zero()) {
        acc += term;
        term = term.mul_truncated(u, cap);
    }
    return acc;
}

}  // namespace

Poly expand_rational(const Poly& numer, const std::vector<Poly>& factors,
                     const DegreeCap& cap) {
    Poly out = numer.truncated(cap);
    for (const Poly& f : factors) {
        if (out.is_zero()) break;
        out = out.mul_truncated(series_inverse(f.embedded_into(numer.vars()), cap), cap);
    }
    return out;
}

Poly expand_rational(const Poly& numer, const std::vector<Poly>& factors,
                     std::string_view v, unsigned max_deg) {
    DegreeCap cap;
    cap.limit(std::string(v), max_deg);
    return expand_rational(numer, factors, cap);
}

Poly complete_homogeneous(const std::vector<Poly>& alphabet, unsigned n) {
    return homogeneous_series(alphabet, n, DegreeCap())[n];
}

Poly elementary_symmetric(const std::vector<Poly>& alphabet, unsigned k) {
    VarSet vars = alphabet.empty() ? VarSet{"q"} : alphabet.front().vars();
    std::vector<Poly> e(k + 1, Poly::zero(vars));
    e[0] = Poly::constant(vars, 1);
    for (const Poly& a : alphabet) {
        // descending degree keeps each letter used at most once
        for (unsigned d = std::min<std::size_t>(k, alphabet.size()); d >= 1; --d)
            e[d] += a * e[d - 1];
    }
    return e[k];
}

std::vector<Poly> homogeneous_series(const std::vector<Poly>& alphabet, unsigned n,
                                     const DegreeCap& cap) {
    VarSet vars = alphabet.empty() ? VarSet{"q"} : alphabet.front().vars();
    std::vector<Poly> h(n + 1, Poly::zero(vars));
    h[0] = Poly::constant(vars, 1);
    for (const Poly& a : alphabet) {
        // ascending degree allows unlimited repetition of each letter
        for (unsigned d = 1; d <= n; ++d) h[d] += a.mul_truncated(h[d - 1], cap);
    }
    return h;
}

}  // namespace emlab
