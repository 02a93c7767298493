#include <emlab/specialize.hpp>

#include <sstream>

namespace emlab {

std::optional<unsigned> SubstitutionTable::entry(unsigned color, unsigned i) const {
    if (color >= entries.size())
        throw DimensionError("color out of range for substitution table");
    if (i == 0 || i > entries[color].size()) return std::nullopt;
    return entries[color][i - 1];
}

unsigned SubstitutionTable::support(unsigned color) const {
    if (color >= entries.size())
        throw DimensionError("color out of range for substitution table");
    unsigned last = 0;
    for (unsigned i = 0; i < entries[color].size(); ++i)
        if (entries[color][i]) last = i + 1;
    return last;
}

std::vector<Poly> SubstitutionTable::alphabet(unsigned color, const VarSet& vars,
                                              std::string_view v) const {
    std::vector<Poly> out;
    for (unsigned i = 1; i <= support(color); ++i)
        if (auto e = entry(color, i))
            out.push_back(Poly::monomial(vars, 1, {{std::string(v), *e}}));
    return out;
}

Poly SubstitutionTable::entry_sum(const VarSet& vars, std::string_view v) const {
    Poly out(vars);
    for (unsigned c = 0; c < r; ++c)
        for (const Poly& a : alphabet(c, vars, v)) out += a;
    return out;
}

bool SpecializationId::is_stable() const {
    return tag == Tag::ps || tag == Tag::psi || tag == Tag::theta;
}

namespace {

void validate(const SpecializationId& s) {
    if (s.r == 0) throw ParameterError("specialization needs r >= 1");
    if (s.is_theta()) {
        if (s.r != 2) throw ParameterError("the theta family is defined for r = 2 only");
        if (s.k == 0) throw ParameterError("theta needs k >= 1");
    }
    if (s.is_stable()) {
        if (s.stable_index == 0)
            throw ParameterError("stable specializations need a truncation index I >= 1");
    } else if (s.m == 0) {
        throw ParameterError("specialization of order m needs m >= 1");
    }
}

}  // namespace

SubstitutionTable build_table(const SpecializationId& s) {
    validate(s);
    SubstitutionTable t;
    t.r = s.r;
    t.entries.assign(s.r, {});
    auto set = [&](unsigned c, unsigned i, unsigned exp) {
        auto& col = t.entries[c];
        if (col.size() < i) col.resize(i);
        col[i - 1] = exp;
    };
    using Tag = SpecializationId::Tag;
    switch (s.tag) {
        case Tag::ps:
            for (unsigned c = 0; c < s.r; ++c)
                for (unsigned i = 1; i <= s.stable_index; ++i) set(c, i, i - 1);
            break;
        case Tag::ps_m:
            for (unsigned i = 1; i <= s.m; ++i) set(0, i, i - 1);
            for (unsigned c = 1; c < s.r; ++c)
                for (unsigned i = 1; i + 1 <= s.m; ++i) set(c, i, i - 1);
            break;
        case Tag::ps_m_tilde:
            for (unsigned c = 0; c < s.r; ++c)
                for (unsigned i = 1; i <= s.m; ++i) set(c, i, i - 1);
            break;
        case Tag::psi:
            for (unsigned c = 0; c < s.r; ++c)
                for (unsigned i = 1; i <= s.stable_index; ++i) set(c, i, s.r * (i - 1) + c);
            break;
        case Tag::psi_m:
            for (unsigned i = 1; i <= s.m; ++i) set(0, i, s.r * (i - 1));
            for (unsigned c = 1; c < s.r; ++c)
                for (unsigned i = 1; i + 1 <= s.m; ++i) set(c, i, s.r * (i - 1) + c);
            break;
        case Tag::psi_m_tilde:
            for (unsigned c = 0; c < s.r; ++c)
                for (unsigned i = 1; i <= s.m; ++i) set(c, i, s.r * (i - 1) + c);
            break;
        case Tag::phi_m:
            // q^{i-1+j} iff i = 1 (mod r) and i + j <= m; this single rule
            // reproduces both boundary conditions of the case description
            for (unsigned c = 0; c < s.r; ++c)
                for (unsigned i = 1; i + c <= s.m; ++i)
                    if ((i - 1) % s.r == 0) set(c, i, i - 1 + c);
            break;
        case Tag::theta:
            for (unsigned i = 1; i <= s.stable_index; ++i) {
                set(0, i, s.k * (i - 1));
                set(1, i, s.k * (i - 1) + s.l);
            }
            break;
        case Tag::theta_m:
            for (unsigned i = 1; i <= s.m; ++i) set(0, i, s.k * (i - 1));
            for (unsigned i = 1; i + 1 <= s.m; ++i) set(1, i, s.k * (i - 1) + s.l);
            break;
        case Tag::theta_m_tilde:
            for (unsigned i = 1; i <= s.m; ++i) {
                set(0, i, s.k * (i - 1));
                set(1, i, s.k * (i - 1) + s.l);
            }
            break;
    }
    return t;
}

namespace {

// DFS over i_1 >= ... >= i_n >= 1 with strict drops across starred descents.
struct FEval {
    const SubstitutionTable* table;
    const std::vector<unsigned>* colors;  // color of position/entry t (0-based)
    const std::set<unsigned>* des_star;
    unsigned n;
    std::size_t qidx;
    Poly* out;
    Exponents scratch;

    void rec(unsigned pos, unsigned bound, unsigned expsum) {
        if (pos > n) {
            scratch[qidx] = expsum;
            out->add_term(scratch, 1);
            return;
        }
        unsigned c = (*colors)[pos - 1];
        unsigned ub = std::min(bound, table->support(c));
        for (unsigned i = ub; i >= 1; --i) {
            auto e = table->entry(c, i);
            if (!e) continue;
            unsigned next_bound = i;
            if (pos < n && des_star->count(pos)) next_bound = i - 1;
            rec(pos + 1, next_bound, expsum + *e);
        }
    }
};

Poly evaluate_F_impl(const std::vector<unsigned>& colors, const std::set<unsigned>& des_star,
                     const SubstitutionTable& t, const VarSet& vars, std::string_view v) {
    Poly out(vars);
    unsigned n = static_cast<unsigned>(colors.size());
    if (n == 0) return Poly::constant(vars, 1);
    FEval ev;
    ev.table = &t;
    ev.colors = &colors;
    ev.des_star = &des_star;
    ev.n = n;
    ev.qidx = vars.index(v);
    ev.out = &out;
    ev.scratch.assign(vars.size(), 0);
    unsigned first_bound = t.support(colors[0]);
    if (first_bound == 0) return out;
    ev.rec(1, first_bound, 0);
    return out;
}

}  // namespace

Poly evaluate_F(const ColoredPermutation& w, const SubstitutionTable& t, const VarSet& vars,
                std::string_view v) {
    if (w.r != t.r) throw DimensionError("table color count does not match the permutation");
    std::set<unsigned> ds = descent_set(w, TotalOrder::color, DescentConvention::starred);
    return evaluate_F_impl(w.colors, ds, t, vars, v);
}

Poly evaluate_F(const RPartiteTableau& q, const SubstitutionTable& t, const VarSet& vars,
                std::string_view v) {
    if (q.r() != t.r) throw DimensionError("table color count does not match the tableau");
    unsigned n = q.size();
    std::vector<unsigned> colors(n);
    for (unsigned entry = 1; entry <= n; ++entry) colors[entry - 1] = q.component_of(entry);
    std::set<unsigned> ds = tableau_descent_set(q);
    ds.erase(0u);
    return evaluate_F_impl(colors, ds, t, vars, v);
}

ClosedForm closed_form(const ColoredPermutation& w, const SpecializationId& s,
                       const VarSet& vars) {
    validate(s);
    if (w.r != s.r) throw DimensionError("specialization r does not match the permutation");
    using Tag = SpecializationId::Tag;
    using Kind = StatisticId::Kind;
    unsigned n = w.n;
    auto stat = [&](Kind kind) {
        StatisticId id = StatisticId::make(kind, TotalOrder::color);
        if (kind == Kind::fmaj_kl) id = StatisticId::fmajkl(s.k, s.l);
        return static_cast<unsigned>(statistic(w, id));
    };
    auto qpow = [&](unsigned e) { return Poly::monomial(vars, 1, {{"q", e}}); };
    auto geom_factors = [&](unsigned count, unsigned qstep, unsigned xstep) {
        // (1 - x^xstep q^{qstep*i}) for i = 0..count-1, or q-only when xstep=0
        std::vector<Poly> fs;
        for (unsigned i = 0; i < count; ++i) {
            std::vector<std::pair<std::string, unsigned>> pows;
            if (xstep > 0) pows.push_back({"x", xstep});
            pows.push_back({"q", qstep * i});
            fs.push_back(Poly::constant(vars, 1) - Poly::monomial(vars, 1, pows));
        }
        return fs;
    };
    ClosedForm cf{Poly::constant(vars, 1), {}, 0};
    switch (s.tag) {
        case Tag::ps: {
            cf.numerator = qpow(stat(Kind::maj));
            for (unsigned i = 1; i <= n; ++i)
                cf.denominator.push_back(Poly::constant(vars, 1) - qpow(i));
            break;
        }
        case Tag::ps_m:
        case Tag::ps_m_tilde: {
            cf.numerator = qpow(stat(Kind::maj));
            cf.x_exponent = stat(s.tag == Tag::ps_m ? Kind::des : Kind::des_star);
            cf.denominator = geom_factors(n + 1, 1, 1);
            break;
        }
        case Tag::psi: {
            cf.numerator = qpow(stat(Kind::fmaj));
            for (unsigned i = 1; i <= n; ++i)
                cf.denominator.push_back(Poly::constant(vars, 1) - qpow(s.r * i));
            break;
        }
        case Tag::psi_m:
        case Tag::psi_m_tilde: {
            cf.numerator = qpow(stat(Kind::fmaj));
            cf.x_exponent = stat(s.tag == Tag::psi_m ? Kind::des : Kind::des_star);
            cf.denominator = geom_factors(n + 1, s.r, 1);
            break;
        }
        case Tag::phi_m: {
            cf.numerator = qpow(stat(Kind::fmaj));
            cf.x_exponent = stat(Kind::fdes);
            cf.denominator.push_back(Poly::constant(vars, 1) -
                                     Poly::monomial(vars, 1, {{"x", 1}}));
            for (unsigned i = 1; i <= n; ++i)
                cf.denominator.push_back(
                    Poly::constant(vars, 1) -
                    Poly::monomial(vars, 1, {{"x", s.r}, {"q", s.r * i}}));
            break;
        }
        case Tag::theta: {
            cf.numerator = qpow(stat(Kind::fmaj_kl));
            for (unsigned i = 1; i <= n; ++i)
                cf.denominator.push_back(Poly::constant(vars, 1) - qpow(s.k * i));
            break;
        }
        case Tag::theta_m:
        case Tag::theta_m_tilde: {
            cf.numerator = qpow(stat(Kind::fmaj_kl));
            cf.x_exponent = stat(s.tag == Tag::theta_m ? Kind::des : Kind::des_star);
            cf.denominator = geom_factors(n + 1, s.k, 1);
            break;
        }
    }
    return cf;
}

SpecializationId SpecializationId::parse(const std::string& text) {
    SpecializationId s;
    std::string name = text;
    std::vector<std::pair<std::string, unsigned>> args;
    auto bracket = text.find('[');
    if (bracket != std::string::npos) {
        if (text.back() != ']')
            throw ParameterError("malformed specialization arguments: " + text);
        name = text.substr(0, bracket);
        std::istringstream is(text.substr(bracket + 1, text.size() - bracket - 2));
        std::string tok;
        while (std::getline(is, tok, ',')) {
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw ParameterError("specialization arguments use key=value: " + text);
            args.push_back({tok.substr(0, eq),
                            static_cast<unsigned>(std::stoul(tok.substr(eq + 1)))});
        }
    }
    using Tag = SpecializationId::Tag;
    if (name == "ps") s.tag = Tag::ps;
    else if (name == "ps_m") s.tag = Tag::ps_m;
    else if (name == "ps_m~") s.tag = Tag::ps_m_tilde;
    else if (name == "psi") s.tag = Tag::psi;
    else if (name == "psi_m") s.tag = Tag::psi_m;
    else if (name == "psi_m~") s.tag = Tag::psi_m_tilde;
    else if (name == "phi_m") s.tag = Tag::phi_m;
    else if (name == "theta") s.tag = Tag::theta;
    else if (name == "theta_m") s.tag = Tag::theta_m;
    else if (name == "theta_m~") s.tag = Tag::theta_m_tilde;
    else throw ParameterError("unknown specialization: " + text);
    for (const auto& [key, val] : args) {
        if (key == "m") s.m = val;
        else if (key == "k") s.k = val;
        else if (key == "l") s.l = val;
        else if (key == "I") s.stable_index = val;
        else if (key == "r") s.r = val;
        else throw ParameterError("unknown specialization argument: " + key);
    }
    return s;
}

std::string SpecializationId::str() const {
    using Tag = SpecializationId::Tag;
    std::string name;
    switch (tag) {
        case Tag::ps: name = "ps"; break;
        case Tag::ps_m: name = "ps_m"; break;
        case Tag::ps_m_tilde: name = "ps_m~"; break;
        case Tag::psi: name = "psi"; break;
        case Tag::psi_m: name = "psi_m"; break;
        case Tag::psi_m_tilde: name = "psi_m~"; break;
        case Tag::phi_m: name = "phi_m"; break;
        case Tag::theta: name = "theta"; break;
        case Tag::theta_m: name = "theta_m"; break;
        case Tag::theta_m_tilde: name = "theta_m~"; break;
    }
    std::ostringstream os;
    os << name;
    std::vector<std::string> args;
    if (is_theta()) {
        args.push_back("k=" + std::to_string(k));
        args.push_back("l=" + std::to_string(l));
    }
    if (is_stable()) args.push_back("I=" + std::to_string(stable_index));
    else args.push_back("m=" + std::to_string(m));
    os << "[";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) os << ",";
        os << args[i];
    }
    os << "]";
    return os.str();
}

}  // namespace emlab
