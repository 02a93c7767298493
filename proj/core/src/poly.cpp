#include <emlab/poly.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace emlab {

int variable_rank(std::string_view name) {
    if (name == "q") return 0;
    if (name == "p") return 1;
    if (name.size() >= 2 && name[0] == 'p') {
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw ParameterError("unknown variable name: " + std::string(name));
        int idx = std::stoi(std::string(name.substr(1)));
        return 2 + idx;  // p0, p1, p2, ...
    }
    if (name == "x") return 1000;
    if (name == "y") return 1001;
    if (name == "z") return 1002;
    throw ParameterError("unknown variable name: " + std::string(name));
}

VarSet::VarSet(std::initializer_list<std::string> names)
    : VarSet(std::vector<std::string>(names)) {}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (const auto& n : names_) variable_rank(n);
    std::sort(names_.begin(), names_.end(), [](const std::string& a, const std::string& b) {
        return variable_rank(a) < variable_rank(b);
    });
    for (std::size_t i = 1; i < names_.size(); ++i)
        if (names_[i] == names_[i - 1])
            throw ParameterError("duplicate variable in universe: " + names_[i]);
}

std::size_t VarSet::index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw ParameterError("variable not in universe: " + std::string(name));
}

bool VarSet::contains(std::string_view name) const {
    for (const auto& n : names_)
        if (n == name) return true;
    return false;
}

bool VarSet::subset_of(const VarSet& other) const {
    for (const auto& n : names_)
        if (!other.contains(n)) return false;
    return true;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db;
    // Equal degree: the term with larger exponent on the highest-priority
    // variable comes first.
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

DegreeCap& DegreeCap::limit(const std::string& var, unsigned max) {
    variable_rank(var);  // validate the name
    limits_[var] = max;
    return *this;
}

std::optional<unsigned> DegreeCap::limit_for(std::string_view var) const {
    auto it = limits_.find(var);
    if (it == limits_.end()) return std::nullopt;
    return it->second;
}

bool DegreeCap::admits(const VarSet& vars, const Exponents& e) const {
    if (limits_.empty()) return true;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto lim = limit_for(vars.name(i));
        if (lim && e[i] > *lim) return false;
    }
    return true;
}

Poly Poly::constant(const VarSet& vars, BigInt c) {
    Poly p(vars);
    if (c != 0) p.terms_.emplace(Exponents(vars.size(), 0), std::move(c));
    return p;
}

Poly Poly::variable(const VarSet& vars, std::string_view name) {
    Poly p(vars);
    Exponents e(vars.size(), 0);
    e[vars.index(name)] = 1;
    p.terms_.emplace(std::move(e), 1);
    return p;
}

Poly Poly::monomial(const VarSet& vars, BigInt coeff,
                    const std::vector<std::pair<std::string, unsigned>>& powers) {
    Poly p(vars);
    if (coeff == 0) return p;
    Exponents e(vars.size(), 0);
    for (const auto& [name, exp] : powers) e[vars.index(name)] += exp;
    p.terms_.emplace(std::move(e), std::move(coeff));
    return p;
}

BigInt Poly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt Poly::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

unsigned Poly::degree_in(std::string_view var) const {
    std::size_t i = vars_.index(var);
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (unsigned v : e) s += v;
        d = std::max(d, s);
    }
    return d;
}

void Poly::require_same_universe(const Poly& rhs) const {
    if (!(vars_ == rhs.vars_))
        throw DimensionError("polynomials live in different variable universes");
}

void Poly::add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_universe(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_same_universe(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_universe(b);
    Poly out(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly Poly::mul_truncated(const Poly& rhs, const DegreeCap& cap) const {
    require_same_universe(rhs);
    Poly out(vars_);
    Exponents e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (cap.admits(vars_, e)) out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly Poly::truncated(const DegreeCap& cap) const {
    Poly out(vars_);
    for (const auto& [e, c] : terms_)
        if (cap.admits(vars_, e)) out.terms_.emplace(e, c);
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(vars_, 1);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Poly Poly::exact_div(const Poly& divisor) const {
    require_same_universe(divisor);
    if (divisor.is_zero()) throw DivisibilityError("division by the zero polynomial");
    Poly rem = *this;
    Poly quot(vars_);
    const auto& dlead = *divisor.terms_.rbegin();  // greatest term in canonical order
    Exponents e(vars_.size());
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        bool divides =
            mpz_divisible_p(rlead.second.get_mpz_t(), dlead.second.get_mpz_t()) != 0;
        for (std::size_t i = 0; i < e.size() && divides; ++i) {
            if (rlead.first[i] < dlead.first[i]) divides = false;
            else e[i] = rlead.first[i] - dlead.first[i];
        }
        if (!divides)
            throw DivisibilityError("exact division failed: remainder is nonzero");
        BigInt qc;
        mpz_divexact(qc.get_mpz_t(), rlead.second.get_mpz_t(), dlead.second.get_mpz_t());
        Poly t(vars_);
        t.terms_.emplace(e, std::move(qc));
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

Poly Poly::substituted_power(std::string_view var, unsigned k) const {
    if (k == 0) throw ParameterError("substituted_power requires k >= 1");
    std::size_t idx = vars_.index(var);
    Poly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents scaled = e;
        scaled[idx] *= k;
        out.add_term(scaled, c);
    }
    return out;
}

Poly Poly::coefficient_of(std::string_view var, unsigned e) const {
    std::size_t idx = vars_.index(var);
    Poly out(vars_);
    for (const auto& [ex, c] : terms_) {
        if (ex[idx] != e) continue;
        Exponents reduced = ex;
        reduced[idx] = 0;
        out.terms_.emplace(std::move(reduced), c);
    }
    return out;
}

Poly Poly::embedded_into(const VarSet& bigger) const {
    if (!vars_.subset_of(bigger))
        throw DimensionError("embedding target must contain every variable of the source");
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) where[i] = bigger.index(vars_.name(i));
    Poly out(bigger);
    for (const auto& [e, c] : terms_) {
        Exponents be(bigger.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) be[where[i]] = e[i];
        out.terms_.emplace(std::move(be), c);
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = c >= 0 ? c : BigInt(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] == 1) factors.push_back(vars_.name(i));
            else factors.push_back(vars_.name(i) + "^" + std::to_string(e[i]));
        }
        if (factors.empty()) {
            os << to_decimal(mag);
        } else {
            if (mag != 1) os << to_decimal(mag) << "*";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) os << "*";
                os << factors[i];
            }
        }
    }
    return os.str();
}

nlohmann::json Poly::to_json() const {
    nlohmann::json j;
    j["vars"] = vars_.names();
    j["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::json t;
        t["c"] = to_decimal(c);
        t["e"] = e;
        j["terms"].push_back(std::move(t));
    }
    return j;
}

Poly Poly::from_json(const nlohmann::json& j) {
    VarSet vars(j.at("vars").get<std::vector<std::string>>());
    Poly p(vars);
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("e").get<Exponents>();
        if (e.size() != vars.size())
            throw ParameterError("exponent vector length does not match variable universe");
        BigInt c(t.at("c").get<std::string>());
        p.add_term(e, c);
    }
    return p;
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
        case PolyOp::exact_div: return a.exact_div(b);
    }
    throw ParameterError("unknown polynomial operation");
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace emlab
