#ifndef EMLAB_POLY_HPP
#define EMLAB_POLY_HPP

#include <emlab/bigint.hpp>
#include <emlab/errors.hpp>

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace emlab {

// The fixed variable vocabulary. Printing priority: q < p < p0 < p1 < ... < x < y < z.
// Unknown names are rejected so exponent vectors can never be misaligned.
int variable_rank(std::string_view name);

// An ordered set of variable names, canonically sorted by priority. Every
// Poly is attached to one universe; arithmetic across universes is a hard
// error (use embedded_into for an explicit extension).
class VarSet {
public:
    VarSet() = default;
    VarSet(std::initializer_list<std::string> names);
    explicit VarSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::size_t index(std::string_view name) const;
    bool contains(std::string_view name) const;
    bool subset_of(const VarSet& other) const;
    bool operator==(const VarSet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using Exponents = std::vector<unsigned>;

// Canonical term order: total degree first, then exponent vectors compared
// lexicographically with higher-priority variables weighing more (so for
// universe {q,x} the degree-2 terms print q^2, q*x, x^2).
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Per-variable exponent bounds, keyed by variable name; absent = unbounded.
// Truncation drops every term that exceeds some bound, hence is idempotent.
class DegreeCap {
public:
    DegreeCap() = default;
    DegreeCap& limit(const std::string& var, unsigned max);
    std::optional<unsigned> limit_for(std::string_view var) const;
    bool unbounded() const { return limits_.empty(); }
    bool admits(const VarSet& vars, const Exponents& e) const;

private:
    std::map<std::string, unsigned, std::less<>> limits_;
};

class Poly {
public:
    using TermMap = std::map<Exponents, BigInt, GradedLexLess>;

    Poly() = default;  // zero polynomial over the empty universe
    explicit Poly(VarSet vars) : vars_(std::move(vars)) {}

    static Poly zero(const VarSet& vars) { return Poly(vars); }
    static Poly constant(const VarSet& vars, BigInt c);
    static Poly variable(const VarSet& vars, std::string_view name);
    // coeff * prod var^e over the given (name, exponent) pairs
    static Poly monomial(const VarSet& vars, BigInt coeff,
                         const std::vector<std::pair<std::string, unsigned>>& powers);

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    BigInt coefficient(const Exponents& e) const;
    BigInt constant_term() const;
    unsigned degree_in(std::string_view var) const;
    unsigned total_degree() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
    Poly& operator*=(const BigInt& c);
    bool operator==(const Poly& rhs) const { return vars_ == rhs.vars_ && terms_ == rhs.terms_; }
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    Poly pow(unsigned e) const;
    // Multiply, dropping every product term outside the cap.
    Poly mul_truncated(const Poly& rhs, const DegreeCap& cap) const;
    Poly truncated(const DegreeCap& cap) const;

    // Exact quotient in Z[vars]; throws DivisibilityError if the divisor
    // does not divide exactly (which is how a false identity or a wrong
    // integer prefactor surfaces).
    Poly exact_div(const Poly& divisor) const;

    // f(..., v, ...) -> f(..., v^k, ...). k = 0 is rejected.
    Poly substituted_power(std::string_view var, unsigned k) const;

    // The coefficient of var^e as a Poly over the same universe (the
    // extracted variable's exponent is zeroed).
    Poly coefficient_of(std::string_view var, unsigned e) const;

    // Explicit embedding into a superset universe.
    Poly embedded_into(const VarSet& bigger) const;

    // Canonical text form, e.g. "1 + 2*q + q^2*x".
    std::string str() const;
    nlohmann::json to_json() const;
    static Poly from_json(const nlohmann::json& j);

    // Mutating primitive used by the builders: adds c * monomial(e).
    void add_term(const Exponents& e, const BigInt& c);

private:
    void require_same_universe(const Poly& rhs) const;

    VarSet vars_;
    TermMap terms_;
};

enum class PolyOp { add, sub, mul, exact_div };
Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace emlab

#endif
