#ifndef EMLAB_SPECIALIZE_HPP
#define EMLAB_SPECIALIZE_HPP

#include <emlab/poly.hpp>
#include <emlab/stats.hpp>
#include <emlab/tableaux.hpp>
#include <emlab/wreath.hpp>

#include <optional>
#include <string>
#include <vector>

namespace emlab {

// Finite substitution (color j, index i) -> q^exponent or zero. Encodes one
// of the principal-specialization variants.
struct SubstitutionTable {
    unsigned r = 1;
    // entries[c][i-1]; nullopt = the variable is set to zero. Indices past
    // the stored vector are zero as well.
    std::vector<std::vector<std::optional<unsigned>>> entries;

    std::optional<unsigned> entry(unsigned color, unsigned i) const;  // i is 1-based
    unsigned support(unsigned color) const;
    // all nonzero entries of one color, as monomials in the given variable
    std::vector<Poly> alphabet(unsigned color, const VarSet& vars, std::string_view v) const;
    // sum of all nonzero entries over all colors
    Poly entry_sum(const VarSet& vars, std::string_view v) const;
};

struct SpecializationId {
    enum class Tag {
        ps,          // stable: x_i^(j) = q^{i-1}, truncated at index I
        ps_m,        // order m on color 0, order m-1 elsewhere
        ps_m_tilde,  // order m on every color
        psi,         // stable: x_i^(j) = q^{r(i-1)+j}
        psi_m,
        psi_m_tilde,
        phi_m,       // x_i^(j) = q^{i-1+j} iff i = 1 (mod r) and i + j <= m
        theta,       // r = 2: x_i = q^{k(i-1)}, y_i = q^{k(i-1)+l}
        theta_m,
        theta_m_tilde,
    };

    Tag tag = Tag::ps;
    unsigned r = 1;
    unsigned m = 0;        // order, for the m-indexed tags
    unsigned k = 1, l = 0; // theta family
    unsigned stable_index = 0;  // truncation index I, for the stable tags

    bool is_stable() const;
    bool is_theta() const { return tag == Tag::theta || tag == Tag::theta_m || tag == Tag::theta_m_tilde; }

    // Text forms: "ps", "ps_m[m=3]", "psi_m~[m=3]", "phi_m[m=4]",
    // "theta_m[k=3,l=2,m=4]", "ps[I=10]". r is taken from context.
    static SpecializationId parse(const std::string& text);
    std::string str() const;
};

SubstitutionTable build_table(const SpecializationId& s);

// The fundamental colored quasisymmetric function of the subject, evaluated
// under the table: sum over weakly decreasing index sequences bounded by
// the support, strictly decreasing across the starred descent set (color
// order for permutations), of the entry products. Plain depth-first
// recursion; this is the oracle, so it stays naive.
Poly evaluate_F(const ColoredPermutation& w, const SubstitutionTable& t,
                const VarSet& vars, std::string_view v = "q");
Poly evaluate_F(const RPartiteTableau& q, const SubstitutionTable& t,
                const VarSet& vars, std::string_view v = "q");

// The closed-form right-hand side attached to the specialization: for the
// m-indexed families the x^{m-1} series coefficient of
// x^x_exponent * numerator / prod(denominator) equals evaluate_F at the
// order-m table; for the stable families numerator / prod(denominator) is
// the full series.
struct ClosedForm {
    Poly numerator;               // q^{maj} / q^{fmaj} / q^{fmaj_{k,l}}
    std::vector<Poly> denominator;
    unsigned x_exponent = 0;      // des / des* / fdes value; 0 for stable tags
};

ClosedForm closed_form(const ColoredPermutation& w, const SpecializationId& s,
                       const VarSet& vars);

}  // namespace emlab

#endif
