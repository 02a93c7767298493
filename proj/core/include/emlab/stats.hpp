#ifndef EMLAB_STATS_HPP
#define EMLAB_STATS_HPP

#include <emlab/poly.hpp>
#include <emlab/wreath.hpp>

#include <set>
#include <string>
#include <vector>

namespace emlab {

// The three total orders on colored integers (value, color):
//   natural: color ascending, then value ascending
//   color:   color descending, then value ascending
//   length:  nonzero colors before color 0; nonzero block by value
//            descending then color descending; color-0 block by value
//            ascending
enum class TotalOrder { natural, color, length };

TotalOrder order_from_string(const std::string& s);
std::string order_to_string(TotalOrder o);

// true iff a precedes b in the given order
bool precedes(std::pair<unsigned, unsigned> a, std::pair<unsigned, unsigned> b,
              TotalOrder order);

// zero_augmented: 0 joins the descent set iff c_1 != 0 (the default
// convention); n_augmented: n joins iff c_n != 0, defined for the natural
// order only; starred: interior descents only.
enum class DescentConvention { zero_augmented, n_augmented, starred };

std::set<unsigned> descent_set(const ColoredPermutation& w, TotalOrder order,
                               DescentConvention conv);

struct StatisticId {
    enum class Kind {
        des,        // |Des| with the zero-augmented convention
        des_star,   // interior descents only
        des_naug,   // |Des| with the n-augmented convention (natural order only)
        maj,        // sum of Des (zero-augmented; the 0 contributes nothing)
        maj_naug,   // sum of Des with the n-augmented convention
        csum,       // sum of all colors
        fmaj,       // r*maj + csum; for the natural order this is the
                    // n-augmented variant r*maj_naug - csum, the only form
                    // equidistributed with the other two orders
        fdes,       // r*des_star + c_1
        lmaj,       // maj at length order + sum over colored entries of (w(i)-1) + csum
        ldes,       // des_star at length order + csum
        exc,        // #{i : w(i) > i, or w(i) = i with c_i > 0}; order-free
        neg,        // csum on signed permutations (r = 2 only)
        fix_color,  // #{i : w(i) = i, c_i = j}
        fmaj_kl,    // k*maj + l*neg (r = 2 only)
    };
    enum class Modifier { plain, inverse, bar_inverse };

    Kind kind = Kind::maj;
    TotalOrder order = TotalOrder::color;
    Modifier modifier = Modifier::plain;
    unsigned fix_j = 0;  // fix_color parameter
    unsigned k = 1, l = 0;  // fmaj_kl parameters

    static StatisticId make(Kind kind, TotalOrder order = TotalOrder::color);
    static StatisticId fix(unsigned j);
    static StatisticId fmajkl(unsigned k, unsigned l, TotalOrder order = TotalOrder::color);
    StatisticId with_modifier(Modifier m) const;

    // Text forms: "maj@color", "des*@length", "fmaj", "fmaj[3,2]",
    // "imaj@color", "bar-imaj@color", "fix[1]". The order suffix defaults
    // to @color.
    static StatisticId parse(const std::string& text);
    std::string str() const;
};

long statistic(const ColoredPermutation& w, const StatisticId& s);

// Sum over the enumerated subset of prod variable^statistic as an exact Poly.
Poly distribution(unsigned n, unsigned r, Subset subset,
                  const std::vector<std::pair<StatisticId, std::string>>& specs,
                  const VarSet& universe);
// Convenience overload building the minimal universe from the spec variables.
Poly distribution(unsigned n, unsigned r, Subset subset,
                  const std::vector<std::pair<StatisticId, std::string>>& specs);

}  // namespace emlab

#endif
