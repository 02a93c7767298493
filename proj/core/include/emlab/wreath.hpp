#ifndef EMLAB_WREATH_HPP
#define EMLAB_WREATH_HPP

#include <emlab/partitions.hpp>

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace emlab {

// An element of the wreath product Z_r wr S_n in window notation: a
// permutation w of [n] plus one color in [0, r-1] per window entry.
// Colors are stored reduced; values are 1-based.
struct ColoredPermutation {
    unsigned n = 0;
    unsigned r = 1;
    std::vector<unsigned> values;  // w(1), ..., w(n)
    std::vector<unsigned> colors;  // c_1, ..., c_n

    ColoredPermutation() = default;
    ColoredPermutation(unsigned n, unsigned r, std::vector<unsigned> values,
                       std::vector<unsigned> colors);

    static ColoredPermutation identity(unsigned n, unsigned r);
    bool is_identity() const;
    bool operator==(const ColoredPermutation&) const = default;
};

// (u o v)(a) = u(v(a)), with colors added mod r along the way.
ColoredPermutation compose(const ColoredPermutation& u, const ColoredPermutation& v);
ColoredPermutation inverse(const ColoredPermutation& w);
// Same underlying permutation, all colors negated mod r.
ColoredPermutation bar(const ColoredPermutation& w);

struct CycleTypeResult {
    RPartitePartition rtype;                 // color-j component: lengths of color-j cycles
    std::vector<unsigned> cycle_color_counts;  // c^j(w) = number of color-j cycles
};

// Cycle color = sum of the entry colors along the cycle, mod r.
CycleTypeResult cycle_type(const ColoredPermutation& w);

struct Classification {
    bool is_derangement = false;          // no fixed point of color zero
    bool is_involution = false;           // w o w = identity
    bool is_absolute_involution = false;  // inverse(bar(w)) = w
    std::vector<unsigned> fix_by_color;   // fix_by_color[j] = #{i : w(i)=i, c_i=j}
};

Classification classify(const ColoredPermutation& w);

enum class Subset { all, derangements, involutions, absolute_involutions };

Subset subset_from_string(const std::string& s);
std::string subset_to_string(Subset s);

// Streams every qualifying element exactly once, in lexicographic order of
// (values, colors). n = 0 yields the single empty permutation for every
// subset. The order is stable API.
void enumerate(unsigned n, unsigned r, Subset subset,
               const std::function<void(const ColoredPermutation&)>& sink);
std::vector<ColoredPermutation> enumerate_vector(unsigned n, unsigned r, Subset subset);

// Window notation: entries "value" or "value^color" separated by spaces;
// an omitted color means 0. format_window prints colors for r > 1 and bare
// values for r = 1, so it inverts parse_window on canonical text.
ColoredPermutation parse_window(const std::string& text, unsigned r);
std::string format_window(const ColoredPermutation& w);

nlohmann::json window_to_json(const ColoredPermutation& w);
ColoredPermutation window_from_json(const nlohmann::json& j);

}  // namespace emlab

#endif
