#ifndef EMLAB_TABLEAUX_HPP
#define EMLAB_TABLEAUX_HPP

#include <emlab/partitions.hpp>
#include <emlab/wreath.hpp>

#include <functional>
#include <set>
#include <vector>

#include <json.hpp>

namespace emlab {

// r-tuple of standard tableaux whose entries jointly exhaust 1..n. Rows are
// 1-based in the English convention: "lower row" means larger row index.
struct RPartiteTableau {
    // components[c][row][col]
    std::vector<std::vector<std::vector<unsigned>>> components;

    RPartiteTableau() = default;
    explicit RPartiteTableau(unsigned r) : components(r) {}

    unsigned r() const { return static_cast<unsigned>(components.size()); }
    unsigned size() const;
    RPartitePartition shape() const;
    // component index holding the given entry; throws if absent
    unsigned component_of(unsigned entry) const;
    bool operator==(const RPartiteTableau&) const = default;

    nlohmann::json to_json() const;
    static RPartiteTableau from_json(const nlohmann::json& j);
    std::string str() const;
};

// Every standard filling of the shape, in a deterministic order.
void enumerate_syt(const RPartitePartition& shape,
                   const std::function<void(const RPartiteTableau&)>& sink);
std::vector<RPartiteTableau> enumerate_syt_vector(const RPartitePartition& shape);

// i in [0, n-1] is a descent of Q iff i+1 sits in a strictly lower row of
// the same component as i, or i sits in an earlier component than i+1, or
// i = 0 and 1 sits in a component of nonzero index.
std::set<unsigned> tableau_descent_set(const RPartiteTableau& q);

// Colored row insertion: w(i) is inserted into the component picked by the
// color c_i, and i is recorded in the same component of Q at the new cell.
// The shapes of P and Q agree, and the map is a bijection onto same-shape
// pairs (rsk_inverse reverses it).
std::pair<RPartiteTableau, RPartiteTableau> colored_rsk(const ColoredPermutation& w);
ColoredPermutation rsk_inverse(const RPartiteTableau& p, const RPartiteTableau& q,
                               unsigned r);

}  // namespace emlab

#endif
