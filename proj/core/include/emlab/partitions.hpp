#ifndef EMLAB_PARTITIONS_HPP
#define EMLAB_PARTITIONS_HPP

#include <emlab/poly.hpp>

#include <functional>
#include <vector>

namespace emlab {

// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<unsigned> parts;

    Partition() = default;
    explicit Partition(std::vector<unsigned> p);

    unsigned size() const;
    bool empty() const { return parts.empty(); }
    Partition conjugate() const;
    // b(lambda) = sum (i-1) * lambda_i
    unsigned b_stat() const;
    // number of columns of odd length
    unsigned odd_columns() const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& rhs) const { return parts < rhs.parts; }
    std::string str() const;
};

// r-tuple of partitions of total size n.
struct RPartitePartition {
    std::vector<Partition> components;

    RPartitePartition() = default;
    explicit RPartitePartition(std::vector<Partition> comps) : components(std::move(comps)) {}

    unsigned r() const { return static_cast<unsigned>(components.size()); }
    unsigned size() const;
    bool operator==(const RPartitePartition&) const = default;
    std::string str() const;
};

// All partitions of n, in the deterministic order (n), (n-1,1), ...: parts
// generated first-part-descending, recursively.
std::vector<Partition> partitions_of(unsigned n);

// All r-partite partitions of n: component sizes run over compositions with
// the first component largest first, partitions per component as above.
std::vector<RPartitePartition> rpartite_partitions(unsigned n, unsigned r);

// Macdonald's q-binomial over cells of lam:
//   prod_{u in lam} (1 - v^{m - content(u)}) / (1 - v^{hook(u)}),
// evaluated exactly (the numerator is divisible by the denominator in Z[v]).
// Zero when some content equals m.
Poly hook_content_binomial(unsigned m, const Partition& lam, const VarSet& vars,
                           std::string_view v);

}  // namespace emlab

#endif
