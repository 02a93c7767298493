#include <emlab/partitions.hpp>

#include <sstream>

namespace emlab {

Partition::Partition(std::vector<unsigned> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0) throw ParameterError("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw ParameterError("partition parts must be weakly decreasing");
    }
}

unsigned Partition::size() const {
    unsigned s = 0;
    for (unsigned p : parts) s += p;
    return s;
}

Partition Partition::conjugate() const {
    Partition out;
    if (parts.empty()) return out;
    for (unsigned j = 1; j <= parts[0]; ++j) {
        unsigned count = 0;
        for (unsigned p : parts)
            if (p >= j) ++count;
        out.parts.push_back(count);
    }
    return out;
}

unsigned Partition::b_stat() const {
    unsigned b = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) b += static_cast<unsigned>(i) * parts[i];
    return b;
}

unsigned Partition::odd_columns() const {
    unsigned count = 0;
    for (unsigned col : conjugate().parts)
        if (col % 2 == 1) ++count;
    return count;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

unsigned RPartitePartition::size() const {
    unsigned s = 0;
    for (const auto& c : components) s += c.size();
    return s;
}

std::string RPartitePartition::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) os << "|";
        os << components[i].str();
    }
    os << "]";
    return os.str();
}

namespace {

void partitions_rec(unsigned n, unsigned maxpart, std::vector<unsigned>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        Partition p;
        p.parts = acc;
        out.push_back(std::move(p));
        return;
    }
    for (unsigned first = std::min(n, maxpart); first >= 1; --first) {
        acc.push_back(first);
        partitions_rec(n - first, first, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> acc;
    partitions_rec(n, n == 0 ? 1 : n, acc, out);
    return out;
}

std::vector<RPartitePartition> rpartite_partitions(unsigned n, unsigned r) {
    std::vector<RPartitePartition> out;
    std::vector<Partition> comps(r);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned color, unsigned remaining) {
        if (color + 1 == r) {
            for (const Partition& p : partitions_of(remaining)) {
                comps[color] = p;
                out.emplace_back(comps);
            }
            return;
        }
        for (unsigned take = remaining; take + 1 >= 1; --take) {
            for (const Partition& p : partitions_of(take)) {
                comps[color] = p;
                rec(color + 1, remaining - take);
            }
            if (take == 0) break;
        }
    };
    rec(0, n);
    return out;
}

Poly hook_content_binomial(unsigned m, const Partition& lam, const VarSet& vars,
                           std::string_view v) {
    const auto& rows = lam.parts;
    Partition conj = lam.conjugate();
    // contents are consecutive within each row, so a content > m forces a
    // zero numerator factor in the same row; probe for zeros first
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (unsigned j = 1; j <= rows[i]; ++j) {
            int content = static_cast<int>(j) - 1 - static_cast<int>(i);
            if (content == static_cast<int>(m)) return Poly::zero(vars);
        }
    }
    Poly numer = Poly::constant(vars, 1);
    Poly denom = Poly::constant(vars, 1);
    Poly one = Poly::constant(vars, 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (unsigned j = 1; j <= rows[i]; ++j) {
            int content = static_cast<int>(j) - 1 - static_cast<int>(i);
            int mexp = static_cast<int>(m) - content;  // > 0 here
            unsigned hook = rows[i] - j + conj.parts[j - 1] - static_cast<unsigned>(i);
            numer *= one - Poly::monomial(vars, 1, {{std::string(v), static_cast<unsigned>(mexp)}});
            denom *= one - Poly::monomial(vars, 1, {{std::string(v), hook}});
        }
    }
    return numer.exact_div(denom);
}

}  // namespace emlab
