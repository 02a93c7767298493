#include <emlab/tableaux.hpp>

#include <algorithm>
#include <sstream>

namespace emlab {

unsigned RPartiteTableau::size() const {
    unsigned s = 0;
    for (const auto& comp : components)
        for (const auto& row : comp) s += static_cast<unsigned>(row.size());
    return s;
}

RPartitePartition RPartiteTableau::shape() const {
    std::vector<Partition> comps;
    comps.reserve(components.size());
    for (const auto& comp : components) {
        Partition p;
        for (const auto& row : comp) p.parts.push_back(static_cast<unsigned>(row.size()));
        comps.push_back(std::move(p));
    }
    return RPartitePartition(std::move(comps));
}

unsigned RPartiteTableau::component_of(unsigned entry) const {
    for (unsigned c = 0; c < components.size(); ++c)
        for (const auto& row : components[c])
            for (unsigned v : row)
                if (v == entry) return c;
    throw ParameterError("entry not present in tableau: " + std::to_string(entry));
}

nlohmann::json RPartiteTableau::to_json() const {
    nlohmann::json shape_j = nlohmann::json::array();
    nlohmann::json rows_j = nlohmann::json::array();
    for (const auto& comp : components) {
        nlohmann::json cshape = nlohmann::json::array();
        for (const auto& row : comp) cshape.push_back(row.size());
        shape_j.push_back(std::move(cshape));
        rows_j.push_back(comp);
    }
    return nlohmann::json{{"shape", shape_j}, {"rows", rows_j}};
}

RPartiteTableau RPartiteTableau::from_json(const nlohmann::json& j) {
    RPartiteTableau t;
    t.components = j.at("rows").get<std::vector<std::vector<std::vector<unsigned>>>>();
    return t;
}

std::string RPartiteTableau::str() const {
    std::ostringstream os;
    for (unsigned c = 0; c < components.size(); ++c) {
        if (c) os << " | ";
        if (components[c].empty()) {
            os << "-";
            continue;
        }
        for (std::size_t row = 0; row < components[c].size(); ++row) {
            if (row) os << " / ";
            for (std::size_t col = 0; col < components[c][row].size(); ++col) {
                if (col) os << ",";
                os << components[c][row][col];
            }
        }
    }
    return os.str();
}

namespace {

struct SytState {
    const RPartitePartition* shape;
    RPartiteTableau tableau;
    // current length of each row per component
    std::vector<std::vector<unsigned>> filled;
    const std::function<void(const RPartiteTableau&)>* sink;
    unsigned n;

    void place(unsigned value) {
        if (value > n) {
            (*sink)(tableau);
            return;
        }
        for (unsigned c = 0; c < shape->r(); ++c) {
            const auto& target = shape->components[c].parts;
            for (std::size_t row = 0; row < target.size(); ++row) {
                unsigned len = filled[c][row];
                if (len >= target[row]) continue;
                if (row > 0 && filled[c][row - 1] <= len) continue;  // column would break
                tableau.components[c][row].push_back(value);
                ++filled[c][row];
                place(value + 1);
                --filled[c][row];
                tableau.components[c][row].pop_back();
            }
        }
    }
};

}  // namespace

void enumerate_syt(const RPartitePartition& shape,
                   const std::function<void(const RPartiteTableau&)>& sink) {
    SytState st;
    st.shape = &shape;
    st.sink = &sink;
    st.n = shape.size();
    st.tableau = RPartiteTableau(shape.r());
    st.filled.resize(shape.r());
    for (unsigned c = 0; c < shape.r(); ++c) {
        st.tableau.components[c].resize(shape.components[c].parts.size());
        st.filled[c].assign(shape.components[c].parts.size(), 0);
    }
    st.place(1);
}

std::vector<RPartiteTableau> enumerate_syt_vector(const RPartitePartition& shape) {
    std::vector<RPartiteTableau> out;
    enumerate_syt(shape, [&](const RPartiteTableau& t) { out.push_back(t); });
    return out;
}

std::set<unsigned> tableau_descent_set(const RPartiteTableau& q) {
    unsigned n = q.size();
    std::set<unsigned> des;
    if (n == 0) return des;
    // locate every entry once
    std::vector<unsigned> comp(n + 1, 0), row(n + 1, 0);
    for (unsigned c = 0; c < q.r(); ++c)
        for (std::size_t rw = 0; rw < q.components[c].size(); ++rw)
            for (unsigned v : q.components[c][rw]) {
                comp[v] = c;
                row[v] = static_cast<unsigned>(rw);
            }
    if (comp[1] != 0) des.insert(0);
    for (unsigned i = 1; i < n; ++i) {
        if (comp[i] == comp[i + 1]) {
            if (row[i + 1] > row[i]) des.insert(i);
        } else if (comp[i] < comp[i + 1]) {
            des.insert(i);
        }
    }
    return des;
}

namespace {

// Classical row insertion; returns the (row, col) of the new cell.
std::pair<unsigned, unsigned> row_insert(std::vector<std::vector<unsigned>>& tableau,
                                         unsigned value) {
    unsigned r = 0;
    while (true) {
        if (r == tableau.size()) {
            tableau.push_back({value});
            return {r, 0};
        }
        auto& row = tableau[r];
        auto it = std::upper_bound(row.begin(), row.end(), value);
        if (it == row.end()) {
            row.push_back(value);
            return {r, static_cast<unsigned>(row.size() - 1)};
        }
        std::swap(*it, value);
        ++r;
    }
}

// Reverse insertion starting from the given cell; returns the bumped-out value.
unsigned reverse_insert(std::vector<std::vector<unsigned>>& tableau, unsigned row,
                        unsigned col) {
    unsigned value = tableau[row][col];
    tableau[row].pop_back();
    if (tableau[row].empty()) tableau.erase(tableau.begin() + row);
    while (row > 0) {
        --row;
        auto& above = tableau[row];
        // rightmost entry strictly smaller than value
        auto it = std::lower_bound(above.begin(), above.end(), value);
        --it;
        std::swap(*it, value);
    }
    return value;
}

}  // namespace

std::pair<RPartiteTableau, RPartiteTableau> colored_rsk(const ColoredPermutation& w) {
    RPartiteTableau p(w.r), q(w.r);
    for (unsigned i = 1; i <= w.n; ++i) {
        unsigned c = w.colors[i - 1];
        auto [row, col] = row_insert(p.components[c], w.values[i - 1]);
        auto& qc = q.components[c];
        if (row == qc.size()) qc.emplace_back();
        qc[row].push_back(i);
        (void)col;
    }
    return {p, q};
}

ColoredPermutation rsk_inverse(const RPartiteTableau& p, const RPartiteTableau& q,
                               unsigned r) {
    if (!(p.shape() == q.shape()))
        throw DimensionError("insertion and recording tableaux must share their shape");
    unsigned n = p.size();
    std::vector<unsigned> values(n), colors(n);
    auto pw = p;
    auto qw = q;
    for (unsigned i = n; i >= 1; --i) {
        unsigned c = qw.component_of(i);
        // i is the largest entry of qw, so it sits at the end of its row
        unsigned row = 0;
        for (std::size_t rw = 0; rw < qw.components[c].size(); ++rw) {
            auto& qrow = qw.components[c][rw];
            if (!qrow.empty() && qrow.back() == i) row = static_cast<unsigned>(rw);
        }
        auto& qrow = qw.components[c][row];
        qrow.pop_back();
        if (qrow.empty()) qw.components[c].erase(qw.components[c].begin() + row);
        unsigned col = static_cast<unsigned>(pw.components[c][row].size() - 1);
        values[i - 1] = reverse_insert(pw.components[c], row, col);
        colors[i - 1] = c;
    }
    return ColoredPermutation(n, r, std::move(values), std::move(colors));
}

}  // namespace emlab
