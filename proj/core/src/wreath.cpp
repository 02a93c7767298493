#include <emlab/wreath.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace emlab {

ColoredPermutation::ColoredPermutation(unsigned n_, unsigned r_, std::vector<unsigned> v,
                                       std::vector<unsigned> c)
    : n(n_), r(r_), values(std::move(v)), colors(std::move(c)) {
    if (r == 0) throw ParameterError("color count r must be positive");
    if (values.size() != n || colors.size() != n)
        throw DimensionError("window length does not match n");
    std::vector<bool> seen(n + 1, false);
    for (unsigned v_ : values) {
        if (v_ < 1 || v_ > n || seen[v_])
            throw ParameterError("values must form a permutation of [n]");
        seen[v_] = true;
    }
    for (unsigned c_ : colors)
        if (c_ >= r) throw ParameterError("color out of range");
}

ColoredPermutation ColoredPermutation::identity(unsigned n, unsigned r) {
    ColoredPermutation w;
    w.n = n;
    w.r = r;
    w.values.resize(n);
    std::iota(w.values.begin(), w.values.end(), 1u);
    w.colors.assign(n, 0);
    return w;
}

bool ColoredPermutation::is_identity() const {
    for (unsigned i = 0; i < n; ++i)
        if (values[i] != i + 1 || colors[i] != 0) return false;
    return true;
}

ColoredPermutation compose(const ColoredPermutation& u, const ColoredPermutation& v) {
    if (u.n != v.n || u.r != v.r)
        throw DimensionError("composition requires equal n and r");
    ColoredPermutation out;
    out.n = u.n;
    out.r = u.r;
    out.values.resize(u.n);
    out.colors.resize(u.n);
    for (unsigned a = 0; a < u.n; ++a) {
        unsigned b = v.values[a];  // v(a+1) = b^{j}
        unsigned j = v.colors[a];
        out.values[a] = u.values[b - 1];
        out.colors[a] = (j + u.colors[b - 1]) % u.r;
    }
    return out;
}

ColoredPermutation inverse(const ColoredPermutation& w) {
    ColoredPermutation out;
    out.n = w.n;
    out.r = w.r;
    out.values.resize(w.n);
    out.colors.resize(w.n);
    for (unsigned a = 0; a < w.n; ++a) {
        unsigned b = w.values[a];
        out.values[b - 1] = a + 1;
        out.colors[b - 1] = (w.r - w.colors[a]) % w.r;
    }
    return out;
}

ColoredPermutation bar(const ColoredPermutation& w) {
    ColoredPermutation out = w;
    for (unsigned i = 0; i < w.n; ++i) out.colors[i] = (w.r - w.colors[i]) % w.r;
    return out;
}

CycleTypeResult cycle_type(const ColoredPermutation& w) {
    std::vector<std::vector<unsigned>> lengths_by_color(w.r);
    std::vector<bool> seen(w.n + 1, false);
    for (unsigned start = 1; start <= w.n; ++start) {
        if (seen[start]) continue;
        unsigned len = 0, colorsum = 0, a = start;
        do {
            seen[a] = true;
            ++len;
            colorsum += w.colors[a - 1];
            a = w.values[a - 1];
        } while (a != start);
        lengths_by_color[colorsum % w.r].push_back(len);
    }
    CycleTypeResult out;
    out.cycle_color_counts.resize(w.r);
    std::vector<Partition> comps(w.r);
    for (unsigned j = 0; j < w.r; ++j) {
        auto& lens = lengths_by_color[j];
        std::sort(lens.begin(), lens.end(), std::greater<unsigned>());
        comps[j].parts = lens;
        out.cycle_color_counts[j] = static_cast<unsigned>(lens.size());
    }
    out.rtype = RPartitePartition(std::move(comps));
    return out;
}

Classification classify(const ColoredPermutation& w) {
    Classification out;
    out.fix_by_color.assign(w.r, 0);
    out.is_derangement = true;
    for (unsigned i = 1; i <= w.n; ++i) {
        if (w.values[i - 1] == i) {
            ++out.fix_by_color[w.colors[i - 1]];
            if (w.colors[i - 1] == 0) out.is_derangement = false;
        }
    }
    out.is_involution = compose(w, w).is_identity();
    out.is_absolute_involution = (inverse(bar(w)) == w);
    return out;
}

Subset subset_from_string(const std::string& s) {
    if (s == "all") return Subset::all;
    if (s == "derangements") return Subset::derangements;
    if (s == "involutions") return Subset::involutions;
    if (s == "absolute_involutions") return Subset::absolute_involutions;
    throw ParameterError("unknown subset: " + s);
}

std::string subset_to_string(Subset s) {
    switch (s) {
        case Subset::all: return "all";
        case Subset::derangements: return "derangements";
        case Subset::involutions: return "involutions";
        case Subset::absolute_involutions: return "absolute_involutions";
    }
    return "?";
}

void enumerate(unsigned n, unsigned r, Subset subset,
               const std::function<void(const ColoredPermutation&)>& sink) {
    if (r == 0) throw ParameterError("color count r must be positive");
    ColoredPermutation w;
    w.n = n;
    w.r = r;
    w.values.resize(n);
    std::iota(w.values.begin(), w.values.end(), 1u);
    w.colors.assign(n, 0);
    auto emit = [&]() {
        switch (subset) {
            case Subset::all: sink(w); return;
            case Subset::derangements:
                if (classify(w).is_derangement) sink(w);
                return;
            case Subset::involutions:
                if (classify(w).is_involution) sink(w);
                return;
            case Subset::absolute_involutions:
                if (classify(w).is_absolute_involution) sink(w);
                return;
        }
    };
    do {
        std::fill(w.colors.begin(), w.colors.end(), 0);
        while (true) {
            emit();
            // lexicographic odometer over color vectors
            unsigned i = n;
            while (i > 0 && w.colors[i - 1] == r - 1) w.colors[--i] = 0;
            if (i == 0) break;
            ++w.colors[i - 1];
        }
    } while (std::next_permutation(w.values.begin(), w.values.end()));
}

std::vector<ColoredPermutation> enumerate_vector(unsigned n, unsigned r, Subset subset) {
    std::vector<ColoredPermutation> out;
    enumerate(n, r, subset, [&](const ColoredPermutation& w) { out.push_back(w); });
    return out;
}

ColoredPermutation parse_window(const std::string& text, unsigned r) {
    std::vector<unsigned> values, colors;
    std::size_t i = 0;
    auto read_uint = [&](const char* what) {
        std::size_t start = i;
        unsigned long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + static_cast<unsigned long>(text[i] - '0');
            ++i;
        }
        if (i == start) throw ParseError(std::string("expected ") + what, start);
        return static_cast<unsigned>(v);
    };
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        if (i >= text.size()) break;
        unsigned value = read_uint("a window value");
        unsigned color = 0;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t cpos = i;
            color = read_uint("a color");
            if (color >= r) throw ParseError("color exceeds r-1", cpos);
        }
        values.push_back(value);
        colors.push_back(color);
    }
    unsigned n = static_cast<unsigned>(values.size());
    std::vector<bool> seen(n + 1, false);
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] < 1 || values[k] > n || seen[values[k]])
            throw ParseError("values must form a permutation of [n]", k);
        seen[values[k]] = true;
    }
    return ColoredPermutation(n, r, std::move(values), std::move(colors));
}

std::string format_window(const ColoredPermutation& w) {
    std::ostringstream os;
    for (unsigned i = 0; i < w.n; ++i) {
        if (i) os << ' ';
        os << w.values[i];
        if (w.r > 1) os << '^' << w.colors[i];
    }
    return os.str();
}

nlohmann::json window_to_json(const ColoredPermutation& w) {
    return nlohmann::json{{"n", w.n}, {"r", w.r}, {"values", w.values}, {"colors", w.colors}};
}

ColoredPermutation window_from_json(const nlohmann::json& j) {
    return ColoredPermutation(j.at("n").get<unsigned>(), j.at("r").get<unsigned>(),
                              j.at("values").get<std::vector<unsigned>>(),
                              j.at("colors").get<std::vector<unsigned>>());
}

}  // namespace emlab
