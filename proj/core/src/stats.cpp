#include <emlab/stats.hpp>

#include <sstream>

namespace emlab {

TotalOrder order_from_string(const std::string& s) {
    if (s == "natural") return TotalOrder::natural;
    if (s == "color") return TotalOrder::color;
    if (s == "length") return TotalOrder::length;
    throw ParameterError("unknown total order: " + s);
}

std::string order_to_string(TotalOrder o) {
    switch (o) {
        case TotalOrder::natural: return "natural";
        case TotalOrder::color: return "color";
        case TotalOrder::length: return "length";
    }
    return "?";
}

bool precedes(std::pair<unsigned, unsigned> a, std::pair<unsigned, unsigned> b,
              TotalOrder order) {
    auto [av, ac] = a;
    auto [bv, bc] = b;
    switch (order) {
        case TotalOrder::natural:
            if (ac != bc) return ac < bc;
            return av < bv;
        case TotalOrder::color:
            if (ac != bc) return ac > bc;
            return av < bv;
        case TotalOrder::length: {
            bool az = (ac == 0), bz = (bc == 0);
            if (az != bz) return !az;  // nonzero colors precede color 0
            if (az) return av < bv;    // color-0 block: value ascending
            if (av != bv) return av > bv;
            return ac > bc;
        }
    }
    return false;
}

std::set<unsigned> descent_set(const ColoredPermutation& w, TotalOrder order,
                               DescentConvention conv) {
    if (conv == DescentConvention::n_augmented && order != TotalOrder::natural)
        throw ConventionError("the n-augmented convention is defined for the natural order only");
    std::set<unsigned> des;
    for (unsigned i = 1; i < w.n; ++i) {
        if (precedes({w.values[i], w.colors[i]}, {w.values[i - 1], w.colors[i - 1]}, order))
            des.insert(i);
    }
    if (conv == DescentConvention::zero_augmented && w.n > 0 && w.colors[0] != 0)
        des.insert(0);
    if (conv == DescentConvention::n_augmented && w.n > 0 && w.colors[w.n - 1] != 0)
        des.insert(w.n);
    return des;
}

StatisticId StatisticId::make(Kind kind, TotalOrder order) {
    StatisticId s;
    s.kind = kind;
    s.order = order;
    return s;
}

StatisticId StatisticId::fix(unsigned j) {
    StatisticId s;
    s.kind = Kind::fix_color;
    s.fix_j = j;
    return s;
}

StatisticId StatisticId::fmajkl(unsigned k, unsigned l, TotalOrder order) {
    StatisticId s;
    s.kind = Kind::fmaj_kl;
    s.order = order;
    s.k = k;
    s.l = l;
    return s;
}

StatisticId StatisticId::with_modifier(Modifier m) const {
    StatisticId s = *this;
    s.modifier = m;
    return s;
}

namespace {

long sum_of(const std::set<unsigned>& s) {
    long total = 0;
    for (unsigned v : s) total += static_cast<long>(v);
    return total;
}

long plain_statistic(const ColoredPermutation& w, const StatisticId& s) {
    using Kind = StatisticId::Kind;
    auto csum = [&]() {
        long c = 0;
        for (unsigned ci : w.colors) c += ci;
        return c;
    };
    switch (s.kind) {
        case Kind::des:
            return static_cast<long>(
                descent_set(w, s.order, DescentConvention::zero_augmented).size());
        case Kind::des_star:
            return static_cast<long>(descent_set(w, s.order, DescentConvention::starred).size());
        case Kind::des_naug:
            return static_cast<long>(
                descent_set(w, s.order, DescentConvention::n_augmented).size());
        case Kind::maj:
            return sum_of(descent_set(w, s.order, DescentConvention::zero_augmented));
        case Kind::maj_naug:
            return sum_of(descent_set(w, s.order, DescentConvention::n_augmented));
        case Kind::csum:
            return csum();
        case Kind::fmaj: {
            if (s.order == TotalOrder::natural) {
                // r*maj(n-augmented) - csum: the natural-order flag major
                // index; the zero-augmented variant is not equidistributed
                // with the color/length ones.
                long m = sum_of(descent_set(w, s.order, DescentConvention::n_augmented));
                return static_cast<long>(w.r) * m - csum();
            }
            long m = sum_of(descent_set(w, s.order, DescentConvention::zero_augmented));
            return static_cast<long>(w.r) * m + csum();
        }
        case Kind::fdes: {
            long ds =
                static_cast<long>(descent_set(w, s.order, DescentConvention::starred).size());
            long c1 = w.n > 0 ? static_cast<long>(w.colors[0]) : 0;
            return static_cast<long>(w.r) * ds + c1;
        }
        case Kind::lmaj: {
            long m = sum_of(descent_set(w, TotalOrder::length, DescentConvention::zero_augmented));
            long shift = 0;
            for (unsigned i = 0; i < w.n; ++i)
                if (w.colors[i] != 0) shift += static_cast<long>(w.values[i]) - 1;
            return m + shift + csum();
        }
        case Kind::ldes: {
            long ds = static_cast<long>(
                descent_set(w, TotalOrder::length, DescentConvention::starred).size());
            return ds + csum();
        }
        case Kind::exc: {
            long e = 0;
            for (unsigned i = 1; i <= w.n; ++i) {
                if (w.values[i - 1] > i || (w.values[i - 1] == i && w.colors[i - 1] > 0)) ++e;
            }
            return e;
        }
        case Kind::neg:
            if (w.r != 2) throw ConventionError("neg is defined on signed permutations only");
            return csum();
        case Kind::fix_color: {
            long f = 0;
            for (unsigned i = 1; i <= w.n; ++i)
                if (w.values[i - 1] == i && w.colors[i - 1] == s.fix_j) ++f;
            return f;
        }
        case Kind::fmaj_kl: {
            if (w.r != 2)
                throw ConventionError("fmaj[k,l] is defined on signed permutations only");
            long m = sum_of(descent_set(w, s.order, DescentConvention::zero_augmented));
            return static_cast<long>(s.k) * m + static_cast<long>(s.l) * csum();
        }
    }
    throw ParameterError("unknown statistic");
}

}  // namespace

long statistic(const ColoredPermutation& w, const StatisticId& s) {
    switch (s.modifier) {
        case StatisticId::Modifier::plain: return plain_statistic(w, s);
        case StatisticId::Modifier::inverse: return plain_statistic(inverse(w), s);
        case StatisticId::Modifier::bar_inverse: return plain_statistic(inverse(bar(w)), s);
    }
    throw ParameterError("unknown statistic modifier");
}

Poly distribution(unsigned n, unsigned r, Subset subset,
                  const std::vector<std::pair<StatisticId, std::string>>& specs,
                  const VarSet& universe) {
    for (std::size_t i = 0; i < specs.size(); ++i)
        for (std::size_t j = i + 1; j < specs.size(); ++j)
            if (specs[i].second == specs[j].second)
                throw ParameterError("distribution variables must be distinct");
    std::vector<std::size_t> var_index;
    var_index.reserve(specs.size());
    for (const auto& [id, var] : specs) var_index.push_back(universe.index(var));
    Poly out(universe);
    Exponents e(universe.size(), 0);
    enumerate(n, r, subset, [&](const ColoredPermutation& w) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < specs.size(); ++i) {
            long v = statistic(w, specs[i].first);
            if (v < 0)
                throw ConventionError("statistic " + specs[i].first.str() +
                                      " is negative on " + format_window(w));
            e[var_index[i]] = static_cast<unsigned>(v);
        }
        out.add_term(e, 1);
    });
    return out;
}

Poly distribution(unsigned n, unsigned r, Subset subset,
                  const std::vector<std::pair<StatisticId, std::string>>& specs) {
    std::vector<std::string> names;
    for (const auto& [id, var] : specs) names.push_back(var);
    return distribution(n, r, subset, specs, VarSet(names));
}

StatisticId StatisticId::parse(const std::string& text) {
    std::string body = text;
    Modifier mod = Modifier::plain;
    if (body.rfind("bar-i", 0) == 0) {
        mod = Modifier::bar_inverse;
        body = body.substr(5);
    } else if (body.rfind("i", 0) == 0 && body.size() > 1) {
        // "i" prefix only when the remainder is a known statistic name
        std::string rest = body.substr(1);
        static const char* names[] = {"des", "des*", "maj", "csum", "fmaj",
                                      "fdes", "lmaj", "ldes", "exc", "neg", "fix"};
        for (const char* n : names) {
            if (rest.rfind(n, 0) == 0) {
                mod = Modifier::inverse;
                body = rest;
                break;
            }
        }
    }
    TotalOrder order = TotalOrder::color;
    auto at = body.find('@');
    if (at != std::string::npos) {
        order = order_from_string(body.substr(at + 1));
        body = body.substr(0, at);
    }
    StatisticId s;
    s.order = order;
    s.modifier = mod;
    auto bracket = body.find('[');
    std::string name = body.substr(0, bracket);
    std::vector<unsigned> args;
    if (bracket != std::string::npos) {
        if (body.back() != ']') throw ParameterError("malformed statistic arguments: " + text);
        std::string inner = body.substr(bracket + 1, body.size() - bracket - 2);
        std::istringstream is(inner);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            // accept "k=3" style or bare integers
            auto eq = tok.find('=');
            args.push_back(static_cast<unsigned>(
                std::stoul(eq == std::string::npos ? tok : tok.substr(eq + 1))));
        }
    }
    if (name == "des") s.kind = Kind::des;
    else if (name == "des*") s.kind = Kind::des_star;
    else if (name == "maj") s.kind = Kind::maj;
    else if (name == "csum") s.kind = Kind::csum;
    else if (name == "fdes") s.kind = Kind::fdes;
    else if (name == "lmaj") s.kind = Kind::lmaj;
    else if (name == "ldes") s.kind = Kind::ldes;
    else if (name == "exc") s.kind = Kind::exc;
    else if (name == "neg") s.kind = Kind::neg;
    else if (name == "fix") {
        if (args.size() != 1) throw ParameterError("fix takes one argument: " + text);
        s.kind = Kind::fix_color;
        s.fix_j = args[0];
    } else if (name == "fmaj") {
        if (args.empty()) {
            s.kind = Kind::fmaj;
        } else if (args.size() == 2) {
            s.kind = Kind::fmaj_kl;
            s.k = args[0];
            s.l = args[1];
        } else {
            throw ParameterError("fmaj takes zero or two arguments: " + text);
        }
    } else {
        throw ParameterError("unknown statistic: " + text);
    }
    return s;
}

std::string StatisticId::str() const {
    std::ostringstream os;
    switch (modifier) {
        case Modifier::plain: break;
        case Modifier::inverse: os << "i"; break;
        case Modifier::bar_inverse: os << "bar-i"; break;
    }
    switch (kind) {
        case Kind::des: os << "des"; break;
        case Kind::des_star: os << "des*"; break;
        case Kind::des_naug: os << "des!n"; break;
        case Kind::maj: os << "maj"; break;
        case Kind::maj_naug: os << "maj!n"; break;
        case Kind::csum: os << "csum"; break;
        case Kind::fmaj: os << "fmaj"; break;
        case Kind::fdes: os << "fdes"; break;
        case Kind::lmaj: os << "lmaj"; break;
        case Kind::ldes: os << "ldes"; break;
        case Kind::exc: os << "exc"; break;
        case Kind::neg: os << "neg"; break;
        case Kind::fix_color: os << "fix[" << fix_j << "]"; break;
        case Kind::fmaj_kl: os << "fmaj[" << k << "," << l << "]"; break;
    }
    os << "@" << order_to_string(order);
    return os.str();
}

}  // namespace emlab
