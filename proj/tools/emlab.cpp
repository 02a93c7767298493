// emlab: enumeration, statistics, colored RSK and identity verification for
// colored permutation groups, with exact polynomial arithmetic throughout.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <emlab/identities.hpp>
#include <emlab/qseries.hpp>
#include <emlab/specialize.hpp>
#include <emlab/stats.hpp>
#include <emlab/tableaux.hpp>
#include <emlab/wreath.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using namespace emlab;
using nlohmann::json;

enum class Format { text, jsonfmt, csv };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::jsonfmt;
    if (s == "csv") return Format::csv;
    throw CLI::ValidationError("--format must be text, json or csv");
}

unsigned worker_count(unsigned flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("EM_LAB_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 0;  // library default: hardware concurrency
}

std::vector<std::pair<StatisticId, std::string>> parse_stat_specs(const std::string& text,
                                                                  bool with_vars) {
    // with_vars: "des@color:x,fmaj:q"; otherwise a bare comma list
    std::vector<std::pair<StatisticId, std::string>> specs;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        // an argument list like fmaj[3,2] contains a comma: rejoin
        while (tok.find('[') != std::string::npos && tok.find(']') == std::string::npos) {
            std::string more;
            if (!std::getline(is, more, ',')) break;
            tok += "," + more;
        }
        if (with_vars) {
            auto colon = tok.rfind(':');
            if (colon == std::string::npos || colon + 1 >= tok.size())
                throw ParameterError("expected STAT:VAR in --stats, got: " + tok);
            specs.push_back(
                {StatisticId::parse(tok.substr(0, colon)), tok.substr(colon + 1)});
        } else {
            specs.push_back({StatisticId::parse(tok), ""});
        }
    }
    if (specs.empty()) throw ParameterError("no statistics given");
    return specs;
}

void print_report_text(const VerifyReport& rep, std::ostream& os) {
    os << (rep.pass ? "pass" : "FAIL") << "  " << rep.id;
    for (const auto& [k, v] : rep.params) os << " " << k << "=" << v;
    if (!rep.truncations.empty()) {
        os << "  [";
        bool first = true;
        for (const auto& [k, v] : rep.truncations) {
            if (!first) os << ",";
            os << k << "=" << v;
            first = false;
        }
        os << "]";
    }
    if (rep.error) os << "  error: " << *rep.error;
    if (rep.mismatch) {
        os << "  first mismatch";
        if (!rep.mismatch->context.empty()) os << " at " << rep.mismatch->context;
        os << ": coeff(";
        for (std::size_t i = 0; i < rep.mismatch->vars.size(); ++i) {
            if (i) os << ",";
            os << rep.mismatch->vars[i] << "^"
               << (i < rep.mismatch->exponents.size() ? rep.mismatch->exponents[i] : 0);
        }
        os << ") lhs=" << rep.mismatch->lhs << " rhs=" << rep.mismatch->rhs;
    }
    os << "\n";
}

int cmd_enumerate(unsigned n, unsigned r, const std::string& subset, Format fmt) {
    Subset s = subset_from_string(subset);
    enumerate(n, r, s, [&](const ColoredPermutation& w) {
        if (fmt == Format::jsonfmt) std::cout << window_to_json(w).dump() << "\n";
        else std::cout << format_window(w) << "\n";
    });
    return 0;
}

int cmd_stats(unsigned n, unsigned r, const std::string& subset, const std::string& stats,
              Format fmt) {
    Subset s = subset_from_string(subset);
    auto specs = parse_stat_specs(stats, false);
    if (fmt == Format::csv) {
        std::cout << "window";
        for (const auto& [id, var] : specs) std::cout << "," << id.str();
        std::cout << "\n";
    }
    enumerate(n, r, s, [&](const ColoredPermutation& w) {
        if (fmt == Format::jsonfmt) {
            json row;
            row["window"] = format_window(w);
            for (const auto& [id, var] : specs) row[id.str()] = statistic(w, id);
            std::cout << row.dump() << "\n";
            return;
        }
        const char* sep = fmt == Format::csv ? "," : "  ";
        std::cout << format_window(w);
        for (const auto& [id, var] : specs) std::cout << sep << statistic(w, id);
        std::cout << "\n";
    });
    return 0;
}

int cmd_distribution(unsigned n, unsigned r, const std::string& subset,
                     const std::string& stats, Format fmt) {
    Subset s = subset_from_string(subset);
    auto specs = parse_stat_specs(stats, true);
    Poly d = distribution(n, r, s, specs);
    if (fmt == Format::jsonfmt) std::cout << d.to_json().dump() << "\n";
    else std::cout << d.str() << "\n";
    return 0;
}

int cmd_rsk(unsigned r, const std::string& window, Format fmt) {
    ColoredPermutation w = parse_window(window, r);
    auto [p, q] = colored_rsk(w);
    auto des_q = tableau_descent_set(q);
    auto des_p = tableau_descent_set(p);
    if (fmt == Format::jsonfmt) {
        json out;
        out["w"] = window_to_json(w);
        out["P"] = p.to_json();
        out["Q"] = q.to_json();
        out["DesP"] = des_p;
        out["DesQ"] = des_q;
        std::cout << out.dump() << "\n";
        return 0;
    }
    auto show_set = [](const std::set<unsigned>& s) {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (unsigned v : s) {
            if (!first) os << ",";
            os << v;
            first = false;
        }
        os << "}";
        return os.str();
    };
    std::cout << "w    = " << format_window(w) << "\n";
    std::cout << "P    = " << p.str() << "\n";
    std::cout << "Q    = " << q.str() << "\n";
    std::cout << "DesP = " << show_set(des_p) << "\n";
    std::cout << "DesQ = " << show_set(des_q) << "\n";
    return 0;
}

int cmd_verify(const std::string& id, const ParamMap& params, const ParamMap& truncs,
               Format fmt) {
    VerifyReport rep = verify(id, params, truncs);
    if (fmt == Format::jsonfmt) std::cout << rep.to_json().dump() << "\n";
    else print_report_text(rep, std::cout);
    return rep.pass ? 0 : 1;
}

int cmd_verify_all(const std::string& grid_file, unsigned workers, Format fmt) {
    std::vector<GridEntry> entries;
    const std::vector<GridEntry>* override_ptr = nullptr;
    if (!grid_file.empty()) {
        std::ifstream in(grid_file);
        if (!in) throw ParameterError("cannot open grid file: " + grid_file);
        json j = json::parse(in);
        for (const auto& item : j) {
            GridEntry e;
            e.id = item.at("id").get<std::string>();
            if (item.contains("params"))
                e.params = item.at("params").get<ParamMap>();
            if (item.contains("truncations"))
                e.truncations = item.at("truncations").get<ParamMap>();
            entries.push_back(std::move(e));
        }
        override_ptr = &entries;
    }
    auto reports = verify_all(override_ptr, worker_count(workers));
    bool all_pass = true;
    std::size_t passed = 0;
    for (const auto& rep : reports) {
        all_pass = all_pass && rep.pass;
        if (rep.pass) ++passed;
        if (fmt == Format::jsonfmt) std::cout << rep.to_json().dump() << "\n";
        else print_report_text(rep, std::cout);
    }
    if (fmt != Format::jsonfmt)
        std::cout << passed << "/" << reports.size() << " checks passed\n";
    return all_pass ? 0 : 1;
}

int cmd_list_identities(Format fmt) {
    for (const auto& rec : registry()) {
        if (fmt == Format::jsonfmt) {
            json j;
            j["id"] = rec.id;
            j["strategy"] = rec.strategy;
            j["summary"] = rec.summary;
            json ps = json::array();
            for (const auto& spec : rec.params)
                ps.push_back({{"name", spec.name}, {"min", spec.min}, {"max", spec.max}});
            j["params"] = ps;
            j["default_truncations"] = rec.default_truncations;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << rec.id << "  [" << rec.strategy << "]  " << rec.summary << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"colored permutation statistics and identity verification"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text|json|csv")
        ->capture_default_str();

    unsigned n = 0, r = 1;
    std::string subset = "all";
    std::string stats_list, window, id, grid_file;
    unsigned workers = 0;

    auto* sc_enum = app.add_subcommand("enumerate", "stream colored permutations");
    sc_enum->add_option("--n", n, "window length")->required();
    sc_enum->add_option("--r", r, "number of colors")->required();
    sc_enum->add_option("--subset", subset,
                        "all|derangements|involutions|absolute_involutions");

    auto* sc_stats = app.add_subcommand("stats", "per-element statistic table");
    sc_stats->add_option("--n", n, "window length")->required();
    sc_stats->add_option("--r", r, "number of colors")->required();
    sc_stats->add_option("--stat", stats_list, "comma list, e.g. des@color,fmaj,lmaj")
        ->required();
    sc_stats->add_option("--subset", subset,
                         "all|derangements|involutions|absolute_involutions");

    auto* sc_dist = app.add_subcommand("distribution", "joint generating polynomial");
    sc_dist->add_option("--n", n, "window length")->required();
    sc_dist->add_option("--r", r, "number of colors")->required();
    sc_dist->add_option("--stats", stats_list, "pairs STAT:VAR, e.g. des@color:x,fmaj:q")
        ->required();
    sc_dist->add_option("--subset", subset,
                        "all|derangements|involutions|absolute_involutions");

    auto* sc_rsk = app.add_subcommand("rsk", "colored Robinson-Schensted pair");
    sc_rsk->add_option("--r", r, "number of colors")->required();
    sc_rsk->add_option("--w", window, "window notation, e.g. \"3^1 2^0 1^3\"")->required();

    auto* sc_verify = app.add_subcommand("verify", "check one identity");
    sc_verify->add_option("--id", id, "identity id (see list-identities)")->required();
    int p_n = -1, p_r = -1, p_k = -1, p_l = -1, p_k2 = -1, p_l2 = -1, p_m = -1;
    sc_verify->add_option("--n", p_n, "n parameter");
    sc_verify->add_option("--r", p_r, "r parameter");
    sc_verify->add_option("--k", p_k, "k parameter");
    sc_verify->add_option("--l", p_l, "l parameter");
    sc_verify->add_option("--k2", p_k2, "second k parameter");
    sc_verify->add_option("--l2", p_l2, "second l parameter");
    sc_verify->add_option("--m", p_m, "m parameter");
    int t_M = -1, t_N = -1, t_capq = -1, t_capp = -1;
    sc_verify->add_option("--M", t_M, "x/y-degree truncation");
    sc_verify->add_option("--N", t_N, "z-degree truncation");
    sc_verify->add_option("--capq", t_capq, "q-degree cap");
    sc_verify->add_option("--capp", t_capp, "p-degree cap");
    sc_verify->add_option("--cap", t_capq, "shorthand: cap for both q and p")
        ->excludes("--capq");

    auto* sc_all = app.add_subcommand("verify-all", "run the whole registry");
    sc_all->add_option("--grid", grid_file, "JSON grid file overriding the defaults");
    sc_all->add_option("--workers", workers, "worker threads (EM_LAB_WORKERS overrides 0)");

    auto* sc_list = app.add_subcommand("list-identities", "registry catalog");

    try {
        app.parse(argc, argv);
        Format fmt = parse_format(format);
        if (sc_enum->parsed()) return cmd_enumerate(n, r, subset, fmt);
        if (sc_stats->parsed()) return cmd_stats(n, r, subset, stats_list, fmt);
        if (sc_dist->parsed()) return cmd_distribution(n, r, subset, stats_list, fmt);
        if (sc_rsk->parsed()) return cmd_rsk(r, window, fmt);
        if (sc_verify->parsed()) {
            ParamMap params, truncs;
            if (p_n >= 0) params["n"] = p_n;
            if (p_r >= 0) params["r"] = p_r;
            if (p_k >= 0) params["k"] = p_k;
            if (p_l >= 0) params["l"] = p_l;
            if (p_k2 >= 0) params["k2"] = p_k2;
            if (p_l2 >= 0) params["l2"] = p_l2;
            if (p_m >= 0) params["m"] = p_m;
            if (t_M >= 0) truncs["M"] = t_M;
            if (t_N >= 0) truncs["N"] = t_N;
            if (t_capq >= 0) {
                truncs["capq"] = t_capq;
                if (t_capp < 0 && sc_verify->count("--cap") > 0) truncs["capp"] = t_capq;
            }
            if (t_capp >= 0) truncs["capp"] = t_capp;
            return cmd_verify(id, params, truncs, fmt);
        }
        if (sc_all->parsed()) return cmd_verify_all(grid_file, workers, fmt);
        if (sc_list->parsed()) return cmd_list_identities(fmt);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const emlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
