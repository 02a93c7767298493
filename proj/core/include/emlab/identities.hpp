#ifndef EMLAB_IDENTITIES_HPP
#define EMLAB_IDENTITIES_HPP

#include <emlab/poly.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace emlab {

using ParamMap = std::map<std::string, int>;

struct ParamSpec {
    std::string name;
    int min = 0;
    int max = 0;
};

struct Mismatch {
    std::vector<std::string> vars;
    Exponents exponents;
    std::string lhs;
    std::string rhs;
    std::string context;  // which sub-check diverged, e.g. "order=length" or "m=3"
};

struct VerifyReport {
    std::string id;
    ParamMap params;
    ParamMap truncations;
    bool pass = false;
    std::optional<Mismatch> mismatch;
    std::optional<std::string> error;  // set when parameters were rejected

    nlohmann::json to_json() const;
};

// One catalogued identity: an LHS recipe, an RHS recipe, a comparison
// strategy, and the parameter grid it is checked on by default. A pass at
// the given truncations certifies coefficient equality modulo those caps
// and nothing more.
struct IdentityRecord {
    std::string id;
    std::string summary;
    std::string strategy;  // poly_equal | x_series | zx_series | zxy_qp_series
    std::vector<ParamSpec> params;
    ParamMap default_truncations;  // exactly the truncation knobs the strategy consumes
    std::vector<ParamMap> default_grid;
    std::function<std::optional<std::string>(const ParamMap&)> validate_extra;  // may be null
    std::function<std::optional<Mismatch>(const ParamMap&, const ParamMap&)> run;
};

const std::vector<IdentityRecord>& registry();
const IdentityRecord* find_record(const std::string& id);

// Throws ParameterError on unknown id, undeclared or out-of-range
// parameters, or undeclared truncation keys. Missing truncations take the
// record's defaults.
VerifyReport verify(const std::string& id, const ParamMap& params,
                    const ParamMap& truncations = {});

struct GridEntry {
    std::string id;
    ParamMap params;
    ParamMap truncations;
};

// Runs every record over its default grid (or the override); failures and
// parameter errors become reports, never exceptions. Reports are sorted by
// (id, params, truncations); workers only affect wall time.
std::vector<VerifyReport> verify_all(const std::vector<GridEntry>* override_grid = nullptr,
                                     unsigned workers = 0);

std::vector<GridEntry> default_grid_entries();

}  // namespace emlab

#endif
