/**
 * JSON and CSV forms of the library's values. Rationals are written as
 * "p/q" strings next to a `<key>_float` approximation.
 */

#ifndef FUTAKI_SERIALIZE_HPP
#define FUTAKI_SERIALIZE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "futaki/ampleness.hpp"
#include "futaki/character.hpp"
#include "futaki/polytope.hpp"

namespace futaki {

using Json = nlohmann::ordered_json;

inline constexpr const char* tool_version = "0.1.0";

void put_rational(Json& j, const std::string& key, const Rational& q);
void put_rational_list(Json& j, const std::string& key, const std::vector<Rational>& qs);

/// {"n": int, "halfspaces": [{"v": [int], "lam": "p/q"}]}
Json polytope_to_json(const DelzantPolytope& p);
DelzantPolytope polytope_from_json(const Json& j);

Json spec_to_json(const FamilySpec& s);
Json report_to_json(const CharacterReport& r);
Json cone_check_to_json(const ConeCheck& c);
Json summary_to_json(const InfeasibilitySummary& s);

/// Header n,a,b,solvable,F_boundary,F_bulk,ratio,verdict; missing values
/// are empty cells.
std::string scan_to_csv(const std::vector<ScanRow>& rows);

/// Command, arguments in the order given, seed if stochastic, version and
/// per-check outcomes. No timestamps, so identical runs serialize identically.
struct RunManifest
{
    std::string command;
    std::vector<std::pair<std::string, std::string>> arguments;
    std::optional<std::uint64_t> seed;
    std::string version = tool_version;
    std::vector<std::pair<std::string, bool>> checks;

    Json to_json() const;
};

} // namespace futaki

#endif
