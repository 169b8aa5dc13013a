/**
 * Reproduction suite: every closed-form value the library is expected to
 * reproduce, checked against the exact pipeline. Shared by the
 * `verify-paper` command and the acceptance test binary.
 */

#ifndef FUTAKI_VERIFY_HPP
#define FUTAKI_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "futaki/serialize.hpp"

namespace futaki {

struct CheckResult
{
    std::string id;
    int criterion = 0;
    /// formula or statement the check reproduces
    std::string anchor;
    bool passed = false;
    std::string detail;
};

struct CheckInfo
{
    std::string id;
    int criterion;
    std::string anchor;
};

const std::vector<CheckInfo>& check_catalog();

/// Runs all checks, or only `only` when given (throws std::invalid_argument
/// for an unknown id). `seed` drives every random draw.
std::vector<CheckResult> run_checks(const std::optional<std::string>& only = {},
                                    std::uint64_t seed = 42);

Json results_to_json(const std::vector<CheckResult>& results);

/// Deterministic random rational point strictly inside P_n(b).
VectorQ random_slab_point(int n, const Rational& b, std::uint64_t& state);

} // namespace futaki

#endif
