#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scheme_atlas/families.hpp"
#include "scheme_atlas_cli/grid.hpp"
#include "scheme_atlas_cli/report.hpp"

namespace atlas::cli {

enum class Suite { krein, qpoly, ppoly, oracle, leonard, recurrences, identities };

[[nodiscard]] std::string_view to_string(Suite suite);
[[nodiscard]] std::optional<Suite> parse_suite(std::string_view name);

/// Suites that need --family.
[[nodiscard]] bool suite_uses_family(Suite suite);

struct SuiteOptions {
    bool detail = false;
    /// "auto", "lex", "grlex", "grlex-reversed" or "any". auto means grlex
    /// for Krein numbers and a search over all orders for intersection
    /// numbers.
    std::string order = "auto";
    std::size_t base_point = 0;
    bool all_base_points = false;
};

/// Parameter names of a family, in the order used for labels.
[[nodiscard]] std::vector<std::string> family_parameter_names(Family family);

/// Throws UsageError when a name is missing or does not belong to the family.
[[nodiscard]] FamilyParams family_params(Family family, const GridPoint& values);

/// Grid used when neither --grid nor parameters are given; empty when the
/// suite has none.
[[nodiscard]] std::vector<GridPoint> default_points(Suite suite);

/// Names a grid point of the suite may bind; throws UsageError otherwise.
void check_point_names(Suite suite, std::optional<Family> family, const GridPoint& names);

/// Raised for points outside the suite's scope; the point is skipped.
class NotApplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs one point. Throws std::invalid_argument or NotApplicable for points
/// to skip. Size-guard trips are reported in the returned record.
[[nodiscard]] PointReport run_point(Suite suite, std::optional<Family> family, const GridPoint& point,
                                    const SuiteOptions& options);

} // namespace atlas::cli
