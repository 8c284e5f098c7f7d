#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace atlas::cli {

/// Bad command-line input; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Named integer values in insertion order.
using GridPoint = std::vector<std::pair<std::string, long>>;

[[nodiscard]] const long* lookup(const GridPoint& point, std::string_view name);

/// Integer expression over +, -, *, parentheses, literals and names.
class BoundExpr {
public:
    /// Throws UsageError on a syntax error.
    static BoundExpr parse(std::string_view text);

    /// Throws UsageError when a name is not bound in `scope`.
    [[nodiscard]] long evaluate(const GridPoint& scope) const;
    [[nodiscard]] const std::string& text() const { return text_; }

    struct Node;

private:
    std::string text_;
    std::shared_ptr<const Node> root_;
};

/// One `name=low..high` (or `name=value`) item.
struct GridAxis {
    std::string name;
    BoundExpr low;
    BoundExpr high;
};

/// Comma-separated axes; names must be identifiers and distinct. Throws
/// UsageError.
[[nodiscard]] std::vector<GridAxis> parse_grid(std::string_view spec);

/// Cartesian expansion with the first axis outermost. Bounds are evaluated
/// against `fixed` and the earlier axes; an empty range contributes nothing.
/// Each point lists the fixed values first, then the axes.
[[nodiscard]] std::vector<GridPoint> expand_grid(const std::vector<GridAxis>& axes, const GridPoint& fixed);

} // namespace atlas::cli
