#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scheme_atlas/rational.hpp"
#include "scheme_atlas_cli/grid.hpp"

namespace atlas::cli {

/// One comparison, or `count` passing comparisons folded under one id.
struct CheckRecord {
    std::string check;
    std::vector<std::string> indices;
    std::optional<Rational> expected;
    std::optional<Rational> got;
    bool verdict = true;
    std::size_t count = 1;
    std::string note;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct PointReport {
    GridPoint params;
    std::string label;
    std::vector<CheckRecord> checks;
    /// Set when the point could not run, e.g. the size guard tripped.
    std::string error;
    bool size_guard = false;
    double seconds = 0.0;

    [[nodiscard]] bool verdict() const;
    friend bool operator==(const PointReport&, const PointReport&) = default;
};

struct SkippedPoint {
    GridPoint params;
    std::string reason;

    friend bool operator==(const SkippedPoint&, const SkippedPoint&) = default;
};

struct VerificationReport {
    std::string suite;
    std::string family;
    std::string grid;
    std::vector<PointReport> points;
    std::vector<SkippedPoint> skipped;
    double seconds = 0.0;

    [[nodiscard]] bool verdict() const;
    [[nodiscard]] bool size_guard_tripped() const;
    /// Passing and failing comparisons, counting folded records by `count`.
    [[nodiscard]] std::size_t checks_passed() const;
    [[nodiscard]] std::size_t checks_failed() const;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Collects records; passes fold into one record per check id unless
/// `detail` is set. Failures are always kept one by one.
class Recorder {
public:
    explicit Recorder(bool detail) : detail_(detail) {}

    void compare(const std::string& check, std::vector<std::string> indices, const Rational& expected,
                 const Rational& got);
    void expect(const std::string& check, std::vector<std::string> indices, bool ok, std::string note = {});
    void fail(const std::string& check, std::vector<std::string> indices, std::optional<Rational> expected,
              std::optional<Rational> got, std::string note = {});

    /// Folds `count` passes of a check whose individual values are not kept.
    void pass_count(const std::string& check, std::size_t count);

    [[nodiscard]] std::vector<CheckRecord> take() { return std::move(records_); }

private:
    void pass(const std::string& check, std::vector<std::string> indices, std::optional<Rational> expected,
              std::optional<Rational> got, std::string note);

    bool detail_;
    std::vector<CheckRecord> records_;
    std::map<std::string, std::size_t> folded_;
};

[[nodiscard]] nlohmann::ordered_json to_json(const VerificationReport& report);
/// Inverse of to_json; derived fields (verdicts, totals) are recomputed.
/// Throws nlohmann::json::exception or std::invalid_argument on bad input.
[[nodiscard]] VerificationReport report_from_json(const nlohmann::ordered_json& json);

} // namespace atlas::cli
