#include "scheme_atlas_cli/report.hpp"

#include <algorithm>

namespace atlas::cli {

bool PointReport::verdict() const
{
    return error.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.verdict; });
}

bool VerificationReport::verdict() const
{
    return std::all_of(points.begin(), points.end(), [](const auto& p) { return p.verdict(); });
}

bool VerificationReport::size_guard_tripped() const
{
    return std::any_of(points.begin(), points.end(), [](const auto& p) { return p.size_guard; });
}

std::size_t VerificationReport::checks_passed() const
{
    std::size_t n = 0;
    for (const auto& p : points) {
        for (const auto& c : p.checks) {
            n += c.verdict ? c.count : 0;
        }
    }
    return n;
}

std::size_t VerificationReport::checks_failed() const
{
    std::size_t n = 0;
    for (const auto& p : points) {
        for (const auto& c : p.checks) {
            n += c.verdict ? 0 : c.count;
        }
    }
    return n;
}

void Recorder::compare(const std::string& check, std::vector<std::string> indices, const Rational& expected,
                       const Rational& got)
{
    if (expected == got) {
        pass(check, std::move(indices), expected, got, {});
    } else {
        fail(check, std::move(indices), expected, got);
    }
}

void Recorder::expect(const std::string& check, std::vector<std::string> indices, bool ok, std::string note)
{
    if (ok) {
        pass(check, std::move(indices), std::nullopt, std::nullopt, std::move(note));
    } else {
        fail(check, std::move(indices), std::nullopt, std::nullopt, std::move(note));
    }
}

void Recorder::fail(const std::string& check, std::vector<std::string> indices, std::optional<Rational> expected,
                    std::optional<Rational> got, std::string note)
{
    records_.push_back({check, std::move(indices), std::move(expected), std::move(got), false, 1, std::move(note)});
}

void Recorder::pass_count(const std::string& check, std::size_t count)
{
    if (count == 0) {
        return;
    }
    if (auto it = folded_.find(check); it != folded_.end()) {
        records_[it->second].count += count;
        return;
    }
    folded_.emplace(check, records_.size());
    records_.push_back({check, {}, std::nullopt, std::nullopt, true, count, {}});
}

void Recorder::pass(const std::string& check, std::vector<std::string> indices, std::optional<Rational> expected,
                    std::optional<Rational> got, std::string note)
{
    if (detail_) {
        records_.push_back({check, std::move(indices), std::move(expected), std::move(got), true, 1, std::move(note)});
        return;
    }
    if (auto it = folded_.find(check); it != folded_.end()) {
        ++records_[it->second].count;
        return;
    }
    folded_.emplace(check, records_.size());
    records_.push_back({check, {}, std::nullopt, std::nullopt, true, 1, std::move(note)});
}

namespace {

using Json = nlohmann::ordered_json;

Json params_json(const GridPoint& params)
{
    Json out = Json::object();
    for (const auto& [name, value] : params) {
        out[name] = value;
    }
    return out;
}

GridPoint params_from(const Json& j)
{
    GridPoint out;
    for (const auto& [name, value] : j.items()) {
        out.emplace_back(name, value.get<long>());
    }
    return out;
}

} // namespace

Json to_json(const VerificationReport& report)
{
    Json j;
    j["suite"] = report.suite;
    j["family"] = report.family;
    j["grid"] = report.grid;
    j["verdict"] = report.verdict();
    j["checks_passed"] = report.checks_passed();
    j["checks_failed"] = report.checks_failed();
    j["points_run"] = report.points.size();
    j["points_skipped"] = report.skipped.size();
    j["seconds"] = report.seconds;
    Json points = Json::array();
    for (const auto& p : report.points) {
        Json pj;
        pj["label"] = p.label;
        pj["params"] = params_json(p.params);
        pj["verdict"] = p.verdict();
        if (!p.error.empty()) {
            pj["error"] = p.error;
            pj["size_guard"] = p.size_guard;
        }
        pj["seconds"] = p.seconds;
        Json checks = Json::array();
        for (const auto& c : p.checks) {
            Json cj;
            cj["check"] = c.check;
            cj["verdict"] = c.verdict;
            if (c.count != 1) {
                cj["count"] = c.count;
            }
            if (!c.indices.empty()) {
                cj["indices"] = c.indices;
            }
            if (c.expected) {
                cj["expected"] = c.expected->str();
            }
            if (c.got) {
                cj["got"] = c.got->str();
            }
            if (!c.note.empty()) {
                cj["note"] = c.note;
            }
            checks.push_back(std::move(cj));
        }
        pj["checks"] = std::move(checks);
        points.push_back(std::move(pj));
    }
    j["points"] = std::move(points);
    Json skipped = Json::array();
    for (const auto& s : report.skipped) {
        skipped.push_back(Json{{"params", params_json(s.params)}, {"reason", s.reason}});
    }
    j["skipped"] = std::move(skipped);
    return j;
}

VerificationReport report_from_json(const Json& j)
{
    VerificationReport report;
    report.suite = j.at("suite").get<std::string>();
    report.family = j.at("family").get<std::string>();
    report.grid = j.at("grid").get<std::string>();
    report.seconds = j.at("seconds").get<double>();
    for (const auto& pj : j.at("points")) {
        PointReport p;
        p.label = pj.at("label").get<std::string>();
        p.params = params_from(pj.at("params"));
        p.error = pj.value("error", std::string());
        p.size_guard = pj.value("size_guard", false);
        p.seconds = pj.at("seconds").get<double>();
        for (const auto& cj : pj.at("checks")) {
            CheckRecord c;
            c.check = cj.at("check").get<std::string>();
            c.verdict = cj.at("verdict").get<bool>();
            c.count = cj.value("count", std::size_t{1});
            c.indices = cj.value("indices", std::vector<std::string>{});
            if (cj.contains("expected")) {
                c.expected = Rational::parse(cj["expected"].get<std::string>());
            }
            if (cj.contains("got")) {
                c.got = Rational::parse(cj["got"].get<std::string>());
            }
            c.note = cj.value("note", std::string());
            p.checks.push_back(std::move(c));
        }
        report.points.push_back(std::move(p));
    }
    for (const auto& sj : j.at("skipped")) {
        report.skipped.push_back({params_from(sj.at("params")), sj.at("reason").get<std::string>()});
    }
    return report;
}

} // namespace atlas::cli
