#include "scheme_atlas_cli/grid.hpp"

#include <cctype>
#include <set>

namespace atlas::cli {

const long* lookup(const GridPoint& point, std::string_view name)
{
    for (const auto& [key, value] : point) {
        if (key == name) {
            return &value;
        }
    }
    return nullptr;
}

struct BoundExpr::Node {
    enum class Kind { literal, name, add, sub, mul, neg };
    Kind kind = Kind::literal;
    long value = 0;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const BoundExpr::Node>;
using Kind = BoundExpr::Node::Kind;

bool is_identifier(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
            return false;
        }
    }
    return true;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse_all()
    {
        NodePtr out = expression();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw UsageError("bad bound expression '" + std::string(text_) + "': " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static NodePtr binary(Kind kind, NodePtr lhs, NodePtr rhs)
    {
        auto node = std::make_shared<BoundExpr::Node>();
        node->kind = kind;
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        return node;
    }

    NodePtr expression()
    {
        NodePtr lhs = term();
        while (true) {
            if (accept('+')) {
                lhs = binary(Kind::add, lhs, term());
            } else if (accept('-')) {
                lhs = binary(Kind::sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr term()
    {
        NodePtr lhs = factor();
        while (accept('*')) {
            lhs = binary(Kind::mul, lhs, factor());
        }
        return lhs;
    }

    NodePtr factor()
    {
        if (accept('-')) {
            auto node = std::make_shared<BoundExpr::Node>();
            node->kind = Kind::neg;
            node->lhs = factor();
            return node;
        }
        if (accept('(')) {
            NodePtr inner = expression();
            if (!accept(')')) {
                fail("missing ')'");
            }
            return inner;
        }
        skip_space();
        const std::size_t start = pos_;
        auto node = std::make_shared<BoundExpr::Node>();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            const std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 9) {
                fail("literal too large");
            }
            node->value = std::stol(digits);
            return node;
        }
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        const std::string_view word = text_.substr(start, pos_ - start);
        if (!is_identifier(word)) {
            fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end");
        }
        node->kind = Kind::name;
        node->name = std::string(word);
        return node;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

long eval(const BoundExpr::Node& node, const GridPoint& scope, const std::string& text)
{
    switch (node.kind) {
    case Kind::literal: return node.value;
    case Kind::name:
        if (const long* v = lookup(scope, node.name)) {
            return *v;
        }
        throw UsageError("bound '" + text + "' refers to '" + node.name + "', which is not defined before it");
    case Kind::add: return eval(*node.lhs, scope, text) + eval(*node.rhs, scope, text);
    case Kind::sub: return eval(*node.lhs, scope, text) - eval(*node.rhs, scope, text);
    case Kind::mul: return eval(*node.lhs, scope, text) * eval(*node.rhs, scope, text);
    case Kind::neg: return -eval(*node.lhs, scope, text);
    }
    return 0;
}

std::string trim(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

void expand(const std::vector<GridAxis>& axes, std::size_t depth, GridPoint& current, std::vector<GridPoint>& out)
{
    if (depth == axes.size()) {
        out.push_back(current);
        return;
    }
    const GridAxis& axis = axes[depth];
    const long low = axis.low.evaluate(current);
    const long high = axis.high.evaluate(current);
    for (long v = low; v <= high; ++v) {
        current.emplace_back(axis.name, v);
        expand(axes, depth + 1, current, out);
        current.pop_back();
    }
}

} // namespace

BoundExpr BoundExpr::parse(std::string_view text)
{
    BoundExpr out;
    out.text_ = trim(text);
    if (out.text_.empty()) {
        throw UsageError("empty bound expression");
    }
    out.root_ = Parser(out.text_).parse_all();
    return out;
}

long BoundExpr::evaluate(const GridPoint& scope) const { return eval(*root_, scope, text_); }

std::vector<GridAxis> parse_grid(std::string_view spec)
{
    std::vector<GridAxis> axes;
    std::set<std::string> names;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        if (comma == std::string_view::npos) {
            comma = spec.size();
        }
        const std::string item = trim(spec.substr(start, comma - start));
        start = comma + 1;
        if (item.empty()) {
            throw UsageError("empty item in grid '" + std::string(spec) + "'");
        }
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) {
            throw UsageError("grid item '" + item + "' lacks '='");
        }
        const std::string name = trim(std::string_view(item).substr(0, eq));
        if (!is_identifier(name)) {
            throw UsageError("grid item '" + item + "' has a bad name");
        }
        if (!names.insert(name).second) {
            throw UsageError("grid name '" + name + "' appears twice");
        }
        const std::string range = item.substr(eq + 1);
        const std::size_t dots = range.find("..");
        if (dots == std::string::npos) {
            const BoundExpr value = BoundExpr::parse(range);
            axes.push_back({name, value, value});
        } else {
            axes.push_back({name, BoundExpr::parse(range.substr(0, dots)), BoundExpr::parse(range.substr(dots + 2))});
        }
    }
    return axes;
}

std::vector<GridPoint> expand_grid(const std::vector<GridAxis>& axes, const GridPoint& fixed)
{
    for (const auto& axis : axes) {
        if (lookup(fixed, axis.name) != nullptr) {
            throw UsageError("'" + axis.name + "' is given both as a flag and in the grid");
        }
    }
    std::vector<GridPoint> out;
    GridPoint current = fixed;
    expand(axes, 0, current, out);
    return out;
}

} // namespace atlas::cli
