#include "mmdim/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace mmdim {

ParseError::ParseError(int line, const std::string& what)
  : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
    line_(line)
{
}

namespace {

std::vector<int> parse_ints(std::string_view line, int lineno)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
            ++pos;
        if (pos >= line.size())
            break;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r')
            ++end;
        const auto token = line.substr(pos, end - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError(lineno, "not an integer: '" + std::string(token) + "'");
        out.push_back(value);
        pos = end;
    }
    return out;
}

bool skippable(std::string_view line)
{
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '#';
}

} // namespace

Strategy parse_strategy_text(std::istream& in)
{
    std::string line;
    int lineno = 0;
    std::optional<Strategy> strategy;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line))
            continue;
        const auto values = parse_ints(std::string_view(line).substr(0, line.find('#')), lineno);
        if (values.size() != kPegs)
            throw ParseError(lineno, "expected 3 values, got " + std::to_string(values.size()));
        if (!strategy) {
            try {
                strategy.emplace(Params(values[0], values[1], values[2]));
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, e.what());
            }
            continue;
        }
        try {
            strategy->add(Question(values[0], values[1], values[2]));
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!strategy)
        throw ParseError(0, "missing header line 'a b c'");
    return std::move(*strategy);
}

Strategy parse_strategy_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_strategy_text(in);
}

Strategy parse_strategy(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(0, std::string("invalid JSON: ") + e.what());
        }
        return strategy_from_json(j);
    }
    return parse_strategy_text(text);
}

void write_strategy_text(std::ostream& out, const Strategy& s)
{
    const auto& p = s.params();
    out << p.a() << ' ' << p.b() << ' ' << p.c() << '\n';
    for (const auto& q : s)
        out << q[0] << ' ' << q[1] << ' ' << q[2] << '\n';
}

std::string strategy_text(const Strategy& s)
{
    std::ostringstream os;
    write_strategy_text(os, s);
    return os.str();
}

nlohmann::json to_json(const Params& p)
{
    return nlohmann::json::array({p.a(), p.b(), p.c()});
}

nlohmann::json to_json(const Question& q)
{
    return nlohmann::json::array({q[0], q[1], q[2]});
}

nlohmann::json to_json(const Strategy& s)
{
    nlohmann::json qs = nlohmann::json::array();
    for (const auto& q : s)
        qs.push_back(to_json(q));
    return {{"params", to_json(s.params())}, {"questions", std::move(qs)}};
}

Strategy strategy_from_json(const nlohmann::json& j)
{
    try {
        const auto p = j.at("params").get<std::array<int, kPegs>>();
        Strategy s{Params(p)};
        for (const auto& q : j.at("questions"))
            s.add(Question(q.get<std::array<Color, kPegs>>()));
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed strategy JSON: ") + e.what());
    } catch (const std::logic_error& e) {
        throw ParseError(0, e.what());
    }
}

} // namespace mmdim
