#include "km/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace km {

bool Report::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    nlohmann::json in = nlohmann::json::object();
    for (const auto& [k, v] : inputs) in[k] = v;
    j["inputs"] = std::move(in);
    nlohmann::json res = nlohmann::json::object();
    for (const auto& [k, v] : results) res[k] = v;
    j["results"] = std::move(res);
    nlohmann::json ch = nlohmann::json::array();
    for (const CheckLine& c : checks)
        ch.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"ms", c.ms}});
    j["checks"] = std::move(ch);
    j["total_ms"] = total_ms;
    return j.dump(2);
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "command: " << command << '\n';
    std::size_t width = 0;
    for (const auto& [k, v] : inputs) width = std::max(width, k.size());
    for (const auto& [k, v] : results) width = std::max(width, k.size());
    for (const auto& [k, v] : inputs)
        os << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
    for (const auto& [k, v] : results)
        os << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
    for (const CheckLine& c : checks) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.pass || !c.expected.empty())
            os << "  expected=" << c.expected << " actual=" << c.actual;
        os << "  (" << std::fixed << std::setprecision(2) << c.ms / 1000.0 << "s)\n";
    }
    os << "total: " << std::fixed << std::setprecision(2) << total_ms / 1000.0 << "s\n";
    return os.str();
}

Report report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("inputs").items()) r.inputs.emplace_back(k, v.get<std::string>());
    for (const auto& [k, v] : j.at("results").items())
        r.results.emplace_back(k, v.get<std::string>());
    for (const auto& c : j.at("checks")) {
        CheckLine line;
        line.name = c.at("name").get<std::string>();
        line.pass = c.at("pass").get<bool>();
        line.expected = c.at("expected").get<std::string>();
        line.actual = c.at("actual").get<std::string>();
        line.ms = c.at("ms").get<double>();
        r.checks.push_back(std::move(line));
    }
    r.total_ms = j.at("total_ms").get<double>();
    return r;
}

}  // namespace km
