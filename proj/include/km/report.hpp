#pragma once

#include <string>
#include <utility>
#include <vector>

namespace km {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
    double ms = 0.0;
};

// Command result payload; serializes losslessly to JSON and to aligned text
// carrying the same data.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> results;
    std::vector<CheckLine> checks;
    double total_ms = 0.0;

    bool all_passed() const;
    std::string to_json() const;
    std::string to_text() const;
};

Report report_from_json(const std::string& text);

}  // namespace km
