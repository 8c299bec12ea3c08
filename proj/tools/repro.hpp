#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tecc/teccbuild.hpp"

namespace tecc::repro {

struct Section {
    std::string name;  // a trailing " ~rowspace" compares matrices by row space
    std::string body;  // no trailing newline
};

struct Report {
    std::string target;
    FieldPtr field;
    std::vector<Section> sections;
    std::vector<std::string> notes;  // informational, never compared
};

const std::vector<std::string>& targets();
// Throws Error(BadRange) for an unknown target.
Report run(const std::string& target);

std::optional<std::string> golden(const std::string& target);
std::vector<Section> parse_sections(const std::string& text);
std::string render(const std::vector<Section>& sections);

struct Diff {
    bool match = true;
    std::vector<std::string> mismatches;  // section names, with a short reason
};
Diff compare(const Report& r, const std::string& golden_text);

// Residues written over the integers from representatives 0..p-1, e.g. "-1/24"; prime fields only.
std::optional<std::vector<std::string>> symbolic_residues(const Curve& c, const EvalSet& D);

}  // namespace tecc::repro
