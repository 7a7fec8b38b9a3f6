#pragma once

#include <string>
#include <vector>

namespace hodgekit {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // empty when there is nothing to report
};

/// An ordered list of named check verdicts with a text rendering
/// (`CHECK <name> <PASS|FAIL> [witness]`) and a byte-stable JSON form.
struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    void add(std::string name, bool pass, std::string witness = "");
    void merge(const Report &other);

    std::string text() const;
    std::string json() const;
    static Report from_json(const std::string &s);
};

}  // namespace hodgekit
