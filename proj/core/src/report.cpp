#include "hodgekit/report.hpp"

#include <json.hpp>
#include <stdexcept>

namespace hodgekit {

bool Report::all_pass() const {
    for (const auto &c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::add(std::string name, bool pass, std::string witness) {
    checks.push_back({std::move(name), pass, std::move(witness)});
}

void Report::merge(const Report &other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string Report::text() const {
    std::string out;
    for (const auto &c : checks) {
        out += "CHECK ";
        out += c.name;
        out += c.pass ? " PASS" : " FAIL";
        if (!c.witness.empty()) {
            out += ' ';
            out += c.witness;
        }
        out += '\n';
    }
    return out;
}

std::string Report::json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &c : checks) {
        nlohmann::json o;
        o["name"] = c.name;
        o["verdict"] = c.pass ? "PASS" : "FAIL";
        o["witness"] = c.witness;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

Report Report::from_json(const std::string &s) {
    nlohmann::json arr = nlohmann::json::parse(s);
    if (!arr.is_array()) throw std::invalid_argument("report: expected a JSON array");
    Report r;
    for (const auto &o : arr) {
        std::string verdict = o.at("verdict").get<std::string>();
        if (verdict != "PASS" && verdict != "FAIL")
            throw std::invalid_argument("report: verdict must be PASS or FAIL");
        r.add(o.at("name").get<std::string>(), verdict == "PASS",
              o.at("witness").get<std::string>());
    }
    return r;
}

}  // namespace hodgekit
