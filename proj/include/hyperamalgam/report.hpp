#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperamalgam/dyadic.hpp"
#include "hyperamalgam/errors.hpp"

/*
 * Structured results for the check suites. Reports serialize to JSON or
 * CSV; with a fixed seed and inputs the bytes are identical from run to
 * run, except for the summary.wall_ms field.
 */
namespace hyperamalgam::harness {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

// JSON cannot carry infinities; encode them as strings.
inline json num(double v) {
    if (std::isfinite(v)) return json(v);
    if (std::isnan(v)) return json("nan");
    return json(v > 0 ? "inf" : "-inf");
}

// Exact value as {"num": ..., "exp": k}, meaning num / 2^exp. The
// numerator becomes a decimal string when it leaves int64 range.
inline json dyadic_json(const Dyadic& d) {
    json j;
    if (d.num_fits_int64())
        j["num"] = d.num_as_int64();
    else
        j["num"] = d.num().str();
    j["exp"] = d.exp();
    return j;
}

struct CaseResult {
    std::string id;
    json inputs;
    json lhs;
    json rhs;
    json constant;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    uint64_t seed = 0;
    double tol_abs = 0.0;
    double tol_rel = 0.0;
    std::vector<CaseResult> cases;
    long long wall_ms = 0;

    int failed() const {
        int n = 0;
        for (const auto& c : cases) n += c.pass ? 0 : 1;
        return n;
    }
    bool all_pass() const { return failed() == 0; }

    json to_json() const {
        json j;
        j["suite"] = suite;
        j["version"] = kVersion;
        j["seed"] = seed;
        j["cases"] = json::array();
        for (const auto& c : cases) {
            json cj;
            cj["id"] = c.id;
            cj["inputs"] = c.inputs;
            cj["lhs"] = c.lhs;
            cj["rhs"] = c.rhs;
            cj["constant"] = c.constant;
            cj["pass"] = c.pass;
            j["cases"].push_back(std::move(cj));
        }
        j["summary"] = {{"cases", cases.size()},
                        {"passed", cases.size() - static_cast<size_t>(failed())},
                        {"failed", failed()},
                        {"tolerances", {{"abs", tol_abs}, {"rel", tol_rel}}},
                        {"wall_ms", wall_ms}};
        return j;
    }

    std::string to_csv() const {
        auto field = [](std::string s) {
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string out = "\"";
            for (char ch : s) {
                if (ch == '"') out += '"';
                out += ch;
            }
            out += '"';
            return out;
        };
        auto cell = [&field](const json& v) {
            if (v.is_string()) return field(v.get<std::string>());
            return field(v.dump());
        };
        std::string out = "suite,id,pass,lhs,rhs,constant,inputs\n";
        for (const auto& c : cases) {
            out += field(suite) + ',' + field(c.id) + ',' + (c.pass ? "true" : "false") +
                   ',' + cell(c.lhs) + ',' + cell(c.rhs) + ',' + cell(c.constant) + ',' +
                   cell(c.inputs) + '\n';
        }
        return out;
    }
};

// Write to a file, or to stdout when path is "-".
inline void emit(const SuiteReport& rep, const std::string& format,
                 const std::string& path) {
    std::string body;
    if (format == "json")
        body = rep.to_json().dump(2) + "\n";
    else if (format == "csv")
        body = rep.to_csv();
    else
        throw DomainError("emit: format must be json or csv");
    if (path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("emit: cannot open " + path);
    out << body;
    if (!out) throw IOError("emit: write failed for " + path);
}

} // namespace hyperamalgam::harness
