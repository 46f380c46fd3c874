#pragma once

#include <string>
#include <vector>

namespace ncdegen::report {

struct Check {
    std::string id;
    std::string description;
    std::string expected;
    std::string computed;
    enum class Provenance { paper_cited, derived } provenance = Provenance::derived;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;
    bool pass = false;
    double seconds = 0.0;  // shown in the text rendering only
};

const std::vector<std::string>& suite_names();  // incidence, complex, spectral, reps, euler, arrangements, all

// Runs the named suite; throws std::invalid_argument for unknown names.
VerificationReport run_suite(const std::string& name);

std::string to_text(const VerificationReport& r);
// stable key and check ordering, no timing: byte-identical across runs
std::string to_json_string(const VerificationReport& r);

}  // namespace ncdegen::report
