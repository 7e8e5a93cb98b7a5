#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phsub/clifford.hpp"

namespace phsub {

// One named identity to verify against one model (or globally).
struct CheckSpec {
    std::string name;
    SubmersionModel model; // ignored by global checks
    int samples = 200;
    double tol = 1e-8;
    std::uint64_t seed = 42;
};

struct CheckRecord {
    std::string name;
    std::string model;  // "-" for global checks
    std::string params; // "-" for global checks
    int samples = 0;
    double max_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string anchor; // one-line statement of the identity
    std::string error;  // nonempty when the check raised instead of finishing
};

struct VerificationReport {
    std::uint64_t seed = 42;
    std::string version;
    double wall_seconds = 0.0;
    std::vector<CheckRecord> records;
    bool pass = false;
};

// Registered check names, in canonical order.
std::vector<std::string> check_names();

// Whether the named check applies globally rather than per model.
bool check_is_global(const std::string& name);

// Whether the model/check pairing is supported.  Unsupported pairings raise
// ConfigError from run_check.
bool check_supported(const std::string& name, const SubmersionModel& model);

// One-line statement of the verified identity.
std::string check_anchor(const std::string& name);

// Runs one check; deterministic in spec.seed.  ConfigError on unknown names
// or unsupported pairings.
CheckRecord run_check(const CheckSpec& spec);

// Runs all checks in order; per-check failures and errors are recorded, the
// suite never aborts.
VerificationReport run_suite(const std::vector<CheckSpec>& specs);

// Every supported (check, model) pairing over the given models, plus all
// global checks.
std::vector<CheckSpec> make_suite(const std::vector<SubmersionModel>& models, int samples,
                                  double tol, std::uint64_t seed);

// make_suite over the five canonical models at desk scale (k <= 3).
std::vector<CheckSpec> default_suite(int samples = 200, double tol = 1e-8,
                                     std::uint64_t seed = 42);

std::string report_json(const VerificationReport& report);
std::string report_text(const VerificationReport& report);

} // namespace phsub
