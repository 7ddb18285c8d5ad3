#pragma once

#include <string>
#include <vector>

namespace hh {

// One verification check inside a suite run. `mode` is "exact" (all
// arithmetic in the scalar ring, residual identically 0 on pass) or "oracle"
// (floating-point cross-check, residual is the measured defect). `status` is
// "pass", "fail", or "skip"; a skip or fail may carry a human-readable note.
struct CheckRecord {
    std::string suite;
    std::string check;
    std::string anchor; // citation string for the identity being checked
    std::string mode;   // "exact" | "oracle"
    std::string status; // "pass" | "fail" | "skip"
    double residual = 0.0;
    double wall_ms = 0.0;
    std::string note; // optional detail (skip reason, failure message)
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckRecord> records;

    bool all_ok() const; // true when no record failed
    std::size_t failures() const;
};

// One JSON object per record, fixed key order:
//   {"suite":..,"check":..,"anchor":..,"mode":..,"status":..,"residual":..,
//    "wall_ms":..}  (+ "note" only when nonempty)
std::string record_to_jsonl(const CheckRecord& r);

// Newline-separated records, trailing newline included.
std::string report_to_jsonl(const SuiteReport& rep);

// Same with the wall_ms field removed: the byte-identity determinism
// guarantee is stated on this form (timing is the only nondeterministic
// field).
std::string report_to_jsonl_stripped(const SuiteReport& rep);

} // namespace hh
