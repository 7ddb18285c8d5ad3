#include "hh/report.hpp"

#include <json.hpp>

namespace hh {

namespace {

using ojson = nlohmann::ordered_json;

ojson record_json(const CheckRecord& r, bool with_wall) {
    ojson j;
    j["suite"] = r.suite;
    j["check"] = r.check;
    j["anchor"] = r.anchor;
    j["mode"] = r.mode;
    j["status"] = r.status;
    j["residual"] = r.residual;
    if (with_wall) j["wall_ms"] = r.wall_ms;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

} // namespace

bool SuiteReport::all_ok() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
    std::size_t n = 0;
    for (const CheckRecord& r : records)
        if (r.status == "fail") ++n;
    return n;
}

std::string record_to_jsonl(const CheckRecord& r) {
    return record_json(r, true).dump();
}

std::string report_to_jsonl(const SuiteReport& rep) {
    std::string out;
    for (const CheckRecord& r : rep.records) {
        out += record_to_jsonl(r);
        out += '\n';
    }
    return out;
}

std::string report_to_jsonl_stripped(const SuiteReport& rep) {
    std::string out;
    for (const CheckRecord& r : rep.records) {
        out += record_json(r, false).dump();
        out += '\n';
    }
    return out;
}

} // namespace hh
