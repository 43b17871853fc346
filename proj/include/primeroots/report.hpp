#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace primeroots {

using ordered_json = nlohmann::ordered_json;

// Uniform result document for every ranged task and for predictions.
// Serialization is deterministic: fixed key order, sorted extra counters.
struct Report {
    std::string task;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> range; // inclusive
    ordered_json params = ordered_json::object();

    std::uint64_t examined = 0;
    std::uint64_t mismatches = 0;
    std::optional<std::uint64_t> first_mismatch;
    std::map<std::string, std::uint64_t> counters; // task-specific extras

    std::vector<ordered_json> records; // retained rows, ascending
    std::uint64_t records_elided = 0;
    std::vector<std::string> columns; // CSV header
    bool partial = false;              // stopped at a checkpoint, not finished

    int exit_code() const { return mismatches > 0 ? 1 : 0; }

    std::string to_json() const;
    std::string to_csv() const;
};

// RFC 4180 field quoting: quotes only when the field needs it.
std::string csv_escape(const std::string& field);

} // namespace primeroots
