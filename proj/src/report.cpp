#include "primeroots/report.hpp"

namespace primeroots {

std::string csv_escape(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

std::string csv_value(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return csv_escape(v.get<std::string>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

} // namespace

std::string Report::to_json() const {
    ordered_json doc;
    doc["task"] = task;
    if (range)
        doc["range"] = ordered_json{{"lo", range->first}, {"hi", range->second}};
    else
        doc["range"] = nullptr;
    doc["params"] = params;

    ordered_json summary;
    summary["examined"] = examined;
    summary["mismatches"] = mismatches;
    if (first_mismatch)
        summary["first_mismatch"] = *first_mismatch;
    else
        summary["first_mismatch"] = nullptr;
    for (const auto& [name, value] : counters) summary[name] = value;
    summary["records_elided"] = records_elided;
    doc["summary"] = summary;

    doc["records"] = ordered_json::array();
    for (const auto& row : records) doc["records"].push_back(row);

    return doc.dump(2) + "\n";
}

std::string Report::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); i++) {
        if (i) out += ',';
        out += csv_escape(columns[i]);
    }
    out += '\n';
    for (const auto& row : records) {
        for (std::size_t i = 0; i < columns.size(); i++) {
            if (i) out += ',';
            auto it = row.find(columns[i]);
            out += it == row.end() ? "" : csv_value(*it);
        }
        out += '\n';
    }
    return out;
}

} // namespace primeroots
