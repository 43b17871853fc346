#include "primeroots/checkpoint.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "primeroots/errors.hpp"

namespace primeroots {

void checkpoint_save(const Checkpoint& cp, const std::string& path) {
    ordered_json doc;
    doc["schema_version"] = cp.schema_version;
    doc["task"] = cp.task;
    doc["params"] = cp.params;
    doc["range"] = ordered_json{{"lo", cp.lo}, {"hi", cp.hi}};
    doc["verified_up_to"] = cp.verified_up_to;
    doc["counters"] = ordered_json::object();
    for (const auto& [name, value] : cp.counters) doc["counters"][name] = value;
    if (cp.first_mismatch)
        doc["first_mismatch"] = *cp.first_mismatch;
    else
        doc["first_mismatch"] = nullptr;
    doc["records"] = ordered_json::array();
    for (const auto& row : cp.records) doc["records"].push_back(row);

    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(errc::io_error, "cannot open checkpoint temp file: " + tmp);
        out << doc.dump(2) << "\n";
        out.flush();
        if (!out) fail(errc::io_error, "cannot write checkpoint temp file: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) fail(errc::io_error, "cannot rename checkpoint into place: " + ec.message());
}

Checkpoint checkpoint_load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_error, "cannot open checkpoint: " + path);

    ordered_json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception&) {
        fail(errc::corrupt_checkpoint, "checkpoint is not valid JSON: " + path);
    }

    try {
        if (!doc.is_object()) fail(errc::corrupt_checkpoint, "checkpoint is not a JSON object");
        int version = doc.at("schema_version").get<int>();
        if (version != kCheckpointSchemaVersion)
            fail(errc::unsupported_version,
                 "checkpoint schema_version " + std::to_string(version) + " is not supported");

        Checkpoint cp;
        cp.schema_version = version;
        cp.task = doc.at("task").get<std::string>();
        cp.params = doc.at("params");
        cp.lo = doc.at("range").at("lo").get<std::uint64_t>();
        cp.hi = doc.at("range").at("hi").get<std::uint64_t>();
        cp.verified_up_to = doc.at("verified_up_to").get<std::uint64_t>();
        for (const auto& [name, value] : doc.at("counters").items())
            cp.counters[name] = value.get<std::uint64_t>();
        if (!doc.at("first_mismatch").is_null())
            cp.first_mismatch = doc.at("first_mismatch").get<std::uint64_t>();
        for (const auto& row : doc.at("records")) cp.records.push_back(row);

        if (cp.lo > cp.hi || cp.verified_up_to < cp.lo || cp.verified_up_to > cp.hi)
            fail(errc::corrupt_checkpoint, "checkpoint frontier outside its range");
        return cp;
    } catch (const Error&) {
        throw;
    } catch (const nlohmann::json::exception&) {
        fail(errc::corrupt_checkpoint, "checkpoint is missing required fields: " + path);
    }
}

} // namespace primeroots
