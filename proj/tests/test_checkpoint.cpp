#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "primeroots/checkpoint.hpp"
#include "primeroots/errors.hpp"
#include "primeroots/runner.hpp"

using namespace primeroots;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

Checkpoint sample_checkpoint() {
    Checkpoint cp;
    cp.task = "audit";
    cp.params["claim"] = "goldbach";
    cp.lo = 6;
    cp.hi = 1000;
    cp.verified_up_to = 500;
    cp.counters["examined"] = 248;
    cp.counters["mismatches"] = 1;
    cp.first_mismatch = 77;
    cp.records.push_back(ordered_json{{"claim", "goldbach"}, {"M", 77}});
    return cp;
}

} // namespace

TEST_CASE("checkpoint survives a save/load round trip") {
    std::string path = temp_path("pr_cp_roundtrip.json");
    Checkpoint cp = sample_checkpoint();
    checkpoint_save(cp, path);

    Checkpoint loaded = checkpoint_load(path);
    CHECK(loaded.schema_version == kCheckpointSchemaVersion);
    CHECK(loaded.task == cp.task);
    CHECK(loaded.params == cp.params);
    CHECK(loaded.lo == cp.lo);
    CHECK(loaded.hi == cp.hi);
    CHECK(loaded.verified_up_to == cp.verified_up_to);
    CHECK(loaded.counters == cp.counters);
    CHECK(loaded.first_mismatch == cp.first_mismatch);
    REQUIRE(loaded.records.size() == 1);
    CHECK(loaded.records[0] == cp.records[0]);

    CHECK_FALSE(std::filesystem::exists(path + ".tmp")); // rename happened
    std::filesystem::remove(path);
}

TEST_CASE("truncated checkpoint is refused as corrupt") {
    std::string path = temp_path("pr_cp_truncated.json");
    checkpoint_save(sample_checkpoint(), path);
    auto size = std::filesystem::file_size(path);
    std::filesystem::resize_file(path, size / 2);

    try {
        checkpoint_load(path);
        FAIL("expected corrupt_checkpoint");
    } catch (const Error& e) {
        CHECK(e.code() == errc::corrupt_checkpoint);
    }
    std::filesystem::remove(path);
}

TEST_CASE("missing required fields are refused as corrupt") {
    std::string path = temp_path("pr_cp_fields.json");
    {
        std::ofstream out(path);
        out << "{\"schema_version\": 1, \"task\": \"audit\"}\n";
    }
    try {
        checkpoint_load(path);
        FAIL("expected corrupt_checkpoint");
    } catch (const Error& e) {
        CHECK(e.code() == errc::corrupt_checkpoint);
    }
    std::filesystem::remove(path);
}

TEST_CASE("future schema versions are refused") {
    std::string path = temp_path("pr_cp_version.json");
    Checkpoint cp = sample_checkpoint();
    cp.schema_version = 99;
    checkpoint_save(cp, path);
    try {
        checkpoint_load(path);
        FAIL("expected unsupported_version");
    } catch (const Error& e) {
        CHECK(e.code() == errc::unsupported_version);
    }
    std::filesystem::remove(path);
}

TEST_CASE("frontier outside the range is refused") {
    std::string path = temp_path("pr_cp_frontier.json");
    Checkpoint cp = sample_checkpoint();
    cp.verified_up_to = cp.hi + 1;
    checkpoint_save(cp, path);
    try {
        checkpoint_load(path);
        FAIL("expected corrupt_checkpoint");
    } catch (const Error& e) {
        CHECK(e.code() == errc::corrupt_checkpoint);
    }
    std::filesystem::remove(path);
}

TEST_CASE("missing file reports an I/O error") {
    try {
        checkpoint_load(temp_path("pr_cp_never_written.json"));
        FAIL("expected io_error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::io_error);
    }
}
