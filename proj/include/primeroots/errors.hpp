#pragma once

#include <stdexcept>
#include <string>

namespace primeroots {

enum class errc {
    invalid_argument,
    range_too_large,
    degenerate_alpha,
    invalid_j,
    io_error,
    corrupt_checkpoint,
    checkpoint_mismatch,
    unsupported_version,
};

// Single exception type for the whole library; the code survives the trip
// through the C API as a status value.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace primeroots
