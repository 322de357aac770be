#pragma once

#include <stdexcept>
#include <string>

namespace qrr {

// All domain errors carry a stable machine-readable code alongside the
// human message, so the CLI can report them uniformly.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

} // namespace qrr
