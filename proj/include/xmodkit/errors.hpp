#pragma once

#include <stdexcept>
#include <string>

namespace xmk {

/// All library failures carry a stable machine-readable code
/// (e.g. "NotAssociative", "CodomainMismatch") plus a human message
/// naming the offending datum.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

} // namespace xmk
