#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace nonabcoh {

/// Domain error carrying a stable machine-readable code next to the
/// human-readable message.  Codes are CamelCase tokens such as
/// "ModeMismatch", "SingularMatrix", "NotFlat".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void raise(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

} // namespace nonabcoh
