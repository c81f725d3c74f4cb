#pragma once

#include <stdexcept>
#include <string>

namespace skewcell {

// Every failure in the engine is thrown as an error with a stable code,
// so callers (CLI, tests) can match on the code rather than the message.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw error(code, what);
}

inline void require(bool ok, const std::string& code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace skewcell
