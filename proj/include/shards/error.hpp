#pragma once

#include <stdexcept>
#include <string>

namespace shards {

// code is machine-readable and stable; the CLI maps codes to exit statuses.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& what) {
    throw error(code, what);
}

inline void require(bool ok, const char* code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace shards
