#pragma once

#include <stdexcept>
#include <string>

namespace csnet {

enum class ErrorKind {
    InvalidParameter,
    DegenerateInput,
    ResourceLimit,
    GenerationFailure,
};

const char* to_string(ErrorKind kind) noexcept;

/// Exception thrown by every toolkit operation that rejects its input.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool condition, const std::string& what) {
    if (!condition) fail(ErrorKind::InvalidParameter, what);
}

}  // namespace csnet
