#include "csnet/core/error.hpp"

namespace csnet {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidParameter: return "invalid-parameter";
        case ErrorKind::DegenerateInput: return "degenerate-input";
        case ErrorKind::ResourceLimit: return "resource-limit";
        case ErrorKind::GenerationFailure: return "generation-failure";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace csnet
