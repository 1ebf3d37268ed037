#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace asymcg {

enum class ErrorKind {
    BadInput,        // malformed address, word, serialization, ...
    Domain,          // precondition violated (not a frontier edge, edge inside support, ...)
    Limit,           // support cap exceeded
    BranchAmbiguous, // eigenvalue too close to the log branch cut
    Internal,        // invariant that should be unreachable
};

/// Library-wide exception. `offset` is a byte offset into the offending
/// input text when one exists (parse diagnostics).
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message, std::optional<std::size_t> offset = std::nullopt)
        : std::runtime_error(std::move(message)), kind_(kind), offset_(offset) {}

    ErrorKind kind() const { return kind_; }
    std::optional<std::size_t> offset() const { return offset_; }

    static const char* kind_name(ErrorKind k) {
        switch (k) {
            case ErrorKind::BadInput: return "bad-input";
            case ErrorKind::Domain: return "domain";
            case ErrorKind::Limit: return "limit";
            case ErrorKind::BranchAmbiguous: return "branch-ambiguous";
            case ErrorKind::Internal: return "internal";
        }
        return "unknown";
    }

  private:
    ErrorKind kind_;
    std::optional<std::size_t> offset_;
};

} // namespace asymcg
