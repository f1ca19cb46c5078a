#ifndef QCYC_ERROR_HPP
#define QCYC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcyc {

/// Thrown when an exhaustive enumeration would exceed its configured cap.
class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based, or 0 when the input has no line structure.
class ParseError : public std::runtime_error {
   public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

}  // namespace qcyc

#endif  // QCYC_ERROR_HPP
