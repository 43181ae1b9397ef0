#ifndef IGP2H10_ERRORS_HPP
#define IGP2H10_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace igp2h10 {

// Error taxonomy mirrored by the CLI exit codes:
//   parse_error -> 2, cap_exceeded -> 3, contract_violation / structural_error -> 4.

struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

struct contract_violation : std::runtime_error {
    explicit contract_violation(const std::string& what) : std::runtime_error(what) {}
};

struct cap_exceeded : std::runtime_error {
    // required: how big the refused computation would have been
    std::string quantity;
    cap_exceeded(const std::string& what, std::string required)
        : std::runtime_error(what + " (required: " + required + ")"), quantity(std::move(required)) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace igp2h10

#endif
