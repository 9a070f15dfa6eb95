#pragma once

#include <stdexcept>
#include <string>

namespace chase {

enum class ErrorKind {
    Validation,         // malformed tour (duplicate / missing / out-of-range city)
    Domain,             // argument outside an operator's domain
    Parse,              // malformed input text
    Integrity,          // header and body of a file disagree
    UnsupportedFormat,  // TSPLIB feature outside the EUC_2D subset
    Size,               // instance too large for exhaustive search
    Io,
    Config,
    Caught,             // chaser step requested on identical tours
    Contract,           // catch handling requested on distinct tours
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace chase
