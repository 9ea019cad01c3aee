#pragma once

#include <stdexcept>
#include <string>

namespace binform {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("singular matrix used as a substitution") {}
};

struct DegenerateForm : Error {
    explicit DegenerateForm(const std::string& what = "form has vanishing discriminant")
        : Error(what) {}
};

struct NotARoot : Error {
    explicit NotARoot(const std::string& what = "value is not a root of the form")
        : Error(what) {}
};

struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what = "certification failed at maximum working precision")
        : Error(what) {}
};

// Parse errors carry the byte offset of the offending token.
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& what, std::size_t off)
        : Error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct NotHomogeneous : Error {
    explicit NotHomogeneous(const std::string& what = "polynomial is not homogeneous in two variables")
        : Error(what) {}
};

struct UnsupportedDegree : Error {
    explicit UnsupportedDegree(const std::string& what = "degree out of supported range 2..6")
        : Error(what) {}
};

}  // namespace binform
