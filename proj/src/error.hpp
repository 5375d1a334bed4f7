#ifndef RGC_ERROR_HPP
#define RGC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rgc {

enum class ErrorCode {
    Io = 1,
    EmptySequence = 2,
    BadArgument = 3,
    BadMagic = 4,
    Truncated = 5,
    SectionMismatch = 6,
    Corrupt = 7,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace rgc

#endif
