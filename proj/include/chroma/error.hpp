#pragma once

#include <stdexcept>
#include <string>

namespace chroma {

enum class Errc {
    invalid_argument,
    parse_error,
    out_of_range,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string & message) :
        std::runtime_error(message), _code(code)
    {
    }

    auto code() const noexcept -> Errc { return _code; }

private:
    Errc _code;
};

} // namespace chroma
