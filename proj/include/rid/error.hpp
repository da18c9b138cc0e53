#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rid {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input; offset is the byte position of the first bad byte.
class ParseError : public Error
{
public:
    ParseError(const std::string & what, std::size_t offset) :
        Error(what + " at byte " + std::to_string(offset)),
        _offset(offset)
    {
    }

    auto offset() const -> std::size_t { return _offset; }

private:
    std::size_t _offset;
};

class UnsupportedSize : public Error
{
public:
    using Error::Error;
};

class InputError : public Error
{
public:
    using Error::Error;
};

class BudgetExceeded : public Error
{
public:
    using Error::Error;
};

}
