#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seifert_cs {

// Base class for every validation failure; CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidAlpha : public Error { public: using Error::Error; };
class NotCoprime : public Error { public: using Error::Error; };
class NegativeGenus : public Error { public: using Error::Error; };
class NonContactData : public Error { public: using Error::Error; };
class IndexOutOfRange : public Error { public: using Error::Error; };
class EnumerationTooLarge : public Error { public: using Error::Error; };
class NegativeCurvatureIntegral : public Error { public: using Error::Error; };
class NonPositiveEpsilon : public Error { public: using Error::Error; };
class InvalidLevel : public Error { public: using Error::Error; };

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& expected)
        : Error("parse error at position " + std::to_string(position) +
                ": expected " + expected),
          position_(position), expected_(expected) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

} // namespace seifert_cs
