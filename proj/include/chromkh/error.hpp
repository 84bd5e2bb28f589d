#pragma once

#include <stdexcept>
#include <string>

namespace chromkh {

// Error categories map one-to-one onto C API status codes and CLI exit codes.
enum class ErrorCode {
    kAssertion = 1,  // an internal mathematical check failed (d*d != 0 and friends)
    kParse = 2,
    kBudget = 3,
    kInvalidArgument = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ErrorCode::kParse, what) {}
};

class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(ErrorCode::kBudget, what) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(ErrorCode::kInvalidArgument, what) {}
};

class AssertionFailure : public Error {
public:
    explicit AssertionFailure(const std::string& what) : Error(ErrorCode::kAssertion, what) {}
};

}  // namespace chromkh
