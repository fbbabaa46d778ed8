#pragma once

#include <stdexcept>
#include <string>

namespace topoinf {

/// Failure categories surfaced to the CLI as distinct exit codes.
enum class ErrorKind { Input, SizeCap, Numeric, Io };

class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

class InputError : public Error
{
  public:
    explicit InputError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

class SizeCapError : public Error
{
  public:
    explicit SizeCapError(const std::string& what) : Error(ErrorKind::SizeCap, what) {}
};

class NumericError : public Error
{
  public:
    explicit NumericError(const std::string& what) : Error(ErrorKind::Numeric, what) {}
};

class IoError : public Error
{
  public:
    explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

} // namespace topoinf
