#pragma once

#include <stdexcept>
#include <string>

namespace tjcm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  ConfigError(std::string field, std::string reason)
      : Error(field + ": " + reason), field_(std::move(field)), reason_(std::move(reason)) {}
  const std::string& field() const { return field_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string field_;
  std::string reason_;
};

// A call was made outside the domain where the quantity is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

class TruncationOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace tjcm
