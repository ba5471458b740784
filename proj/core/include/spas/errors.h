/*
Copyright 2026 The spas Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef SPAS_ERRORS_H_
#define SPAS_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spas {

// Base class for every exception thrown by the library. Validation problems
// in user data are reported through ValidationReport instead; exceptions
// signal broken preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownIdentifierError : public Error {
 public:
  using Error::Error;
};

class InvalidMatchingError : public Error {
 public:
  using Error::Error;
};

// Raised by operations whose result is only defined on stable matchings.
class UnstableInputError : public Error {
 public:
  using Error::Error;
};

class SizeGuardError : public Error {
 public:
  SizeGuardError(std::size_t students, std::size_t limit)
      : Error("instance has " + std::to_string(students) +
              " students, above the enumeration limit of " +
              std::to_string(limit) + " (use force to override)"),
        students_(students),
        limit_(limit) {}

  std::size_t students() const { return students_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t students_;
  std::size_t limit_;
};

class InfeasibleParamsError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column),
        detail_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace spas

#endif  // SPAS_ERRORS_H_
