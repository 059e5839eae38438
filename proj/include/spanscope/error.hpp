/* Copyright 2026 The Spanscope Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef SPANSCOPE_ERROR_HPP_
#define SPANSCOPE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace spanscope {

enum class ErrorKind {
  kValidation,
  kIo,
  kSelfCheck,
};

// Base of every exception thrown by the library. The kind selects the C API
// status code and the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error(ErrorKind::kValidation, message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message)
      : Error(ErrorKind::kIo, message) {}
};

class SelfCheckError : public Error {
 public:
  explicit SelfCheckError(const std::string& message)
      : Error(ErrorKind::kSelfCheck, message) {}
};

}  // namespace spanscope

#endif  // SPANSCOPE_ERROR_HPP_
