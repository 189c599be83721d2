// Copyright 2026 The Semdoc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEMDOC_ERRORS_H_
#define SEMDOC_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semdoc {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A new annotation would partially overlap an existing one.
class OverlapError : public Error {
 public:
  using Error::Error;
};

// A span lies outside the document text.
class BoundsError : public Error {
 public:
  using Error::Error;
};

class MalformedXmlError : public Error {
 public:
  MalformedXmlError(const std::string &message, size_t position)
      : Error(message + " at offset " + std::to_string(position)),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

class RaggedTableError : public Error {
 public:
  using Error::Error;
};

// Syntax or consistency problem in a resource file.
class ResourceFormatError : public Error {
 public:
  ResourceFormatError(const std::string &file, size_t line,
                      const std::string &message)
      : Error(file + ":" + std::to_string(line) + ": " + message),
        file_(file),
        line_(line) {}
  const std::string &file() const { return file_; }
  size_t line() const { return line_; }

 private:
  std::string file_;
  size_t line_;
};

// A SISS assignment's component count disagrees with its grammar rule.
class ArityMismatchError : public ResourceFormatError {
 public:
  using ResourceFormatError::ResourceFormatError;
};

class NoAssignmentError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

class DtdSyntaxError : public Error {
 public:
  DtdSyntaxError(const std::string &message, size_t position)
      : Error(message + " at offset " + std::to_string(position)),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

class DanglingReferenceError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace semdoc

#endif  // SEMDOC_ERRORS_H_
