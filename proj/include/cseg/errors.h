// Copyright 2026 The Cseg Authors.
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

#ifndef CSEG_ERRORS_H_
#define CSEG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cseg {

// Raised for unreadable or unwritable files. Mapped to exit code 1 by the
// command line tool.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string &message) : std::runtime_error(message) {}
};

// Raised for malformed or inconsistent corpus input. Messages name the
// document, utterance, and field that triggered the failure. Mapped to exit
// code 2 by the command line tool.
class CorpusError : public std::runtime_error {
 public:
  explicit CorpusError(const std::string &message)
      : std::runtime_error(message) {}
};

// Raised when an internal invariant is violated. Indicates a bug, not bad
// input. Mapped to exit code 3 by the command line tool.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string &message)
      : std::logic_error(message) {}
};

// Checks an internal invariant; throws InternalError with the location of the
// failed condition. Kept active in release builds because registry corruption
// must never propagate into downstream results.
#define CSEG_CHECK(condition, message)                                  \
  do {                                                                  \
    if (!(condition)) {                                                 \
      throw ::cseg::InternalError(std::string(__FILE__) + ":" +         \
                                  std::to_string(__LINE__) + ": " +     \
                                  (message) + " [" #condition "]");     \
    }                                                                   \
  } while (0)

}  // namespace cseg

#endif  // CSEG_ERRORS_H_
