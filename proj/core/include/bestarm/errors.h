// Copyright 2026 The bestarm Authors.
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

#ifndef BESTARM_ERRORS_H_
#define BESTARM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace bestarm {

// A caller broke a documented precondition (dimension mismatch, value out of
// its domain, index out of range).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An empirical quantity was requested from an arm that was never pulled.
class NoSamplesError : public std::domain_error {
 public:
  NoSamplesError() : std::domain_error("no samples") {}
};

// The instance has no unique best arm.
class DegenerateInstance : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configuration file or CLI request failed validation. The message names
// the offending key.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reading or writing a file failed. The message carries the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bestarm

#endif  // BESTARM_ERRORS_H_
