// Copyright 2026 The rangelap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RANGELAP_ERRORS_HPP_
#define RANGELAP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rangelap {

// Invalid constraint configuration, privacy parameters, or input file.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A location parameter or query response lies strictly inside a constraint.
class InfeasibleLocationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An argument falls outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A condition that valid inputs cannot trigger; indicates a bug or float
// pathology.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rangelap

#endif  // RANGELAP_ERRORS_HPP_
