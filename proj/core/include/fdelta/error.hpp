// Copyright 2026 The fdelta Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace fdelta {

// Base of everything the library throws. The CLI maps the subclasses onto
// exit codes (2 invalid input, 3 resource budget, 4 non-convergence).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of a function (t < 1 for xi, ...).
class DomainError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace fdelta
