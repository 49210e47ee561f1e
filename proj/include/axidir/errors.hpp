// Copyright 2026 The axidir Authors
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

#ifndef AXIDIR_ERRORS_HPP_
#define AXIDIR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace axidir {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (D < 2, |x| > 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

// The back-half Gram matrix was not positive definite.
class DegenerateProblem : public Error {
 public:
  using Error::Error;
};

class InvalidFlatness : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A node row whose length is too far from 1 to be renormalized.
class NormError : public Error {
 public:
  using Error::Error;
};

}  // namespace axidir

#endif  // AXIDIR_ERRORS_HPP_
