// Copyright 2026 The hocat Authors.
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

#ifndef HOCAT_ERRORS_HPP_
#define HOCAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hocat {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // The input document is malformed or references undeclared names.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // The data parses but violates a structural law (category axioms,
  // deformation squares, ...).
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  // An operation was called on inputs that do not meet its precondition.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A zigzag move was requested at a position where it does not apply.
  class InapplicableMove : public Error {
   public:
    using Error::Error;
  };

  // A proven implication failed to hold; indicates a bug.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace hocat

#endif  // HOCAT_ERRORS_HPP_
