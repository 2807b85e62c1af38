// Copyright 2026 The sqbound Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace sqb {

/// Base class of every error raised by the library. The CLI maps all of
/// these to exit code 2 and prints what().
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define SQB_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                      \
   public:                                                         \
    using Error::Error;                                            \
    const char* kind() const noexcept override { return #Name; }   \
  };

SQB_DEFINE_ERROR(LabelCollision)
SQB_DEFINE_ERROR(LabelNotFound)
SQB_DEFINE_ERROR(DimMismatch)
SQB_DEFINE_ERROR(EmptySubset)
SQB_DEFINE_ERROR(SpecError)
SQB_DEFINE_ERROR(NotPure)
SQB_DEFINE_ERROR(TooLarge)
SQB_DEFINE_ERROR(DomainError)
SQB_DEFINE_ERROR(RootError)
// A density matrix or channel violates one of its defining invariants.
SQB_DEFINE_ERROR(InvalidState)
SQB_DEFINE_ERROR(InvalidChannel)
SQB_DEFINE_ERROR(ParseError)

#undef SQB_DEFINE_ERROR

}  // namespace sqb
