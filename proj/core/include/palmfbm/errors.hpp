// Copyright 2026 The palmfbm Authors
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

namespace palmfbm {

/// Coarse classification used by front ends to map failures to exit codes.
enum class ErrorCategory {
  kDomain,   // caller supplied parameters outside the valid domain
  kNumeric,  // a numerical routine could not meet its contract
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

#define PALMFBM_DEFINE_ERROR(Name, Category)                     \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what)                       \
        : Error(ErrorCategory::Category, #Name ": " + what) {}   \
  };

PALMFBM_DEFINE_ERROR(InvalidParameter, kDomain)
PALMFBM_DEFINE_ERROR(WindowTooSmall, kDomain)
PALMFBM_DEFINE_ERROR(DegenerateEnsemble, kDomain)
PALMFBM_DEFINE_ERROR(GridMismatch, kDomain)
PALMFBM_DEFINE_ERROR(InsufficientData, kDomain)
PALMFBM_DEFINE_ERROR(MalformedInput, kDomain)
PALMFBM_DEFINE_ERROR(NegativeEigenvalue, kNumeric)
PALMFBM_DEFINE_ERROR(FactorizationFailure, kNumeric)
PALMFBM_DEFINE_ERROR(TruncationTooLarge, kNumeric)
PALMFBM_DEFINE_ERROR(QuadratureFailure, kNumeric)
PALMFBM_DEFINE_ERROR(NonpositiveVariance, kNumeric)

#undef PALMFBM_DEFINE_ERROR

}  // namespace palmfbm
