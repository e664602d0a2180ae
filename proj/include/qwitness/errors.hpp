// Copyright 2026 The qwitness Authors
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

#ifndef QWITNESS_ERRORS_HPP
#define QWITNESS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qw {

/// Shape or bookkeeping mismatch: site counts, dimensions, index sets.
class StructuralError : public std::invalid_argument {
   public:
    explicit StructuralError(const std::string &what) : std::invalid_argument(what) {}
};

/// A documented precondition on values was violated (non-Hermitian input,
/// invalid density matrix, non-unit axis, ...).
class ContractViolation : public std::domain_error {
   public:
    explicit ContractViolation(const std::string &what) : std::domain_error(what) {}
};

}  // namespace qw

#endif
