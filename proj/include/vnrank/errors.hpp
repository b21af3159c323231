// Copyright 2026 The vnrank Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace vnrank {

/// Operand dimensions do not conform.
class ShapeError : public std::invalid_argument {
  public:
    explicit ShapeError(const std::string &what) : std::invalid_argument(what) {}
};

/// Argument is outside the domain of the operation (m < 2, non-orthogonal rotation, ...).
class DomainError : public std::invalid_argument {
  public:
    explicit DomainError(const std::string &what) : std::invalid_argument(what) {}
};

class UnitarityError : public std::invalid_argument {
  public:
    explicit UnitarityError(const std::string &what) : std::invalid_argument(what) {}
};

/// Input does not describe a physical state (non-Hermitian, outside the Bell tetrahedron, ...).
class InvalidStateError : public std::invalid_argument {
  public:
    explicit InvalidStateError(const std::string &what) : std::invalid_argument(what) {}
};

/// Malformed input file (missing field, wrong length, non-numeric entry).
class FormatError : public std::runtime_error {
  public:
    explicit FormatError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace vnrank
