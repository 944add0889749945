// Copyright 2026 The clonebound developers

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

namespace clonebound {

/// Base class of every error the library raises on its own behalf.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define CLONEBOUND_ERROR_TYPE(NAME)                                            \
    class NAME : public Error {                                                \
      public:                                                                  \
        using Error::Error;                                                    \
    };

// State construction / validation
CLONEBOUND_ERROR_TYPE(NotHermitian)
CLONEBOUND_ERROR_TYPE(NotPositive)
CLONEBOUND_ERROR_TYPE(BadTrace)
CLONEBOUND_ERROR_TYPE(DimensionMismatch)
CLONEBOUND_ERROR_TYPE(DimensionCapExceeded)
CLONEBOUND_ERROR_TYPE(IncompleteKraus)

// Angles and probabilities
CLONEBOUND_ERROR_TYPE(AlphaOutOfRange)
CLONEBOUND_ERROR_TYPE(AngleOutOfRange)
CLONEBOUND_ERROR_TYPE(AngleOrderViolation)
CLONEBOUND_ERROR_TYPE(BadProbabilities)

// Bounds and minimization
CLONEBOUND_ERROR_TYPE(DegeneratePair)
CLONEBOUND_ERROR_TYPE(TooManyStates)

// Circuit construction / simulation
CLONEBOUND_ERROR_TYPE(PerfectCloningRegime)
CLONEBOUND_ERROR_TYPE(BadCounts)
CLONEBOUND_ERROR_TYPE(RegisterTooLarge)

// Front end
CLONEBOUND_ERROR_TYPE(ParseError)
CLONEBOUND_ERROR_TYPE(InvariantViolation)

#undef CLONEBOUND_ERROR_TYPE

} // namespace clonebound
