/*
   Copyright 2026 The quantj Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QUANTJ_ERRORS_HPP
#define QUANTJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quantj {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Malformed literal, inconsistent instance, wrong field, etc.
class InputError : public Error {
   public:
    using Error::Error;
};

// Division by zero, inversion of zero, operations outside an operation's domain.
class DomainError : public Error {
   public:
    using Error::Error;
};

// A quantity is zero to the available precision, or a requested precision cannot be
// certified from the inputs.
class PrecisionError : public Error {
   public:
    using Error::Error;
};

// A finite search (bound, slack, candidate list) ran out before deciding.
class UndecidableError : public Error {
   public:
    using Error::Error;
};

// An internal cross-check failed (e.g. a non-q-power exponential coefficient survived).
class VerificationError : public Error {
   public:
    using Error::Error;
};

}  // namespace quantj

#endif
