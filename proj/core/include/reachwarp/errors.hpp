/*
 Copyright 2026 The reachwarp Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#ifndef REACHWARP_ERRORS_HPP
#define REACHWARP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reachwarp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Argument outside the operation's domain (time outside [0, T], h <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed control set or box bounds.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Caller-side contract violated (non-unit direction, non-finite data).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A numerical routine failed or produced non-finite output.
class NumericError : public Error {
public:
    NumericError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace reachwarp

#endif  // REACHWARP_ERRORS_HPP
