// include/remixkit/error.h

// Copyright 2026  RemixKit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef REMIXKIT_ERROR_H_
#define REMIXKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace remixkit {

// Base class for all library failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// SNR is undefined because one side of the ratio has zero power.
class DivergentSnr : public Error {
 public:
  using Error::Error;
};

// File-system or file-format failure; the message names the path.
class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration value or flag combination.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Non-finite value where training cannot continue.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace remixkit

#endif  // REMIXKIT_ERROR_H_
