// Copyright 2026 The qcompress Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcompress {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ArityError : public Error {
    using Error::Error;
};

class QubitIndexError : public Error {
    using Error::Error;
};

class SpecError : public Error {
    using Error::Error;
};

/// Non-finite or out-of-range numeric input.
class ValueError : public Error {
    using Error::Error;
};

class UnsupportedGateError : public Error {
    using Error::Error;
};

class LutError : public Error {
    using Error::Error;
};

class ConfigError : public Error {
    using Error::Error;
};

class DataError : public Error {
    using Error::Error;
};

class EncodeError : public Error {
    using Error::Error;
};

class IoError : public Error {
    using Error::Error;
};

/// Text-format error carrying the 1-based line it was raised on.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace qcompress
