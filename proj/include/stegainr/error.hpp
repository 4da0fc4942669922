// Copyright 2026-present the stegainr project
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
#include <string_view>

namespace stegainr {

/// Failure classes. Each maps to one CLI exit code (see tools/).
enum class ErrorCode {
    Structural,  // shapes, widths, congruence between objects
    Argument,    // caller-supplied value out of range
    Io,          // file could not be opened / read / written
    Format,      // bad magic, malformed text, unknown tags
    Checksum,    // payload checksum mismatch
    Version,     // unsupported file format version
    Truncated,   // file ends early
    Key,         // stego key inconsistent with a model
    Divergence,  // non-finite loss or gradient during training
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void
fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace stegainr
