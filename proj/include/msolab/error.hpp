/*
   Copyright 2026 The msolab Authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace msolab {

/// Malformed or out-of-domain input. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A series truncation would discard more mass than the configured cap.
/// Carries the smallest degree that would satisfy the cap.
class TruncationError : public InputError {
public:
    TruncationError(const std::string& what, int required_degree)
        : InputError(what), required_degree_(required_degree) {}

    int required_degree() const noexcept { return required_degree_; }

private:
    int required_degree_;
};

}  // namespace msolab
