/*
   Copyright 2026 The tokentrace Authors

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

namespace tokentrace {

/// Data-level failure: unreadable input, invalid configuration, broken invariant.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operator-level failure: bad flags or unusable arguments. Maps to exit code 1.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tokentrace
