/*
   Copyright 2026 The p1series Authors

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

#ifndef P1SERIES_ERRORS_HPP
#define P1SERIES_ERRORS_HPP

#include <stdexcept>

namespace p1 {

struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The coefficient-ratio iteration did not settle: several poles of
/// (nearly) equal modulus, or a stride that does not match the symmetry.
struct non_generic_error : numerical_error {
    using numerical_error::numerical_error;
};

} // namespace p1

#endif
