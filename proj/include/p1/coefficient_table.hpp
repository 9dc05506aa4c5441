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

#ifndef P1SERIES_COEFFICIENT_TABLE_HPP
#define P1SERIES_COEFFICIENT_TABLE_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace p1 {

/// Indexed coefficient sequence with provenance: which recursion produced
/// it and up to which order it is exact.
template <typename T>
struct CoefficientTable {
    int first_index = 0;
    std::vector<T> values;
    std::string producer;
    int order = -1;

    int last_index() const { return first_index + static_cast<int>(values.size()) - 1; }

    bool has(int idx) const { return idx >= first_index && idx <= last_index(); }

    const T& at(int idx) const {
        if (!has(idx)) throw std::out_of_range("CoefficientTable: index " + std::to_string(idx));
        return values[static_cast<std::size_t>(idx - first_index)];
    }

    friend bool operator==(const CoefficientTable& a, const CoefficientTable& b) {
        return a.first_index == b.first_index && a.values == b.values;
    }
};

} // namespace p1

#endif
