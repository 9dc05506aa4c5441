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

#ifndef P1SERIES_CACHE_HPP
#define P1SERIES_CACHE_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "p1/coefficient_table.hpp"
#include "p1/laurent.hpp"
#include "p1/rational.hpp"
#include "p1/weighted_poly.hpp"

namespace p1 {

struct cache_version_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct cache_corruption_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Line-oriented coefficient cache. Versioned header, exact parameter
/// strings, one `index numerator/denominator` line per coefficient, and a
/// checksum over the body. Write-then-read reproduces the table exactly.
struct CacheFile {
    static constexpr int supported_version = 1;

    int version = supported_version;
    ParameterTriple params;
    CoefficientTable<Rational> table;
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

} // namespace detail

inline void write_cache(const std::string& path, const CacheFile& f) {
    std::ostringstream body;
    for (int i = f.table.first_index; i <= f.table.last_index(); ++i) {
        const Rational& r = f.table.at(i);
        body << i << " " << r.num().get_str() << "/" << r.den().get_str() << "\n";
    }
    std::string body_text = body.str();
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw std::runtime_error("write_cache: cannot open " + path);
    os << "p1series-cache " << f.version << "\n";
    os << "producer " << f.table.producer << "\n";
    os << "g2 " << f.params.g2.to_string() << "\n";
    os << "lambda " << f.params.lambda.to_string() << "\n";
    os << "g3 " << f.params.g3.to_string() << "\n";
    os << "first-index " << f.table.first_index << "\n";
    os << "order " << f.table.order << "\n";
    os << "checksum " << detail::hex64(detail::fnv1a(body_text)) << "\n";
    os << "---\n";
    os << body_text;
    if (!os) throw std::runtime_error("write_cache: write failed for " + path);
}

inline CacheFile read_cache(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("read_cache: cannot open " + path);
    CacheFile f;
    std::string line, key;
    // header
    if (!std::getline(is, line)) throw cache_corruption_error("read_cache: empty file");
    {
        std::istringstream ls(line);
        std::string magic;
        ls >> magic >> f.version;
        if (magic != "p1series-cache")
            throw cache_corruption_error("read_cache: not a p1series cache file");
        if (f.version != CacheFile::supported_version)
            throw cache_version_error(
                "read_cache: unsupported cache version " + std::to_string(f.version) +
                "; regenerate with this build (supports version " +
                std::to_string(CacheFile::supported_version) + ")");
    }
    std::string checksum;
    while (std::getline(is, line)) {
        if (line == "---") break;
        std::istringstream ls(line);
        ls >> key;
        std::string rest;
        ls >> rest;
        if (key == "producer") f.table.producer = rest;
        else if (key == "g2") f.params.g2 = Rational::parse(rest);
        else if (key == "lambda") f.params.lambda = Rational::parse(rest);
        else if (key == "g3") f.params.g3 = Rational::parse(rest);
        else if (key == "first-index") f.table.first_index = std::stoi(rest);
        else if (key == "order") f.table.order = std::stoi(rest);
        else if (key == "checksum") checksum = rest;
        else throw cache_corruption_error("read_cache: unknown header key " + key);
    }
    std::ostringstream body;
    body << is.rdbuf();
    std::string body_text = body.str();
    if (checksum.empty() || detail::hex64(detail::fnv1a(body_text)) != checksum)
        throw cache_corruption_error("read_cache: checksum mismatch, file is corrupt");
    std::istringstream bs(body_text);
    int expect = f.table.first_index;
    while (std::getline(bs, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int idx;
        std::string value;
        if (!(ls >> idx >> value))
            throw cache_corruption_error("read_cache: malformed body line '" + line + "'");
        if (idx != expect)
            throw cache_corruption_error("read_cache: non-contiguous index " +
                                         std::to_string(idx));
        f.table.values.push_back(Rational::parse(value));
        ++expect;
    }
    if (f.table.last_index() != f.table.order)
        throw cache_corruption_error("read_cache: body shorter than stated order");
    return f;
}

/// Laurent coefficients with a file cache: a cached prefix seeds the
/// recursion, so extending to a larger order matches a fresh run exactly.
inline LaurentExpansion laurent_coeffs_cached(const ParameterTriple& params, int N,
                                              const std::string& path) {
    LaurentExpansion e;
    bool have = false;
    std::ifstream probe(path);
    if (probe.good()) {
        probe.close();
        CacheFile f = read_cache(path);
        if (f.table.producer == "laurent" && f.params == params && f.table.first_index == 0) {
            e.params = params;
            e.order = f.table.order;
            e.coeffs = std::move(f.table);
            have = true;
        }
    }
    if (!have) e = laurent_coeffs(params, N);
    if (e.order < N) e = laurent_coeffs_extended(e, N);
    write_cache(path, CacheFile{CacheFile::supported_version, params, e.coeffs});
    if (e.order > N) {
        e.coeffs.values.resize(static_cast<std::size_t>(N) + 1);
        e.coeffs.order = N;
        e.order = N;
    }
    return e;
}

/// Pentagonal v_n with the same cache contract.
inline CoefficientTable<Rational> pentagonal_coeffs_cached(int N, const std::string& path) {
    const ParameterTriple pent{Rational(0), Rational(1), Rational(0)};
    CoefficientTable<Rational> t;
    bool have = false;
    std::ifstream probe(path);
    if (probe.good()) {
        probe.close();
        CacheFile f = read_cache(path);
        if (f.table.producer == "pentagon" && f.params == pent && f.table.first_index == 1) {
            t = std::move(f.table);
            have = true;
        }
    }
    if (!have) t = pentagonal_coeffs(N);
    if (t.order < N) {
        std::vector<Rational> v(static_cast<std::size_t>(t.order) + 1);
        for (int n = 1; n <= t.order; ++n) v[static_cast<std::size_t>(n)] = t.at(n);
        pentagonal_extend(v, N);
        t.values.assign(v.begin() + 1, v.end());
        t.order = N;
    }
    write_cache(path, CacheFile{CacheFile::supported_version, pent, t});
    if (t.order > N) {
        t.values.resize(static_cast<std::size_t>(N));
        t.order = N;
    }
    return t;
}

} // namespace p1

#endif
