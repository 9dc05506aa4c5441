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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "p1/cache.hpp"
#include "p1/verify.hpp"

using namespace p1;

namespace {

std::string tmp_path(const std::string& name) {
    return std::string(P1_TEST_TMPDIR) + "/" + name;
}

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    std::string out_file = tmp_path("cli_capture.txt");
    std::string cmd =
        std::string(P1_CLI_PATH) + " " + args + " > " + out_file + " 2> /dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream is(out_file);
    std::ostringstream buf;
    buf << is.rdbuf();
    return {WEXITSTATUS(rc), buf.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("cache round trip is exact") {
    const ParameterTriple pent{Rational(0), Rational(1), Rational(0)};
    auto v = pentagonal_coeffs(50);
    std::string path = tmp_path("pentagon50.cache");
    write_cache(path, CacheFile{CacheFile::supported_version, pent, v});
    CacheFile back = read_cache(path);
    CHECK(back.table == v);
    CHECK(back.table.producer == "pentagon");
    CHECK(back.params == pent);
    CHECK(back.table.order == 50);
}

TEST_CASE("cache refuses version bumps and corruption") {
    const ParameterTriple p{Rational(1, 2), Rational(3), Rational(-2, 7)};
    auto e = laurent_coeffs(p, 30);
    std::string path = tmp_path("laurent30.cache");
    write_cache(path, CacheFile{CacheFile::supported_version, p, e.coeffs});

    // version bump -> refusal with an upgrade hint
    std::string text = slurp(path);
    std::string bumped = text;
    bumped.replace(bumped.find("p1series-cache 1"), 16, "p1series-cache 2");
    {
        std::ofstream os(path, std::ios::trunc);
        os << bumped;
    }
    CHECK_THROWS_AS(read_cache(path), cache_version_error);

    // flipped digit in the body -> checksum mismatch
    {
        std::ofstream os(path, std::ios::trunc);
        std::string corrupt = text;
        corrupt[corrupt.size() - 3] = corrupt[corrupt.size() - 3] == '1' ? '2' : '1';
        os << corrupt;
    }
    CHECK_THROWS_AS(read_cache(path), cache_corruption_error);
}

TEST_CASE("cached prefix extension equals a fresh run") {
    const ParameterTriple p{Rational(2, 3), Rational(-1, 2), Rational(5)};
    std::string path = tmp_path("laurent_ext.cache");
    std::remove(path.c_str());
    auto first = laurent_coeffs_cached(p, 100, path);
    auto extended = laurent_coeffs_cached(p, 200, path);
    auto fresh = laurent_coeffs(p, 200);
    CHECK(extended.coeffs == fresh.coeffs);
    CHECK(first.coeffs.values.size() == 101);

    std::string ppath = tmp_path("pentagon_ext.cache");
    std::remove(ppath.c_str());
    auto v100 = pentagonal_coeffs_cached(100, ppath);
    auto v200 = pentagonal_coeffs_cached(200, ppath);
    CHECK(v200 == pentagonal_coeffs(200));
    CHECK(v100 == pentagonal_coeffs(100));
}

TEST_CASE("cli: identical requests give byte-identical output") {
    auto a = run_cli("laurent --g2 1/2 --lambda -2/3 --g3 5 --terms 40");
    auto b = run_cli("laurent --g2 1/2 --lambda -2/3 --g3 5 --terms 40");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"value\": \"1/40\"") != std::string::npos); // c_4 = g2/20

    auto p1 = run_cli("pentagon --terms 10 --digits 24");
    auto p2 = run_cli("pentagon --terms 10 --digits 24");
    CHECK(p1.exit_code == 0);
    CHECK(p1.output == p2.output);
}

TEST_CASE("cli: json and csv emissions carry identical value tokens") {
    auto js = run_cli("tau --method quartic --terms 20 --format json");
    auto cs = run_cli("tau --method quartic --terms 20 --format csv");
    REQUIRE(js.exit_code == 0);
    REQUIRE(cs.exit_code == 0);
    // collect csv values
    std::istringstream is(cs.output);
    std::string line;
    std::getline(is, line);
    CHECK(line == "index,value");
    int idx = 0;
    while (std::getline(is, line)) {
        auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        CHECK(line.substr(0, comma) == std::to_string(idx));
        std::string token = "\"value\": \"" + line.substr(comma + 1) + "\"";
        CHECK(js.output.find(token) != std::string::npos);
        ++idx;
    }
    CHECK(idx == 21);
}

TEST_CASE("cli: method choice changes nothing about the numbers") {
    auto a = run_cli("tau --method bilinear --terms 30 --format csv");
    auto b = run_cli("tau --method quartic --terms 30 --format csv");
    auto c = run_cli("tau --method triple-sum --terms 30 --format csv");
    CHECK(a.output == b.output);
    CHECK(a.output == c.output);
}

TEST_CASE("cli: cache flag extends across invocations") {
    std::string path = tmp_path("cli_laurent.cache");
    std::remove(path.c_str());
    auto a = run_cli("laurent --terms 50 --cache " + path + " --format csv");
    CHECK(a.exit_code == 0);
    std::string after_first = slurp(path);
    auto b = run_cli("laurent --terms 120 --cache " + path + " --format csv");
    CHECK(b.exit_code == 0);
    auto fresh = run_cli("laurent --terms 120 --format csv");
    CHECK(b.output == fresh.output);
    CHECK(after_first.find("order 50") != std::string::npos);
    CHECK(slurp(path).find("order 120") != std::string::npos);
}

TEST_CASE("cli: symbolic laurent emits the modular polynomials") {
    auto r = run_cli("laurent --symbolic --terms 11 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("9,1/50*g2*lambda") != std::string::npos);
    CHECK(r.output.find("10,3/22*lambda^2 + 3/6160*g2*g3") != std::string::npos);
    CHECK(r.output.find("11,1/140*lambda*g3") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
    CHECK(run_cli("laurent --g2 1/0").exit_code == 2);
    CHECK(run_cli("laurent --g2 nonsense").exit_code == 2);
    CHECK(run_cli("no-such-subcommand").exit_code == 2);
    CHECK(run_cli("poles --g2 4 --lambda 0 --g3 0 --terms 6").exit_code == 3);
    CHECK(run_cli("triple-sum --terms 25 --check-integrality").exit_code == 0);
    CHECK(run_cli("verify --format csv").exit_code == 0);
}

TEST_CASE("cli: svg pole map has one marker per csv row") {
    std::string svg_path = tmp_path("poles.svg");
    auto s = run_cli("poles --terms 151 --digits 18 --format svg --out " + svg_path);
    CHECK(s.exit_code == 0);
    std::string svg = slurp(svg_path);
    auto csv = run_cli("poles --terms 151 --digits 18 --format csv");
    std::size_t rows =
        static_cast<std::size_t>(std::count(csv.output.begin(), csv.output.end(), '\n')) - 1;
    std::size_t markers = 0;
    for (std::size_t at = svg.find("<circle"); at != std::string::npos;
         at = svg.find("<circle", at + 1))
        ++markers;
    CHECK(markers == rows);
    CHECK(rows % 5 == 0);
}

TEST_CASE("library verification suite is all green") {
    for (const auto& r : run_verification(60, 24)) CHECK_MESSAGE(r.pass, r.name);
}
