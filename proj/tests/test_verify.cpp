/*
 * Copyright 2026 the slowcol authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <json.hpp>

#include "slowcol/errors.hpp"
#include "slowcol/verify.hpp"

using namespace slowcol;

namespace {

// Scaled-down knobs so the whole matrix stays fast in unit runs; the
// acceptance binary runs the defaults.
SuiteOptions tiny() {
    SuiteOptions o;
    o.seed = 7;
    o.monotone_pairs = 12;
    o.additive_pairs = 8;
    o.multipartite_total = 6;
    o.forest_graphs = 8;
    o.planar_hi = 6;
    o.planar_reps = 1;
    o.fourcol_rounds = 40;
    o.fourcol_max_n = 20;
    o.outer_hi = 7;
    o.outer_reps = 1;
    o.outer_rounds = 200;
    o.outer_max_n = 60;
    o.coloring_sets = 12;
    o.partition_graphs = 12;
    o.acyclic_graphs = 8;
    return o;
}

}  // namespace

TEST_CASE("every suite passes at reduced scale") {
    SuiteOptions opt = tiny();
    for (const std::string& name : suite_names()) {
        CAPTURE(name);
        SuiteReport rep = run_suite(name, opt);
        CHECK(rep.suite == name);
        CHECK(!rep.instances.empty());
        CHECK(rep.failures() == 0);
        CHECK(rep.passed());
    }
}

TEST_CASE("suite roster is fixed") {
    auto names = suite_names();
    REQUIRE(names.size() == 8);
    CHECK_THROWS_AS(run_suite("no-such-suite", tiny()), BadInput);
}

TEST_CASE("instance records serialize to parseable json") {
    SuiteOptions opt = tiny();
    SuiteReport rep = run_suite("closed-forms", opt);
    REQUIRE(!rep.instances.empty());
    const InstanceRecord& r = rep.instances.front();
    nlohmann::json j = nlohmann::json::parse(record_to_json(r));
    CHECK(j["suite"] == r.suite);
    CHECK(j["group"] == r.group);
    CHECK(j["id"] == r.id);
    CHECK(j["n"] == r.n);
    CHECK(j["check"] == r.check);
    CHECK(j["observed"] == r.observed);
    CHECK(j["pass"] == r.pass);
    CHECK(j["bound"].is_number());
}

TEST_CASE("reruns with the same options reproduce the same records") {
    SuiteOptions opt = tiny();
    SuiteReport a = run_suite("monotonicity", opt);
    SuiteReport b = run_suite("monotonicity", opt);
    REQUIRE(a.instances.size() == b.instances.size());
    for (std::size_t i = 0; i < a.instances.size(); ++i)
        CHECK(record_to_json(a.instances[i]) == record_to_json(b.instances[i]));
    opt.seed = 8;
    SuiteReport c = run_suite("monotonicity", opt);
    bool any_difference = false;
    for (std::size_t i = 0; i < std::min(a.instances.size(), c.instances.size()); ++i)
        if (record_to_json(a.instances[i]) != record_to_json(c.instances[i])) any_difference = true;
    CHECK(any_difference);
}
