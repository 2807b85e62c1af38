// Copyright 2026 The sqbound Authors
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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "sqb/errors.hpp"
#include "sqb/io.hpp"
#include "sqb/random.hpp"

using namespace sqb;
using io::Json;

TEST_CASE("number formatting") {
  CHECK(io::format_number(1.0) == "1");
  CHECK(io::format_number(0.1) == "0.1");
  CHECK(io::format_number(std::log2(3.0)) == "1.58496250072");
  CHECK(io::format_number(-0.0) == "0");
  CHECK(io::format_number(1e-20) == "1e-20");
  CHECK(io::format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(io::format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK_THROWS_AS(io::format_number(std::nan("")), DomainError);
  CHECK(io::json_number(std::numeric_limits<double>::infinity()) == Json("inf"));
  CHECK(io::json_number(4.0 / 7.0).get<double>() == 0.571428571429);
}

TEST_CASE("csv lines") {
  CHECK(io::csv_line({"a", "b"}) == "a,b");
  CHECK(io::csv_line({"A,B:1", "x"}) == "\"A,B:1\",x");
  CHECK(io::csv_line({"say \"hi\""}) == "\"say \"\"hi\"\"\"");
}

TEST_CASE("state JSON round trip") {
  Rng rng = make_rng(1);
  const auto rho = random_mixed_state(rng, {"A", "B"}, {2, 3});
  const auto back = io::state_from_json(io::state_to_json(rho));
  CHECK(back.labels() == rho.labels());
  CHECK(back.dims() == rho.dims());
  CHECK((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-15);

  const auto parsed = io::state_from_json(Json::parse(R"({"labels":["A"],"dims":[2],"matrix":[[0.5,0],[0,[0.5,0]]]})"));
  CHECK(std::abs(parsed.matrix()(1, 1).real() - 0.5) < 1e-15);

  CHECK_THROWS_AS(io::state_from_json(Json::parse(R"({"labels":["A"],"dims":[2]})")), ParseError);
  CHECK_THROWS_AS(io::state_from_json(Json::parse(R"({"labels":"A","dims":[2],"matrix":[[1]]})")), ParseError);
  CHECK_THROWS_AS(io::state_from_json(Json::parse(R"({"labels":["A"],"dims":[2],"matrix":[[1,0],[0]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::state_from_json(Json::parse(R"({"labels":["A"],"dims":[2],"matrix":[[1,0],[0,"x"]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::state_from_json(Json::parse(R"({"labels":["A"],"dims":[2],"matrix":[[0.6,0],[0,0.6]]})")),
                  InvalidState);
  CHECK_THROWS_AS(io::state_from_json(Json::parse(R"({"labels":["A"],"dims":[3],"matrix":[[0.5,0],[0,0.5]]})")),
                  DimMismatch);
}

TEST_CASE("channel JSON round trip") {
  Rng rng = make_rng(2);
  const auto ch = random_channel(rng, 2, {"B", "C"}, {2, 2}, 3);
  const auto back = io::channel_from_json(io::channel_to_json(ch));
  CHECK(back.output_labels() == ch.output_labels());
  CHECK(back.kraus().size() == 3);
  for (std::size_t k = 0; k < 3; ++k) CHECK((back.kraus()[k] - ch.kraus()[k]).cwiseAbs().maxCoeff() < 1e-15);

  auto j = io::channel_to_json(ch);
  j["kraus"].erase(0);
  CHECK_THROWS_AS(io::channel_from_json(j), InvalidChannel);
  CHECK_THROWS_AS(io::channel_from_json(Json::parse(R"({"input_dim":2})")), ParseError);
}

TEST_CASE("files") {
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/state.json"), ParseError);
  CHECK_THROWS_AS(io::load_state(std::string(SQB_TEST_DATA) + "/malformed.json"), ParseError);
  const auto ghz = io::load_state(std::string(SQB_TEST_DATA) + "/ghz3.json");
  CHECK(ghz.labels() == Labels{"A", "B", "C"});
  CHECK(ghz.is_pure());
  CHECK_THROWS_AS(io::load_channel(std::string(SQB_TEST_DATA) + "/not_cptp.json"), InvalidChannel);
}

TEST_CASE("bosonic records") {
  const auto r = bosonic::theorem3_report(0.25, 0.25, 10.0);
  const auto header = io::bosonic_csv_header(true);
  const auto row = io::bosonic_csv_row(r);
  CHECK(header.size() == row.size());
  CHECK(std::vector<std::string>(header.begin(), header.begin() + 8) ==
        std::vector<std::string>{"eta_b", "eta_c", "bound_b_cut", "bound_c_cut", "bound_bc_cut", "tripartite_bound",
                                 "tripartite_bound_as_printed", "eta_star"});
  CHECK(row[2] == "1");
  CHECK(row[7] == "0.571428571429");
  const auto inf = io::bosonic_csv_row(bosonic::theorem3_report(0.5, 0.5));
  CHECK(inf[2] == "inf");
  CHECK(io::to_json(r)["finite_ns"]["ns"].get<double>() == 10.0);
}
