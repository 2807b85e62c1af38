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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run sqbound(const std::string& args, bool with_stderr = false) {
  const std::string cmd = std::string(SQB_CLI) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(SQB_TEST_DATA) + "/" + name; }

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (c == '"') {
        if (quoted && i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = !quoted;
        }
      } else if (c == ',' && !quoted) {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += c;
      }
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

bool numeric_or_inf(const std::string& s) {
  if (s == "inf" || s == "-inf") return true;
  if (s.find("nan") != std::string::npos || s.find("NaN") != std::string::npos) return false;
  try {
    std::size_t pos = 0;
    std::stod(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

}  // namespace

TEST_CASE("bounds-bosonic row") {
  const auto r = sqbound("bounds-bosonic --eta-b 0.25 --eta-c 0.25");
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][2] == "bound_b_cut");
  CHECK(std::stod(rows[1][2]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::stod(rows[1][4]) == doctest::Approx(1.58496).epsilon(1e-5));
  CHECK(std::stod(rows[1][7]) == doctest::Approx(0.571428).epsilon(1e-6));
}

TEST_CASE("bounds-bosonic JSON and finite N_S") {
  const auto r = sqbound("bounds-bosonic --eta-b 0.25 --eta-c 0.25 --ns 100 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["metadata"]["command"] == "bounds-bosonic");
  CHECK(j["metadata"].contains("version"));
  CHECK(j["results"][0]["finite_ns"]["bound_b_cut"].get<double>() < 1.0);
}

TEST_CASE("sweep: sorted rows, numbers or inf only") {
  const auto r = sqbound("sweep --sweep-steps 4 --ns 3");
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 1 + 15);  // pairs (i, j) with i + j <= 4
  bool saw_inf = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].size() == rows[0].size());
    for (const auto& cell : rows[i]) {
      CHECK(numeric_or_inf(cell));
      saw_inf = saw_inf || cell == "inf";
    }
    if (i > 1) {
      const double b0 = std::stod(rows[i - 1][0]), c0 = std::stod(rows[i - 1][1]);
      const double b1 = std::stod(rows[i][0]), c1 = std::stod(rows[i][1]);
      CHECK((b0 < b1 || (b0 == b1 && c0 < c1)));
    }
  }
  CHECK(saw_inf);
  const auto line = sqbound("sweep --sweep-steps 5 --eta-c 0.25");
  CHECK(csv(line.out).size() == 1 + 4);  // eta_b in {0, .2, .4, .6}
}

TEST_CASE("esq on GHZ") {
  const auto r = sqbound("esq " + data("ghz3.json") + " --partition \"A|B|C\" --measure both --seed 7");
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][1] == "esq");
  CHECK(rows[1][2] == "1.5");
  CHECK(rows[2][1] == "esq-tilde");
  CHECK(rows[2][2] == "1.5");

  const auto m = sqbound("esq " + data("ghz3.json") + " --partition \"A|B|C\" --measure min --format json");
  CHECK(m.code == 0);
  CHECK(nlohmann::json::parse(m.out)["min_bits"].get<double>() == 1.5);
}

TEST_CASE("esq on a mixed state") {
  const auto r = sqbound("esq " + data("classical_corr.json") +
                         " --partition \"A|B\" --measure esq --restarts 2 --max-iters 300");
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(rows[1][2]) <= 0.25);
}

TEST_CASE("qinfo") {
  const auto r = sqbound("qinfo " + data("ghz3.json") + " --partition \"A|B\" --cond C");
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  bool found = false;
  for (const auto& row : rows)
    if (row[0] == "cmi_total") {
      found = true;
      CHECK(std::stod(row[2]) == doctest::Approx(1.0).epsilon(1e-12));
    }
  CHECK(found);
}

TEST_CASE("bounds-finite determinism and the copy channel") {
  const std::string args = "bounds-finite " + data("copy_channel.json") + " --seed 11 --restarts 2 --format json";
  const auto a = sqbound(args);
  const auto b = sqbound(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["metadata"].contains("note"));
  bool found = false;
  for (const auto& c : j["constraints"])
    if (c["partition"] == "B,C|R") {
      found = true;
      CHECK(c["bound_bits"].get<double>() >= 1.0 - 1e-6);
    }
  CHECK(found);

  const auto two = sqbound("bounds-finite " + data("copy_channel.json") + " --two-receiver");
  CHECK(two.code == 0);
  const auto rows = csv(two.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[1][0] == "AC cut B");
  CHECK(rows[4][0] == "ABC");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(numeric_or_inf(rows[i][3]));
}

TEST_CASE("output file") {
  const std::string path = std::string(SQB_TEST_TMP) + "/cli_out.csv";
  const auto r = sqbound("bounds-bosonic --eta-b 0.1 --eta-c 0.2 -o " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  fclose(f);
}

TEST_CASE("validation errors exit with code 2 and name the problem") {
  auto expect2 = [](const std::string& args, const std::string& needle) {
    const auto r = sqbound(args, true);
    CHECK(r.code == 2);
    CHECK_MESSAGE(r.out.find(needle) != std::string::npos, r.out);
  };
  expect2("bounds-finite " + data("not_cptp.json"), "trace preserving");
  expect2("esq " + data("bad_trace.json") + " --partition \"A|B\"", "trace");
  expect2("esq " + data("malformed.json") + " --partition \"A|B\"", "malformed JSON");
  expect2("esq " + data("ghz3.json") + " --partition \"A|B\"", "does not cover");
  expect2("esq " + data("ghz3.json") + " --partition \"A|B|C\" --measure foo", "measure");
  expect2("bounds-bosonic --eta-b 0.25", "eta-c");
  expect2("bounds-bosonic --eta-b 1.5 --eta-c 0", "eta-b");
  expect2("bounds-bosonic --eta-b 0.2 --eta-c 0.2 --bogus 1", "bogus");
  expect2("sweep --sweep-steps 0", "sweep-steps");
  expect2("", "");
}

TEST_CASE("selftest") {
  const auto r = sqbound("selftest");
  CHECK(r.code == 0);
  CHECK(r.out.find("selftest passed") != std::string::npos);
}
