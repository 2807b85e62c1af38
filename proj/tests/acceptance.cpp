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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cases.hpp"
#include "oracle.hpp"
#include "sqb/bosonic.hpp"
#include "sqb/measures.hpp"
#include "sqb/partitions.hpp"
#include "sqb/squash.hpp"

using namespace sqb;

namespace {

// Collects the first few failures of a criterion for the report line.
struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  double worst = 0.0;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (notes.size() < 3) notes.push_back(what);
  }
  // |a - b| <= tol, tracking the largest deviation seen.
  void near(double a, double b, double tol, const std::string& what) {
    const double d = std::abs(a - b);
    worst = std::max(worst, d);
    std::ostringstream s;
    s << what << ": " << a << " vs " << b;
    expect(d <= tol, s.str());
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    std::ostringstream s;
    s << "runtime " << secs << " s over the " << limit_s << " s limit";
    c.expect(false, s.str());
  }
  if (!c.ok) ++failures;
  std::printf("%s %2d  %-44s %8.2fs  max dev %.2e", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs, c.worst);
  for (const auto& n : c.notes) std::printf("  [%s]", n.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

Labels names(const std::string& prefix, int n) {
  Labels out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Random total dimension <= 32 split over 4 or 5 systems of size 2 or 3.
MultipartiteState random_state_dim32(Rng& rng, int systems) {
  for (;;) {
    Dims dims;
    long total = 1;
    for (int i = 0; i < systems; ++i) {
      dims.push_back(2 + static_cast<int>(rng() % 2));
      total *= dims.back();
    }
    if (total > 32) continue;
    return random_mixed_state(rng, names("S", systems), dims);
  }
}

std::string run_cli(const std::string& args, int& code) {
  const std::string cmd = std::string(SQB_CLI) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    code = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

}  // namespace

int main() {
  criterion(1, "GHZ values (m/2) log2 d", 1.0, [](Check& c) {
    for (auto [m, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 2}}) {
      const auto labels = names("P", m);
      const auto ghz = make_ghz(labels, d);
      const auto g = complete_partition(make_set(labels));
      for (auto meas : {Measure::esq, Measure::esq_tilde})
        c.near(esq_exact_pure(ghz, g, meas), 0.5 * m * std::log2(d),
               1e-9, "m=" + std::to_string(m) + " d=" + std::to_string(d));
    }
  });

  criterion(2, "measure identities, 200 random states", 30.0, [](Check& c) {
    Rng rng = make_rng(2002);
    for (int t = 0; t < 200; ++t) {
      const auto rho = random_state_dim32(rng, t % 2 ? 4 : 5);
      const auto& l = rho.labels();
      const Labels a{l[0]}, b{l[1]}, e{l[2]};

      // Strong subadditivity.
      const double sa = qcmi(rho, a, b, e);
      c.worst = std::max(c.worst, std::max(0.0, -sa));
      c.expect(sa >= -1e-9, "strong subadditivity");
      c.near(sa, oracle::qcmi(rho, a, b, e), 1e-9, "qcmi vs oracle");

      // I~ as the sum of qcmi terms minus I, and its conditional form.
      const Labels cond{l.back()};
      std::vector<Labels> blocks;
      for (std::size_t i = 0; i + 1 < l.size(); ++i) blocks.push_back({l[i]});
      const BlockSpec spec{blocks, cond};
      const auto ci = conditional_informations(rho, spec);
      double sum = 0.0;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        Labels rest;
        for (std::size_t j = 0; j < blocks.size(); ++j)
          if (j != i) rest.push_back(blocks[j][0]);
        sum += qcmi(rho, blocks[i], rest, cond);
      }
      c.near(ci.total + ci.dual, sum, 1e-9, "I + I~ = sum of qcmi");
      c.near(ci.dual, cmi_dual_measure_conditional_form(rho, spec), 1e-9, "I~ conditional form");
      const std::vector<std::vector<std::string>> oblocks(blocks.begin(), blocks.end());
      c.near(ci.total, oracle::total(rho, oblocks, cond), 1e-9, "I vs oracle");
      c.near(ci.dual, oracle::dual(rho, oblocks, cond), 1e-9, "I~ vs oracle");

      // Chain rules with B = l[0], A_i = l[1..n-2], E = l[n-1]:
      //   I(B A1; A2; ...; Am | E) = I(A1; ...; Am | B E) + sum_{i>=2} I(B; A_i | E)
      //   I~(B A1; A2; ...; Am | E) = I~(A1; ...; Am | B E) + I(B; A2...Am | E)
      std::vector<Labels> joined{{l[0], l[1]}}, split;
      Labels tail;
      double pair_sum = 0.0;
      for (std::size_t i = 1; i + 1 < l.size(); ++i) {
        split.push_back({l[i]});
        if (i == 1) continue;
        joined.push_back({l[i]});
        tail.push_back(l[i]);
        pair_sum += qcmi(rho, Labels{l[0]}, Labels{l[i]}, cond);
      }
      const BlockSpec lhs{joined, cond}, inner{split, Labels{l[0], l.back()}};
      c.near(cmi_total(rho, lhs), cmi_total(rho, inner) + pair_sum, 1e-9, "I chain");
      c.near(cmi_dual_measure(rho, lhs), cmi_dual_measure(rho, inner) + qcmi(rho, Labels{l[0]}, tail, cond), 1e-9,
             "I~ chain");

      // Pure-state duality: with psi on A B E D, I(A;B|E) = I(A;B|D).
      const auto psi = purify(partial_trace(rho, Labels{l[0], l[1], l[2]}), "D");
      c.near(qcmi(psi, a, b, e), qcmi(psi, a, b, Labels{"D"}), 1e-9, "pure duality");
    }
  });

  criterion(3, "grouping identity, 100 random states", 10.0, [](Check& c) {
    Rng rng = make_rng(3003);
    for (int t = 0; t < 100; ++t) {
      const int m = 3 + t % 2;
      const auto rho = random_mixed_state(rng, names("A", m + 1), Dims(m + 1, 2));
      const auto& l = rho.labels();
      const Labels e{l.back()};
      std::vector<Labels> fine, coarse{{l[0], l[1]}};
      for (int i = 0; i < m; ++i) fine.push_back({l[i]});
      for (int i = 2; i < m; ++i) coarse.push_back({l[i]});
      const double lhs = cmi_total(rho, BlockSpec{fine, e}) - cmi_total(rho, BlockSpec{coarse, e});
      c.near(lhs, qcmi(rho, Labels{l[0]}, Labels{l[1]}, e), 1e-9, "grouping");
    }
  });

  criterion(4, "subadditivity slack, 500 instances", 60.0, [](Check& c) {
    Rng rng = make_rng(4004);
    for (int t = 0; t < 500; ++t) {
      const auto s = cases::subadditivity_slack(rng, 1 + t % 2);
      c.worst = std::max(c.worst, std::max(0.0, -std::min(s.total, s.dual)));
      c.expect(s.total >= -1e-8, "I slack " + std::to_string(s.total));
      c.expect(s.dual >= -1e-8, "I~ slack " + std::to_string(s.dual));
    }
  });

  criterion(5, "partition machinery", 0.0, [](Check& c) {
    auto as_sets = [](const std::vector<LabelSet>& v) {
      std::set<std::set<std::string>> out;
      for (const auto& s : v) out.insert({s.begin(), s.end()});
      return out;
    };
    using Sets = std::set<std::set<std::string>>;
    const auto g1 = Partition::parse("A|B,C");
    c.expect(as_sets(c_of(g1)) == Sets{{"A", "B"}, {"A", "C"}, {"A", "B", "C"}}, "C(G1)");
    c.expect(as_sets(c_of(g1)) == oracle::c_of({{"A"}, {"B", "C"}}), "C(G1) vs brute force");
    const auto g4 = Partition::parse("A|B|C");
    c.expect(as_sets(a_of(make_set({"A", "B"}), g4)) == Sets{{"A"}, {"B"}}, "A(AB,G4)");
    c.expect(as_sets(a_of(make_set({"A", "C"}), g4)) == Sets{{"A"}, {"C"}}, "A(AC,G4)");
    c.expect(as_sets(a_of(make_set({"B", "C"}), g4)) == Sets{{"B"}, {"C"}}, "A(BC,G4)");
    c.expect(as_sets(a_of(make_set({"A", "B", "C"}), g4)) == Sets{{"A"}, {"B"}, {"C"}}, "A(ABC,G4)");
    const auto cc = constraint_coefficients(g4);
    c.expect(cc.terms.at(make_set({"A", "B", "C"})) == 3, "coefficient 3 on ABC");
    c.near(0.5 * cc.terms.at(make_set({"A", "B", "C"})), 1.5, 0.0, "ABC weight");
    for (const char* pair : {"A,B", "A,C", "B,C"}) {
      const auto p = Partition::parse(std::string(pair) + "|X").blocks()[0];
      c.expect(cc.terms.at(p) == 2, std::string("coefficient 2 on ") + pair);
    }
  });

  criterion(6, "GHZ products: coefficient formula", 0.0, [](Check& c) {
    Rng rng = make_rng(6006);
    const auto parties = make_set({"A", "B", "C"});
    for (int t = 0; t < 20; ++t) {
      const auto g = cases::random_ghz_product(rng);
      for (const auto& p : nontrivial_partitions(parties)) {
        const auto lifted = lift_partition(p, g.holdings);
        for (auto m : {Measure::esq, Measure::esq_tilde})
          c.near(esq_exact_pure(g.state, lifted, m), cases::ghz_formula(g, p), 1e-9, p.to_string());
      }
    }
  });

  criterion(7, "bosonic regression", 0.0, [](Check& c) {
    const auto r = bosonic::theorem3_report(0.25, 0.25);
    c.near(r.bound_b_cut, 1.0, 1e-9, "B cut");
    c.near(r.bound_bc_cut, std::log2(3.0), 1e-9, "BC cut");
    c.near(r.eta_star, 4.0 / 7.0, 1e-9, "eta_star");
    // Grid oracle: the tripartite bound minimised over 10^4 squashing transmissivities.
    const auto grid = oracle::grid_min(
        [](double x) { return oracle::asym2(0.25, 0.25, x); }, 10000);
    const double gv = grid.second;
    c.near(r.tripartite_bound, gv, 1e-3, "tripartite vs grid");
    c.near(r.tripartite_bound, 1.7754, 1e-3, "tripartite");
    for (int i = 1; i <= 10; ++i) {
      const double eb = i / 11.0;
      c.near(bosonic::theorem3_report(eb, 0.0).bound_b_cut, std::log2((1 + eb) / (1 - eb)), 1e-12, "eta_c = 0");
    }
  });

  criterion(8, "finite N_S monotone convergence", 0.0, [](Check& c) {
    for (auto m : {Measure::esq, Measure::esq_tilde}) {
      double prev = -1;
      for (double ns : {1.0, 10.0, 1e3, 1e6}) {
        const double v = bosonic::finite_ns_bound<double>({0.25, 0.25}, 0.5, ns, 0.5, m);
        c.expect(v > prev, "not increasing at N_S=" + std::to_string(ns));
        prev = v;
      }
      const double asym = bosonic::asymptotic_bound<double>({0.25, 0.25}, 0.5, 0.5, m);
      c.near(prev, asym, 1e-3, "gap at N_S=1e6");
      c.expect(prev <= asym + 1e-12, "finite value above the limit");
    }
  });

  criterion(9, "variational sanity, default config", 300.0, [](Check& c) {
    Rng rng = make_rng(9009);
    const SquashConfig config;
    for (int t = 0; t < 10; ++t) {
      const Dims dims = t % 2 ? Dims{2, 2, 2} : Dims{2, 2, 4};
      const auto psi = random_pure_state(rng, {"A", "B", "C"}, dims);
      const auto g = Partition::parse(t % 3 ? "A|B|C" : "A|B,C");
      for (auto m : {Measure::esq, Measure::esq_tilde})
        c.near(esq_upper_variational(psi, g, m, config).value_bits, esq_exact_pure(psi, g, m), 1e-6, "pure");
    }
    const auto gamma = cases::correlated_shield_private_state();
    const double key = 0.5 * 2 * std::log2(2.0);
    const double v = esq_upper_variational(gamma, Partition({{"A", "a"}, {"B", "b"}}), Measure::esq, config).value_bits;
    c.expect(v >= key - 1e-9, "private state below its key");
    c.near(v, key, 1e-3, "private state");
  });

  criterion(10, "bounds-finite determinism", 0.0, [](Check& c) {
    const std::string args =
        "bounds-finite " + std::string(SQB_TEST_DATA) + "/copy_channel.json --seed 42 --format json";
    int code1 = 0, code2 = 0;
    const auto a = run_cli(args, code1);
    const auto b = run_cli(args, code2);
    c.expect(code1 == 0 && code2 == 0, "non-zero exit");
    c.expect(!a.empty() && a == b, "outputs differ");
    const auto j = nlohmann::json::parse(a);
    bool found = false;
    for (const auto& rc : j.at("constraints")) {
      if (rc.at("partition") != "B,C|R") continue;
      found = true;
      c.expect(rc.at("bound_bits").get<double>() >= 1.0 - 1e-6, "R|BC bound below 1");
    }
    c.expect(found, "R|BC constraint missing");
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
