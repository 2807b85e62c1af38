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

#include "sqb/selftest.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "sqb/bosonic.hpp"
#include "sqb/measures.hpp"
#include "sqb/partitions.hpp"
#include "sqb/random.hpp"
#include "sqb/squash.hpp"
#include "sqb/state.hpp"

namespace sqb {

namespace {

struct Check {
  std::string name;
  std::function<bool()> run;
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::vector<Check> checks(std::uint64_t seed) {
  std::vector<Check> c;

  c.push_back({"states: purify then trace out recovers the state", [seed] {
                 Rng rng = make_rng(seed, 1);
                 for (int t = 0; t < 10; ++t) {
                   const auto rho = random_mixed_state(rng, {"A", "B"}, {2, 2});
                   const auto back = partial_trace(purify(rho, "E"), rho.labels());
                   if ((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff() > 1e-9) return false;
                 }
                 return true;
               }});

  c.push_back({"states: private-state construction passes the check", [seed] {
                 Rng rng = make_rng(seed, 2);
                 PrivateStateSpec spec;
                 spec.num_parties = 2;
                 spec.key_dim = 2;
                 spec.shield_dims = {2, 2};
                 for (int k = 0; k < 4; ++k) spec.twist_unitaries.push_back(random_unitary(rng, 4));
                 const auto gamma = make_private_state(spec, {"A", "B"}, {"a", "b"});
                 return check_private_state(gamma, {"A", "B"}, {"a", "b"}, 2).is_private;
               }});

  c.push_back({"measures: I + I~ equals the sum of qcmi terms", [seed] {
                 Rng rng = make_rng(seed, 3);
                 for (int t = 0; t < 10; ++t) {
                   const auto rho = random_mixed_state(rng, {"A", "B", "C", "E"}, {2, 2, 2, 2});
                   const BlockSpec spec{{{"A"}, {"B"}, {"C"}}, {"E"}};
                   const auto ci = conditional_informations(rho, spec);
                   const Labels e{"E"};
                   double sum = 0.0;
                   sum += qcmi(rho, Labels{"A"}, Labels{"B", "C"}, e);
                   sum += qcmi(rho, Labels{"B"}, Labels{"A", "C"}, e);
                   sum += qcmi(rho, Labels{"C"}, Labels{"A", "B"}, e);
                   if (!near(ci.total + ci.dual, sum, 1e-9)) return false;
                 }
                 return true;
               }});

  c.push_back({"measures: strong subadditivity", [seed] {
                 Rng rng = make_rng(seed, 4);
                 for (int t = 0; t < 10; ++t) {
                   const auto rho = random_mixed_state(rng, {"A", "B", "E"}, {2, 2, 2});
                   if (qcmi(rho, Labels{"A"}, Labels{"B"}, Labels{"E"}) < -1e-9) return false;
                 }
                 return true;
               }});

  c.push_back({"partitions: Bell numbers and subset counts", [] {
                 const LabelSet four = make_set({"A", "B", "C", "D"});
                 return nontrivial_partitions(four).size() == 14 && subsets_geq2(four).size() == 11 &&
                        nontrivial_partitions(make_set({"A", "B", "C"})).size() == 4;
               }});

  c.push_back({"partitions: complete tripartition coefficients", [] {
                 const auto cc = constraint_coefficients(Partition::parse("A|B|C"));
                 return cc.terms.size() == 4 && cc.terms.at(make_set({"A", "B", "C"})) == 3 &&
                        cc.terms.at(make_set({"A", "B"})) == 2;
               }});

  c.push_back({"squash: GHZ values (m/2) log2 d", [] {
                 const auto ghz = make_ghz({"A", "B", "C"}, 2);
                 const auto g = Partition::parse("A|B|C");
                 return near(esq_exact_pure(ghz, g, Measure::esq), 1.5, 1e-9) &&
                        near(esq_exact_pure(ghz, g, Measure::esq_tilde), 1.5, 1e-9);
               }});

  c.push_back({"squash: variational value never exceeds the unsquashed one", [seed] {
                 Rng rng = make_rng(seed, 5);
                 const auto rho = random_mixed_state(rng, {"A", "B"}, {2, 2}, 2);
                 SquashConfig cfg;
                 cfg.restarts = 2;
                 cfg.max_iters = 300;
                 cfg.seed = seed;
                 const double plain = 0.5 * qcmi(rho, Labels{"A"}, Labels{"B"}, Labels{});
                 return esq_upper_variational(rho, Partition::parse("A|B"), Measure::esq, cfg).value_bits <=
                        plain + 1e-9;
               }});

  c.push_back({"bosonic: two-receiver regression at eta_b = eta_c = 1/4", [] {
                 const auto r = bosonic::theorem3_report(0.25, 0.25);
                 return near(r.bound_b_cut, 1.0, 1e-9) && near(r.bound_bc_cut, std::log2(3.0), 1e-9) &&
                        near(r.eta_star, 4.0 / 7.0, 1e-9) && r.tripartite_bound <= r.tripartite_bound_as_printed;
               }});

  c.push_back({"bosonic: finite N_S increases towards the asymptotic bound", [] {
                 const std::vector<double> etas{0.25, 0.25};
                 double prev = -1.0;
                 for (double ns : {1.0, 10.0, 1e3, 1e6}) {
                   const double v = bosonic::finite_ns_bound(etas, 0.5, ns, 0.5, Measure::esq);
                   if (v < prev) return false;
                   prev = v;
                 }
                 return std::abs(bosonic::asymptotic_bound(etas, 0.5, 0.5, Measure::esq) - prev) < 1e-3;
               }});

  return c;
}

}  // namespace

bool run_selftest(std::ostream& out, std::uint64_t seed) {
  bool all = true;
  for (const auto& check : checks(seed)) {
    bool ok = false;
    try {
      ok = check.run();
    } catch (const std::exception& e) {
      out << "error " << check.name << ": " << e.what() << '\n';
    }
    out << (ok ? "ok   " : "FAIL ") << check.name << '\n';
    all = all && ok;
  }
  out << (all ? "selftest passed" : "selftest FAILED") << '\n';
  return all;
}

}  // namespace sqb
