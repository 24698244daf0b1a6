// Acceptance run: one PASS/FAIL line per criterion, followed by the
// sub-checks that failed. Exit status 1 when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "mres.hpp"
#include "oracles.hpp"

using namespace mres;

namespace {

struct Verdict {
  bool passed = true;
  std::string summary;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (failures.size() < 12) failures.push_back(what);
    }
  }
};

std::vector<NamedIdeal> corpus() {
  auto out = named_ideals();
  std::size_t i = 0;
  for (auto& ideal : catalog::random_corpus(20240601, 50)) {
    out.push_back({"random #" + std::to_string(i++), std::move(ideal), {}});
  }
  return out;
}

Multiplication transferred(const MinimalResolution& res) {
  return transfer_multiplication(taylor_multiplication(res.taylor), res.complex, res.transfer);
}

Verdict from_report(const ExampleReport& rep) {
  Verdict v;
  std::size_t passed = 0;
  for (const auto& c : rep.checks) {
    v.require(c.passed, c.label + (c.detail.empty() ? "" : "  [" + c.detail + "]"));
    passed += c.passed;
  }
  v.summary = std::to_string(passed) + "/" + std::to_string(rep.checks.size()) + " checks";
  return v;
}

std::vector<Scalar> random_point(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<long> num(-7, 7), den(1, 5);
  std::vector<Scalar> lambda(dim);
  for (auto& x : lambda) {
    x = Scalar(num(rng), den(rng));
    x.canonicalize();
  }
  return lambda;
}

Verdict betti_reproduction() {
  Verdict v;
  const auto ideal = catalog::cycle_six().ideal;
  const auto totals = betti_table(ideal).totals();
  v.require(totals == std::vector<std::size_t>{1, 6, 9, 6, 2}, "totals are " + to_string(FVector(totals)));
  v.require(oracle::tor_betti(ideal).totals() == totals, "Tor oracle disagrees");
  v.summary = "totals " + to_string(FVector(totals));
  return v;
}

Verdict taylor_axioms(const std::vector<NamedIdeal>& ideals) {
  Verdict v;
  for (const auto& n : ideals) {
    const auto r = check_dga_axioms(taylor_multiplication(n.ideal));
    v.require(r.all(), n.name + ": " + (r.failures.empty() ? "" : r.failures.front()));
  }
  v.summary = std::to_string(ideals.size()) + " ideals, five axioms each";
  return v;
}

Verdict minimal_resolutions(const std::vector<NamedIdeal>& ideals) {
  Verdict v;
  std::size_t generic = 0;
  for (const auto& n : ideals) {
    const auto t = taylor_complex(n.ideal);
    const auto [m, tr] = minimize(t, PivotOrder::forward);
    const auto [m2, tr2] = minimize(t, PivotOrder::reverse);
    v.require(is_resolution(m, n.ideal), n.name + ": not a resolution");
    v.require(is_minimal(m), n.name + ": not minimal");
    v.require(m.ranks() == m2.ranks(), n.name + ": pivot orders disagree on ranks");
    const auto b = betti_table(m);
    const auto delta = scarf_complex(n.ideal);
    for (auto w : delta.faces()) {
      v.require(b.at(popcount(w), n.ideal.lcm_of(w)) >= 1, n.name + ": Scarf face " + subset_name(w) + " has no Betti number");
    }
    if (is_strongly_generic(n.ideal)) {
      ++generic;
      v.require(is_resolution(algebraic_scarf(n.ideal), n.ideal),
                n.name + ": strongly generic but the algebraic Scarf complex does not resolve");
      v.require(FVector(m.ranks()) == f_vector(delta), n.name + ": ranks differ from Scarf face counts");
    }
  }
  v.summary = std::to_string(ideals.size()) + " ideals, " + std::to_string(generic) + " strongly generic";
  return v;
}

Verdict scarf_invariance(const std::vector<NamedIdeal>& ideals) {
  Verdict v;
  std::mt19937_64 rng(31);
  std::size_t count = 0, points = 0;
  for (const auto& n : ideals) {
    if (!n.ideal.is_squarefree()) continue;
    ++count;
    const auto res = minimal_resolution(n.ideal);
    const auto particular = transferred(res);
    const auto sp = leibniz_solution_space(res.complex, &particular);
    std::vector<Multiplication> samples{sp.point(std::vector<Scalar>(sp.dimension()))};
    for (int i = 0; i < 4; ++i) samples.push_back(sp.point(random_point(rng, sp.dimension())));
    const auto delta = scarf_complex(n.ideal);
    const auto& c = *res.complex;
    for (const auto& m : samples) {
      ++points;
      const auto r = scarf_product_check(n.ideal, m);
      v.require(r.passed, n.name + ": " + (r.witnesses.empty() ? "" : r.witnesses.front()));
      for (auto w : delta.faces()) {
        for (auto u : delta.faces()) {
          if (w == 0 || u == 0 || !delta.contains(w | u)) continue;
          const auto g = c.id_of_label(w), h = c.id_of_label(u);
          v.require(m.product(g, h) == samples.front().product(g, h),
                    n.name + ": " + c.name(g) + " * " + c.name(h) + " varies across samples");
        }
      }
    }
  }
  v.summary = std::to_string(count) + " squarefree ideals, " + std::to_string(points) + " sampled points";
  return v;
}

Verdict scaled(const std::vector<NamedIdeal>& ideals) {
  Verdict v;
  for (const auto& n : ideals) {
    const auto c = scaled_dga_check(n);
    v.require(c.passed, c.label + "  [" + c.detail + "]");
  }
  v.summary = std::to_string(ideals.size()) + " ideals, including the path ideal";
  return v;
}

Verdict cone_pipelines() {
  Verdict v;
  std::mt19937_64 rng(4242);
  std::vector<SimplicialComplex> cones{catalog::cone_over_path3()};
  for (int i = 0; i < 20; ++i) cones.push_back(catalog::random_cone(rng, 6));
  for (const auto& delta : cones) {
    const auto p = cone_pipeline(delta);
    v.require(p.passed(), to_string(f_vector(delta)) + ": " + (p.witnesses.empty() ? "failed" : p.witnesses.front()));
  }
  v.require(!is_cone_fvector({1, 6, 9, 6, 2}), "(1,6,9,6,2) accepted as a cone f-vector");
  v.require(is_cone_fvector({1, 4, 5, 2}), "(1,4,5,2) rejected as a cone f-vector");
  v.summary = std::to_string(cones.size()) + " cones";
  return v;
}

Verdict subadditivity(const std::vector<NamedIdeal>& ideals) {
  Verdict v;
  std::size_t first = 0;
  for (const auto& ideal : catalog::random_corpus(777, 100)) {
    const auto t = t_vector(betti_table(ideal));
    const auto r = check_subadditivity(t, SubadditivityMode::first_step);
    v.require(r.passed, "first step fails on " + format_ideal(ideal));
    ++first;
  }
  // Associative minimal DGA resolutions: a transferred product or a sampled
  // point that is associative, and the scaled resolution of sI.
  std::size_t with_assoc = 0, without = 0;
  for (const auto& n : ideals) {
    const auto res = minimal_resolution(n.ideal);
    const auto particular = transferred(res);
    bool assoc = check_dga_axioms(particular).associativity;
    if (!assoc) {
      const auto sp = leibniz_solution_space(res.complex, &particular);
      assoc = associativity_scan(sp, 4, 5).found_associative();
    }
    if (assoc) {
      ++with_assoc;
      const auto r = check_subadditivity(t_vector(betti_table(*res.complex)), SubadditivityMode::all);
      v.require(r.passed, n.name + ": subadditivity fails");
    } else {
      ++without;
    }
    const auto s = scaled_dga(n.ideal);
    if (check_dga_axioms(s.multiplication).all()) {
      const auto r = check_subadditivity(t_vector(betti_table(*s.complex)), SubadditivityMode::all);
      v.require(r.passed, n.name + " scaled: subadditivity fails");
    }
  }
  std::mt19937_64 rng(99);
  std::size_t cones = 0;
  for (int i = 0; i < 10; ++i) {
    const auto p = cone_pipeline(catalog::random_cone(rng, 6));
    if (!p.passed()) continue;
    ++cones;
    v.require(check_subadditivity(t_vector(betti_table(*p.quotient->complex)), SubadditivityMode::all).passed,
              "cone pipeline: subadditivity fails");
  }
  v.summary = std::to_string(first) + " ideals (first step); " + std::to_string(with_assoc) + " of " +
              std::to_string(ideals.size()) + " corpus ideals with an associative product, their scaled versions and " +
              std::to_string(cones) + " pipeline cones (all steps)";
  return v;
}

Verdict supportive_suite(const std::vector<NamedIdeal>& ideals) {
  Verdict v;
  std::mt19937_64 rng(63);
  std::size_t relabeled = 0;
  for (const auto& n : ideals) {
    v.require(is_supportive(taylor_multiplication(n.ideal)), n.name + ": Taylor product not supportive");
    if (n.ideal.is_squarefree()) {
      const auto res = minimal_resolution(n.ideal);
      const auto particular = transferred(res);
      const auto sp = leibniz_solution_space(res.complex, &particular);
      v.require(is_supportive(particular), n.name + ": transferred product not supportive");
      for (int i = 0; i < 3; ++i) {
        const auto r = check_supportive(sp.point(random_point(rng, sp.dimension())));
        v.require(r.passed, n.name + ": sampled product not supportive: " + (r.witnesses.empty() ? "" : r.witnesses.front()));
      }
    } else {
      const auto pol = polarize(n.ideal);
      const auto res = minimal_resolution(pol.ideal);
      const auto [c, m] = relabel(transferred(res), generator_lattice_map(pol.ideal, n.ideal), n.ideal);
      v.require(is_resolution(*c, n.ideal), n.name + ": relabeled complex does not resolve");
      v.require(is_minimal(*c), n.name + ": relabeled complex not minimal");
      v.require(is_supportive(m), n.name + ": relabeled product not supportive");
      v.require(check_dga_axioms(m, {.associativity = false}).all_but_associativity(),
                n.name + ": relabeled product breaks an axiom");
      ++relabeled;
    }
  }
  const auto twin = from_report(run_example("6.8"));
  v.require(twin.passed, "Betti-poset twin: " + (twin.failures.empty() ? "" : twin.failures.front()));
  v.summary = std::to_string(ideals.size()) + " ideals, " + std::to_string(relabeled) +
              " relabeled from their polarization, twin construction " + (twin.passed ? "ok" : "failed");
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  const auto realizable = oracle::realizable_fvectors(5);
  std::size_t vectors = 0;
  for (const auto& f : oracle::candidate_fvectors(5)) {
    ++vectors;
    v.require(kruskal_katona_check(f) == (realizable.count(f) > 0), to_string(FVector(f)));
  }
  std::size_t ideals = 0;
  for (const auto& ideal : catalog::random_corpus(1313, 20)) {
    ++ideals;
    v.require(betti_table(ideal) == oracle::tor_betti(ideal), "Betti tables differ on " + format_ideal(ideal));
  }
  v.summary = std::to_string(vectors) + " vectors with f1 <= 5, " + std::to_string(ideals) + " ideals";
  return v;
}

}  // namespace

int main() {
  const auto ideals = corpus();
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"Betti numbers of the six-cycle", betti_reproduction},
      {"Taylor DGA axioms on the corpus", [&] { return taylor_axioms(ideals); }},
      {"minimal resolutions and Scarf embedding", [&] { return minimal_resolutions(ideals); }},
      {"Scarf products are the same at every Leibniz solution", [&] { return scarf_invariance(ideals); }},
      {"non-unique product on the four-cycle with tails", [] { return from_report(run_example("3.2")); }},
      {"modified multiplication table for x^2, xy, xz", [] { return from_report(run_example("3.3")); }},
      {"scaled resolutions are minimal DGA resolutions", [&] { return scaled(ideals); }},
      {"obstruction certificate for the path ideal", [] { return from_report(run_example("3.8")); }},
      {"strongly generic five-generator ideal", [] { return from_report(run_example("5.1")); }},
      {"cone complexes give minimal DGA resolutions", cone_pipelines},
      {"subadditivity of syzygy degrees", [&] { return subadditivity(ideals); }},
      {"supportive multiplications and relabeling", [&] { return supportive_suite(ideals); }},
      {"agreement with exhaustive oracles", oracle_equivalence},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.passed = false;
      v.summary = std::string("threw: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char head[32];
    std::snprintf(head, sizeof head, "%s %2zu  ", v.passed ? "PASS" : "FAIL", i + 1);
    std::cout << head << criteria[i].first << "  (" << v.summary << "; " << std::to_string(secs).substr(0, 4)
              << " s)\n";
    for (const auto& f : v.failures) std::cout << "        " << f << "\n";
    all = all && v.passed;
  }
  return all ? 0 : 1;
}
