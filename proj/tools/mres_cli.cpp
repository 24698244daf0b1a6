// Command-line front end. Exit codes: 0 success, 1 a check failed, 2 bad input.

#include <CLI11.hpp>

#include <cstdint>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mres.hpp"

using namespace mres;

namespace {

struct Options {
  bool json = false;
  std::uint64_t seed = 2024;
  std::size_t max_gens = kDefaultGeneratorCap;
  std::size_t jobs = 1;
};

/// Output of one command: text lines, the same data as JSON, and a verdict.
struct Result {
  std::vector<std::string> lines;
  Json data = Json::object();
  bool ok = true;

  void line(std::string s) { lines.push_back(std::move(s)); }
};

int emit(const Options& opt, const Result& r) {
  if (opt.json) {
    Json out = r.data;
    out["ok"] = r.ok;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& l : r.lines) std::cout << l << "\n";
  }
  return r.ok ? 0 : 1;
}

MonomialIdeal load_ideal(const std::string& path, const Options& opt) {
  auto ideal = parse_ideal(read_file(path));
  if (ideal.size() > opt.max_gens) {
    throw ResourceError(path + " has " + std::to_string(ideal.size()) + " generators, more than --max-gens " +
                        std::to_string(opt.max_gens));
  }
  return ideal;
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw InputError("expected a comma-separated list of numbers, got '" + text + "'");
    }
    if (used != item.size()) throw InputError("expected a comma-separated list of numbers, got '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

void describe_complex(Result& r, const FreeComplex& c) {
  r.line("ranks " + to_string(FVector(c.ranks())));
  for (std::size_t g = 1; g < c.size(); ++g) {
    r.line("  " + c.name(g) + "  hdeg " + std::to_string(c.basis(g).hdeg) + "  degree " +
           monomial_string(c.basis(g).mdeg));
  }
  for (std::size_t g = 1; g < c.size(); ++g) {
    const auto& b = c.basis(g);
    r.line("  d " + c.name(g) + " = " + to_string(c, Element{b.hdeg - 1, b.mdeg, c.differential(g)}));
  }
}

void describe_products(Result& r, const Multiplication& m) {
  const auto& c = m.complex();
  for (const auto& [key, v] : m.table()) {
    const auto [g, h] = key;
    const auto& bg = c.basis(g);
    const auto& bh = c.basis(h);
    r.line("  " + c.name(g) + " * " + c.name(h) + " = " +
           to_string(c, Element{bg.hdeg + bh.hdeg, bg.mdeg + bh.mdeg, v}));
  }
}

void describe_axioms(Result& r, const AxiomReport& a) {
  r.line(std::string("unit ") + (a.unit ? "ok" : "FAIL") + ", leibniz " + (a.leibniz ? "ok" : "FAIL") +
         ", commutativity " + (a.commutativity ? "ok" : "FAIL") + ", associativity " +
         (!a.associativity_checked ? "not checked" : a.associativity ? "ok" : "FAIL") + ", multigraded " +
         (a.multigraded ? "ok" : "FAIL"));
  for (const auto& w : a.failures) r.line("  " + w);
}

Json map_json(const LinearMap& m) {
  Json out = Json::array();
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (const auto& [y, s] : m[x]) out.push_back({{"from", x}, {"to", y}, {"scalar", to_string(s)}});
  }
  return out;
}

void describe_map(Result& r, const std::string& name, const LinearMap& m, const FreeComplex& from,
                  const FreeComplex& to) {
  r.line(name + ":");
  bool any = false;
  for (std::size_t x = 1; x < m.size(); ++x) {
    if (m[x].empty()) continue;
    any = true;
    std::string s;
    for (const auto& [y, v] : m[x]) {
      const auto mono = from.basis(x).mdeg - to.basis(y).mdeg;
      s += (s.empty() ? "" : " + ") + to_string(v) + (mono.is_zero() ? "" : "*" + monomial_string(mono)) + " " +
           to.name(y);
    }
    r.line("  " + from.name(x) + " -> " + s);
  }
  if (!any) r.line("  0");
}

Result cmd_betti(const MonomialIdeal& ideal, const Options& opt) {
  Result r;
  const auto b = betti_table(ideal, opt.max_gens);
  std::string totals = "totals";
  for (auto t : b.totals()) totals += " " + std::to_string(t);
  r.line(totals);
  for (const auto& [key, rank] : b.entries()) {
    r.line("  beta_" + std::to_string(key.first) + "," + monomial_string(key.second) + " = " + std::to_string(rank));
  }
  r.data = {{"ideal", to_json(ideal)}, {"betti", to_json(b)}};
  return r;
}

Result cmd_resolve(const MonomialIdeal& ideal, const Options& opt, bool show_transfer) {
  Result r;
  const auto res = minimal_resolution(ideal, opt.max_gens);
  describe_complex(r, *res.complex);
  const bool ok = is_resolution(*res.complex, ideal) && is_minimal(*res.complex);
  r.line(std::string("resolution and minimal: ") + (ok ? "yes" : "no"));
  r.ok = ok;
  r.data = {{"ideal", to_json(ideal)}, {"complex", to_json(*res.complex)}, {"verified", ok}};
  if (show_transfer) {
    std::string why;
    const bool tr = check_transfer(*res.taylor, *res.complex, res.transfer, &why);
    describe_map(r, "inclusion (F -> T)", res.transfer.inclusion, *res.complex, *res.taylor);
    describe_map(r, "projection (T -> F)", res.transfer.projection, *res.taylor, *res.complex);
    describe_map(r, "homotopy (T -> T)", res.transfer.homotopy, *res.taylor, *res.taylor);
    r.line(std::string("transfer identities: ") + (tr ? "ok" : "FAIL " + why));
    r.ok = r.ok && tr;
    r.data["transfer"] = {{"inclusion", map_json(res.transfer.inclusion)},
                          {"projection", map_json(res.transfer.projection)},
                          {"homotopy", map_json(res.transfer.homotopy)},
                          {"verified", tr}};
  }
  return r;
}

Result cmd_taylor(const MonomialIdeal& ideal, const Options& opt, bool with_mult) {
  Result r;
  const auto m = taylor_multiplication(std::make_shared<const FreeComplex>(taylor_complex(ideal, opt.max_gens)));
  describe_complex(r, m.complex());
  r.data = {{"ideal", to_json(ideal)}, {"complex", to_json(m.complex())}};
  if (with_mult) {
    r.line("products:");
    describe_products(r, m);
    const auto a = check_dga_axioms(m);
    describe_axioms(r, a);
    r.ok = a.all();
    r.data["multiplication"] = to_json(m);
    r.data["axioms"] = to_json(a);
  }
  return r;
}

Result cmd_scarf(const MonomialIdeal& ideal, const Options& opt) {
  Result r;
  const auto delta = scarf_complex(ideal, opt.max_gens);
  Json faces = Json::array();
  for (auto f : delta.sorted_faces()) faces.push_back(subset_members(f));
  std::string facets;
  for (auto f : delta.facets()) facets += " {" + subset_name(f) + "}";
  r.line("facets" + facets);
  r.line("f-vector " + to_string(f_vector(delta)));
  const auto alg = algebraic_scarf(ideal, opt.max_gens);
  const bool resolves = is_resolution(alg, ideal);
  r.line(std::string("algebraic Scarf complex is a resolution: ") + (resolves ? "yes" : "no"));
  r.data = {{"ideal", to_json(ideal)},
            {"faces", faces},
            {"f_vector", f_vector(delta)},
            {"strongly_generic", is_strongly_generic(ideal)},
            {"scarf_resolves", resolves}};
  r.line(std::string("strongly generic: ") + (is_strongly_generic(ideal) ? "yes" : "no"));
  return r;
}

Result cmd_lyubeznik(const MonomialIdeal& ideal, const Options& opt, const std::string& order_text) {
  Result r;
  auto order = parse_list(order_text);
  for (auto& i : order) {
    if (i == 0 || i > ideal.size()) throw InputError("--order uses generator positions 1.." + std::to_string(ideal.size()));
    --i;
  }
  const auto c = lyubeznik(ideal, order, opt.max_gens);
  const auto ordered = reorder(ideal, order);
  const bool res = is_resolution(c, ordered);
  const bool min = is_minimal(c);
  describe_complex(r, c);
  r.line(std::string("resolution: ") + (res ? "yes" : "no") + ", minimal: " + (min ? "yes" : "no"));
  r.ok = res;
  r.data = {{"ideal", to_json(ordered)}, {"complex", to_json(c)}, {"resolution", res}, {"minimal", min}};
  return r;
}

Multiplication transferred(const MinimalResolution& res) {
  return transfer_multiplication(taylor_multiplication(res.taylor), res.complex, res.transfer);
}

Result cmd_dga(const std::string& mode, const MonomialIdeal& ideal, const Options& opt, std::size_t samples,
               const std::string& table_path) {
  Result r;
  r.data["ideal"] = to_json(ideal);
  if (mode == "transfer" || mode == "laurent") {
    const auto res = minimal_resolution(ideal, opt.max_gens);
    const auto m = mode == "transfer" ? transferred(res) : laurent_dga(res.complex);
    r.line("products:");
    describe_products(r, m);
    const auto a = check_dga_axioms(m);
    describe_axioms(r, a);
    r.ok = a.all_but_associativity() && (mode == "transfer" || a.associativity);
    r.data["complex"] = to_json(*res.complex);
    r.data["multiplication"] = to_json(m);
    r.data["axioms"] = to_json(a);
  } else if (mode == "verify") {
    std::shared_ptr<const FreeComplex> c;
    std::optional<Multiplication> m;
    if (table_path.empty()) {
      const auto res = minimal_resolution(ideal, opt.max_gens);
      c = res.complex;
      m = transferred(res);
    } else {
      Json j;
      try {
        j = Json::parse(read_file(table_path));
        c = std::make_shared<const FreeComplex>(complex_from_json(j.at("complex")));
        m = multiplication_from_json(j.at("multiplication"), c);
      } catch (const Json::exception& e) {
        throw InputError(table_path + ": " + e.what());
      }
    }
    const bool res = is_resolution(*c, ideal);
    r.line(std::string("complex resolves the ideal: ") + (res ? "yes" : "no"));
    const auto a = check_dga_axioms(*m);
    describe_axioms(r, a);
    r.ok = res && a.all();
    r.data["resolution"] = res;
    r.data["axioms"] = to_json(a);
  } else if (mode == "solve") {
    const auto res = minimal_resolution(ideal, opt.max_gens);
    const auto particular = transferred(res);
    const auto sp = leibniz_solution_space(res.complex, &particular);
    const auto& c = *res.complex;
    r.line("solution space dimension " + std::to_string(sp.dimension()));
    Json forced = Json::array();
    for (const auto& fp : forced_products(sp)) {
      const auto& bg = c.basis(fp.g);
      const auto& bh = c.basis(fp.h);
      const std::string name = c.name(fp.g) + " * " + c.name(fp.h);
      if (fp.forced) {
        r.line("  forced " + name + " = " + to_string(c, Element{bg.hdeg + bh.hdeg, bg.mdeg + bh.mdeg, fp.value}));
      } else {
        r.line("  free   " + name + " (" + std::to_string(sp.pair_dimension(fp.g, fp.h)) + " parameters)");
      }
      Json e{{"g", fp.g}, {"h", fp.h}, {"forced", fp.forced}};
      if (!fp.forced) e["dimension"] = sp.pair_dimension(fp.g, fp.h);
      forced.push_back(e);
    }
    const auto scan = associativity_scan(sp, samples, opt.seed);
    Json js = Json::array();
    for (const auto& s : scan.samples) {
      std::vector<std::string> lambda;
      for (const auto& x : s.lambda) lambda.push_back(to_string(x));
      r.line("  sample " + s.label + ": " + std::to_string(s.nonzero_associators) + " nonzero associators" +
             (s.first_witness.empty() ? "" : " (" + s.first_witness + ")"));
      js.push_back({{"label", s.label},
                    {"lambda", lambda},
                    {"nonzero_associators", s.nonzero_associators},
                    {"first_witness", s.first_witness}});
    }
    r.line(std::string("associative sample found: ") + (scan.found_associative() ? "yes" : "no"));
    r.data["dimension"] = sp.dimension();
    r.data["products"] = forced;
    r.data["scan"] = {{"seed", opt.seed}, {"samples", js}, {"found_associative", scan.found_associative()}};
  } else if (mode == "scale") {
    const auto s = scaled_dga(ideal, opt.max_gens);
    const bool res = is_resolution(*s.complex, s.scaled_ideal);
    const bool min = is_minimal(*s.complex);
    const auto a = check_dga_axioms(s.multiplication);
    r.line("s = " + monomial_string(s.shift));
    r.line(std::string("resolves S/(sI): ") + (res ? "yes" : "no") + ", minimal: " + (min ? "yes" : "no"));
    describe_axioms(r, a);
    r.ok = res && min && a.all();
    r.data["shift"] = to_json(s.shift);
    r.data["scaled_ideal"] = to_json(s.scaled_ideal);
    r.data["complex"] = to_json(*s.complex);
    r.data["multiplication"] = to_json(s.multiplication);
    r.data["axioms"] = to_json(a);
  } else if (mode == "supportive") {
    const auto res = minimal_resolution(ideal, opt.max_gens);
    const auto m = transferred(res);
    const auto sup = check_supportive(m);
    r.line(std::string("supportive: ") + (sup.passed ? "yes" : "no"));
    for (const auto& w : sup.witnesses) r.line("  " + w);
    r.ok = sup.passed;
    r.data["supportive"] = check_json("supportive", sup.passed, sup.witnesses);
    if (ideal.is_squarefree()) {
      const auto sc = scarf_product_check(ideal, m);
      r.line(std::string("Scarf products: ") + (sc.passed ? "ok" : "FAIL"));
      for (const auto& w : sc.witnesses) r.line("  " + w);
      r.ok = r.ok && sc.passed;
      r.data["scarf_products"] = check_json("scarf_products", sc.passed, sc.witnesses);
    }
  } else {
    throw InputError("unknown dga mode '" + mode + "'");
  }
  return r;
}

Result cmd_relabel(const MonomialIdeal& ideal, const MonomialIdeal& target, const Options& opt) {
  Result r;
  const auto nu = generator_lattice_map(ideal, target);
  const auto res = minimal_resolution(ideal, opt.max_gens);
  const auto [c, m] = relabel(transferred(res), nu, target);
  const bool resolves = is_resolution(*c, target);
  const bool min = is_minimal(*c);
  const auto a = check_dga_axioms(m);
  const bool source_assoc = check_dga_axioms(transferred(res)).associativity;
  const bool sup = is_supportive(m);
  describe_complex(r, *c);
  r.line(std::string("resolves the target: ") + (resolves ? "yes" : "no") + ", minimal: " + (min ? "yes" : "no") +
         ", supportive: " + (sup ? "yes" : "no"));
  describe_axioms(r, a);
  r.ok = resolves && min && sup && a.all_but_associativity() && a.associativity == source_assoc;
  r.data = {{"ideal", to_json(ideal)},   {"target", to_json(target)}, {"complex", to_json(*c)},
            {"multiplication", to_json(m)}, {"resolution", resolves},   {"minimal", min},
            {"supportive", sup},           {"axioms", to_json(a)}};
  return r;
}

Result cmd_fvector(const std::string& mode, const std::string& vector_text) {
  Result r;
  const auto f = parse_list(vector_text);
  if (f.front() != 1) throw InputError("an f-vector starts with 1 (the empty face)");
  r.data["vector"] = f;
  if (mode == "check") {
    const bool ok = kruskal_katona_check(f);
    r.line(to_string(f) + (ok ? " is an f-vector" : " is not an f-vector"));
    r.ok = ok;
    r.data["f_vector"] = ok;
  } else if (mode == "cone") {
    const auto base = cone_deconvolve(f);
    r.line(to_string(f) + (base ? " is a cone f-vector (base " + to_string(*base) + ")" : " is not a cone f-vector"));
    r.ok = base.has_value();
    r.data["cone"] = r.ok;
    if (base) r.data["base"] = *base;
  } else {
    throw InputError("unknown fvector mode '" + mode + "'");
  }
  return r;
}

Result cmd_construct(const std::string& path, bool pipeline) {
  Result r;
  const auto delta = parse_complex(read_file(path));
  const auto ideal = ideal_from_cone_complex(delta);
  std::istringstream text(format_ideal(ideal));
  for (std::string l; std::getline(text, l);) r.line(l);
  r.data = {{"f_vector", f_vector(delta)}, {"ideal", to_json(ideal)}, {"apex", *is_cone(delta)}};
  if (pipeline) {
    const auto p = cone_pipeline(delta);
    r.line(std::string("# pipeline: ") + (p.passed() ? "minimal DGA resolution with ranks " + to_string(f_vector(delta))
                                                     : "FAIL"));
    for (const auto& w : p.witnesses) r.line("#   " + w);
    r.ok = p.passed();
    r.data["pipeline"] = check_json("cone_pipeline", p.passed(), p.witnesses);
  }
  return r;
}

Result cmd_examples(const std::string& which, const Options& opt) {
  Result r;
  std::vector<std::string> names;
  if (which == "all") {
    names = example_names();
  } else {
    names = {which};
  }
  std::vector<ExampleReport> reports(names.size());
  if (opt.jobs > 1 && names.size() > 1) {
    std::vector<std::future<ExampleReport>> futures;
    std::size_t next = 0;
    while (next < names.size()) {
      futures.clear();
      const std::size_t batch_start = next;
      for (; next < names.size() && next - batch_start < opt.jobs; ++next) {
        futures.push_back(std::async(std::launch::async, [&, i = next] { return run_example(names[i], opt.seed); }));
      }
      for (std::size_t k = 0; k < futures.size(); ++k) reports[batch_start + k] = futures[k].get();
    }
  } else {
    for (std::size_t i = 0; i < names.size(); ++i) reports[i] = run_example(names[i], opt.seed);
  }
  Json js = Json::array();
  for (const auto& rep : reports) {
    r.line("== " + rep.name + (rep.passed() ? " (all checks pass)" : " (some checks fail)"));
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      r.line(std::string(c.passed ? "  PASS  " : "  FAIL  ") + c.label + (c.detail.empty() ? "" : "  [" + c.detail + "]"));
      checks.push_back({{"label", c.label}, {"passed", c.passed}, {"detail", c.detail}});
    }
    js.push_back({{"example", rep.name}, {"passed", rep.passed()}, {"checks", checks}});
    r.ok = r.ok && rep.passed();
  }
  r.data["examples"] = js;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal free resolutions of monomial ideals and their multiplicative structures"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Print machine-readable JSON");
  app.add_option("--seed", opt.seed, "Seed for associativity sampling");
  app.add_option("--max-gens", opt.max_gens, "Refuse ideals with more generators");
  app.add_option("--jobs", opt.jobs, "Parallel jobs for 'examples run all'")->check(CLI::PositiveNumber);

  std::string file, target, order, vector_text, mode, table;
  bool show_transfer = false, with_mult = false, pipeline = false;
  std::size_t samples = 8;

  auto* betti = app.add_subcommand("betti", "Multigraded Betti numbers");
  betti->add_option("file", file, "Ideal file")->required();
  auto* resolve = app.add_subcommand("resolve", "Minimal free resolution");
  resolve->add_option("file", file, "Ideal file")->required();
  resolve->add_flag("--show-transfer", show_transfer, "Print the maps to and from the Taylor complex");
  auto* taylor = app.add_subcommand("taylor", "Taylor resolution");
  taylor->add_option("file", file, "Ideal file")->required();
  taylor->add_flag("--with-multiplication", with_mult, "Print and check the Taylor product");
  auto* scarf = app.add_subcommand("scarf", "Scarf complex");
  scarf->add_option("file", file, "Ideal file")->required();
  auto* lyu = app.add_subcommand("lyubeznik", "Lyubeznik resolution for a generator order");
  lyu->add_option("file", file, "Ideal file")->required();
  lyu->add_option("--order", order, "Generator positions from 1, e.g. 2,4,1,3,5")->required();
  auto* dga = app.add_subcommand("dga", "Multiplications on the minimal resolution");
  dga->add_option("mode", mode, "transfer | solve | verify | scale | laurent | supportive")
      ->required()
      ->check(CLI::IsMember({"transfer", "solve", "verify", "scale", "laurent", "supportive"}));
  dga->add_option("file", file, "Ideal file")->required();
  dga->add_option("--samples", samples, "Random samples for 'solve'");
  dga->add_option("--table", table, "JSON with complex and multiplication for 'verify'");
  auto* rel = app.add_subcommand("relabel", "Move the multiplication across an lcm-lattice isomorphism");
  rel->add_option("file", file, "Ideal file")->required();
  rel->add_option("--target", target, "Ideal file with isomorphic lcm lattice")->required();
  auto* fv = app.add_subcommand("fvector", "f-vector tests");
  fv->add_option("mode", mode, "check | cone")->required()->check(CLI::IsMember({"check", "cone"}));
  fv->add_option("--vector", vector_text, "Comma-separated vector, e.g. 1,6,9,6,2")->required();
  auto* construct = app.add_subcommand("construct", "Ideals from complexes");
  std::string construct_mode;
  construct->add_option("mode", construct_mode, "from-complex")->required()->check(CLI::IsMember({"from-complex"}));
  construct->add_option("file", file, "Complex file, one face per line")->required();
  construct->add_flag("--pipeline", pipeline, "Also build and check the minimal DGA resolution");
  auto* ex = app.add_subcommand("examples", "Worked examples");
  std::string ex_mode, ex_name;
  ex->add_option("mode", ex_mode, "run")->required()->check(CLI::IsMember({"run"}));
  std::vector<std::string> allowed = example_names();
  allowed.push_back("all");
  ex->add_option("name", ex_name, "3.2 | 3.3 | 3.8 | 4.3 | 5.1 | 6.8 | thm2.1 | all")
      ->required()
      ->check(CLI::IsMember(allowed));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*betti) return emit(opt, cmd_betti(load_ideal(file, opt), opt));
    if (*resolve) return emit(opt, cmd_resolve(load_ideal(file, opt), opt, show_transfer));
    if (*taylor) return emit(opt, cmd_taylor(load_ideal(file, opt), opt, with_mult));
    if (*scarf) return emit(opt, cmd_scarf(load_ideal(file, opt), opt));
    if (*lyu) return emit(opt, cmd_lyubeznik(load_ideal(file, opt), opt, order));
    if (*dga) return emit(opt, cmd_dga(mode, load_ideal(file, opt), opt, samples, table));
    if (*rel) return emit(opt, cmd_relabel(load_ideal(file, opt), load_ideal(target, opt), opt));
    if (*fv) return emit(opt, cmd_fvector(mode, vector_text));
    if (*construct) return emit(opt, cmd_construct(file, pipeline));
    if (*ex) return emit(opt, cmd_examples(ex_name, opt));
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
