// Command-line front end: one subcommand per library operation.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "sclat/asc.hpp"
#include "sclat/axioms.hpp"
#include "sclat/embed.hpp"
#include "sclat/extension.hpp"
#include "sclat/geometry.hpp"
#include "sclat/io.hpp"
#include "sclat/logic.hpp"

using namespace sclat;
using io::Json;

namespace {

constexpr const char* tool_version = "sclat 1.0.0 (file format sclat/1)";

struct Globals {
  bool json = false;
  bool trace = false;
  std::uint64_t seed = 1;
};

Globals globals;

// Exit status for outcomes that are only "nothing found up to the bound".
constexpr int capped = 2;

void emit(const Json& j, const std::string& human) {
  if (globals.json) std::cout << io::dump(j);
  else std::cout << human;
}

void trace(const std::string& line) {
  if (globals.trace) std::cerr << "trace: " << line << "\n";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split_list(s)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::argument, "expected a comma-separated list of integers, got '" + s + "'");
    }
  }
  return out;
}

// "a,b" names the downset generated by points a and b; "" and "0" are 0.
PointSet parse_element(const ScaledBase& base, const std::string& s) {
  if (s == "0" && !base.poset().index_of("0")) return 0;
  Json names = Json::array();
  for (const auto& n : split_list(s)) names.push_back(n);
  return io::element_from_json(base, names);
}

std::string show(const ScaledBase& base, PointSet x) { return x == 0 ? "0" : base.describe(x); }

io::LatticeFile load(const std::string& path) { return io::lattice_from_json(io::read_file(path)); }

AscBase as_asc(const io::LatticeFile& f) { return f.asc ? *f.asc : AscBase(f.base, {}); }

Json load_json_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return io::parse_text(arg);
  return io::read_file(arg);
}

std::string dim_text(int d) { return dim_to_string(d); }

Json dim_json(int d) { return d == minus_infinity ? Json("-inf") : Json(d); }

// ---- subcommands ----------------------------------------------------------

int run_validate(const std::string& path) {
  const auto f = load(path);
  const auto& b = f.base;
  Json j{{"valid", true},
         {"points", b.size()},
         {"d", b.d()},
         {"elements", b.elements().size()},
         {"scaled", b.is_scaled()},
         {"canonical_form", to_hex(canonical_form(b))}};
  std::ostringstream h;
  h << path << ": valid, " << b.size() << " points, d = " << b.d() << ", " << b.elements().size() << " elements"
    << (b.is_scaled() ? ", scaled" : "") << "\n";
  if (f.asc) {
    const bool standard = is_standard(*f.asc);
    j["standard"] = standard;
    h << "atom counts present" << (standard ? ", standard" : ", not standard") << "\n";
  }
  emit(j, h.str());
  return 0;
}

int run_axioms(const std::string& path, bool force_sampling) {
  const auto f = load(path);
  AxiomOptions options;
  options.seed = globals.seed;
  options.force_sampling = force_sampling;
  auto report = check_axioms(f.base, options);
  if (f.asc) {
    const auto extra = check_asc_axioms(*f.asc);
    report.verdicts.insert(report.verdicts.end(), extra.verdicts.begin(), extra.verdicts.end());
  }
  Json rows = Json::array();
  std::ostringstream h;
  for (const auto& v : report.verdicts) {
    rows.push_back(Json{{"name", v.name}, {"pass", v.pass}, {"required", v.required}, {"witness", v.witness}});
    h << (v.pass ? "pass  " : "FAIL  ") << v.name << (v.required ? "" : " (classification)");
    if (!v.pass) h << "  witness: " << v.witness;
    h << "\n";
  }
  bool required_ok = true;
  for (const auto& v : report.verdicts) required_ok = required_ok && (v.pass || !v.required);
  h << (required_ok ? "all required checks pass" : "some required checks fail");
  if (report.sampled) h << " (sampled, seed " << report.seed << ")";
  h << "\n";
  emit(Json{{"verdicts", rows}, {"all_required_pass", required_ok}, {"sampled", report.sampled}, {"seed", report.seed}},
       h.str());
  return required_ok ? 0 : 1;
}

int run_dim(const std::string& path, const std::optional<std::string>& element) {
  const auto f = load(path);
  const auto& b = f.base;
  std::vector<PointSet> xs = element ? std::vector<PointSet>{parse_element(b, *element)} : b.elements();
  Json rows = Json::array();
  std::ostringstream h;
  for (PointSet x : xs) {
    const int sc = b.scdim(x);
    const int d = b.dim(x);
    const int ll = dim_via_ll(b.poset(), x);
    rows.push_back(Json{{"element", io::element_to_json(b, x)}, {"scdim", dim_json(sc)}, {"dim", dim_json(d)},
                        {"dim_via_ll", dim_json(ll)}});
    h << show(b, x) << "  scdim " << dim_text(sc) << "  dim " << dim_text(d) << "  dim(ll) " << dim_text(ll) << "\n";
  }
  emit(Json{{"elements", rows}}, h.str());
  return 0;
}

int run_eval(const std::string& path, const std::string& formula, const std::vector<std::string>& assigns) {
  const auto f = load(path);
  const Sentence s = parse_formula(formula);
  std::vector<PointSet> env(s.quantifier == Quantifier::none ? s.variables.size() : 0, 0);
  std::vector<bool> bound(env.size(), false);
  for (const auto& a : assigns) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) fail(ErrorKind::argument, "assignments look like x=p,q");
    const auto name = a.substr(0, eq);
    const auto it = std::find(s.variables.begin(), s.variables.end(), name);
    if (it == s.variables.end() || s.quantifier != Quantifier::none)
      fail(ErrorKind::argument, "'" + name + "' is not a free variable of the formula");
    const auto i = static_cast<std::size_t>(it - s.variables.begin());
    env[i] = parse_element(f.base, a.substr(eq + 1));
    bound[i] = true;
  }
  for (std::size_t i = 0; i < bound.size(); ++i)
    if (!bound[i]) fail(ErrorKind::argument, "variable " + s.variables[i] + " is unbound");
  const bool value = f.asc ? eval_sentence(*f.asc, s, env) : eval_sentence(f.base, s, env);
  emit(Json{{"formula", render(s)}, {"value", value}}, std::string(value ? "true" : "false") + "\n");
  return 0;
}

int run_signatures(const std::string& path, const std::optional<std::string>& cap) {
  const auto f = load(path);
  Json rows = Json::array();
  std::ostringstream h;
  if (f.asc) {
    const auto values = cap ? int_list(*cap) : default_cap(*f.asc);
    for (const auto& s : enumerate_asc_signatures(*f.asc, values)) {
      rows.push_back(io::signature_to_json(*f.asc, s));
      h << describe(*f.asc, s) << "\n";
    }
  } else {
    for (const auto& s : enumerate_signatures(f.base)) {
      rows.push_back(io::signature_to_json(f.base, s));
      h << describe(f.base, s) << "\n";
    }
  }
  h << rows.size() << " signatures\n";
  emit(Json{{"signatures", rows}, {"count", rows.size()}}, h.str());
  return 0;
}

int run_extend(const std::string& path, const std::string& signature, const std::string& out) {
  const auto f = load(path);
  const Json sig = load_json_arg(signature);
  Json lattice;
  std::string summary;
  if (f.asc || sig.contains("K")) {
    const AscBase base = as_asc(f);
    const auto s = io::asc_signature_from_json(base, sig);
    const auto problem = asc_signature_problem(base, s);
    if (!problem.empty()) fail(ErrorKind::precondition, "not an ASC signature: " + problem);
    const auto ext = apply_asc_signature(base, s);
    trace("signature " + describe(base, s));
    lattice = io::lattice_to_json(ext.base);
    summary = "extended by " + describe(base, s) + ": " + std::to_string(ext.base.base().size()) + " points\n";
  } else {
    const auto s = io::signature_from_json(f.base, sig);
    const auto problem = signature_problem(f.base, s);
    if (!problem.empty()) fail(ErrorKind::precondition, "not a signature: " + problem);
    const auto ext = apply_signature(f.base, s);
    trace("signature " + describe(f.base, s) + ", generators " + show(ext.base, ext.x1) + " and " + show(ext.base, ext.x2));
    lattice = io::lattice_to_json(ext.base);
    summary = "extended by " + describe(f.base, s) + ": " + std::to_string(ext.base.size()) + " points\n";
  }
  if (out.empty() || out == "-") {
    std::cout << io::dump(lattice);
  } else {
    io::write_file(out, lattice);
    emit(Json{{"written", out}}, summary);
  }
  return 0;
}

int run_tower(const std::string& path, const std::vector<std::string>& generators) {
  const auto f = load(path);
  std::vector<PointSet> seeds;
  for (const auto& g : generators) seeds.push_back(parse_element(f.base, g));
  const SubLattice inner = seeds.empty() ? prime_substructure(f.base) : generate(f.base, seeds);
  const auto steps = tower_decompose(f.base, inner);
  Json rows = Json::array();
  std::ostringstream h;
  h << "from " << inner.size() << " to " << f.base.size() << " irreducibles in " << steps.size() << " steps\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& st = steps[i];
    rows.push_back(Json{{"signature", io::signature_to_json(st.before, st.sigma)},
                        {"before", io::lattice_to_json(st.before)},
                        {"generators", {io::element_to_json(f.base, st.x1), io::element_to_json(f.base, st.x2)}}});
    h << i + 1 << ". " << describe(st.before, st.sigma) << "  generators " << show(f.base, st.x1) << ", "
      << show(f.base, st.x2) << "\n";
    trace("step " + std::to_string(i + 1) + " lands in " + std::to_string(st.after.size()) + " irreducibles");
  }
  emit(Json{{"steps", rows}}, h.str());
  return 0;
}

int run_split(const std::string& path, const std::string& a, const std::string& b1, const std::string& b2,
              const std::string& out) {
  const auto f = load(path);
  const auto r = splitting_extension(f.base, parse_element(f.base, a), parse_element(f.base, b1), parse_element(f.base, b2));
  for (const auto& line : r.trace) trace(line);
  const auto& ext = r.extension.base;
  const Json lattice = io::lattice_to_json(ext);
  if (!out.empty() && out != "-") io::write_file(out, lattice);
  Json j{{"a1", io::element_to_json(ext, r.a1)}, {"a2", io::element_to_json(ext, r.a2)}, {"points", ext.size()}};
  if (out.empty() || out == "-") j["lattice"] = lattice;
  emit(j, "a1 = " + show(ext, r.a1) + "\na2 = " + show(ext, r.a2) + "\n" + std::to_string(ext.size()) + " points\n");
  return 0;
}

void write_representation(const std::string& dir, const Json& carrier, const Json& map) {
  std::filesystem::create_directories(dir);
  io::write_file((std::filesystem::path(dir) / "X.sls.json").string(), carrier);
  io::write_file((std::filesystem::path(dir) / "phi.map.json").string(), map);
}

int run_represent(const std::string& path, const std::string& dir, std::optional<int> atoms) {
  const auto f = load(path);
  Representation r;
  Json map;
  if (atoms) {
    if (*atoms < 0) fail(ErrorKind::argument, "--atoms must be non-negative");
    const AscBase base = as_asc(f);
    r = represent_asc(base, *atoms);
    map = io::representation_to_json(base, r);
  } else {
    r = represent(f.base);
    map = io::representation_to_json(f.base, r);
  }
  for (int i = 0; i < f.base.size(); ++i) trace(f.base.poset().name(i) + " -> " + describe(r.point_images[i]));
  const Json carrier = io::sls_to_json(r.carrier);
  if (dir.empty()) {
    emit(Json{{"carrier", carrier}, {"map", map}}, "X = " + describe(r.carrier) + "\n");
    return 0;
  }
  write_representation(dir, carrier, map);
  emit(Json{{"written", {"X.sls.json", "phi.map.json"}}, {"carrier", carrier}},
       "X = " + describe(r.carrier) + "\nwrote " + dir + "/X.sls.json and " + dir + "/phi.map.json\n");
  return 0;
}

int run_validate_embedding(const std::string& dir) {
  const auto carrier = io::sls_from_json(io::read_file((std::filesystem::path(dir) / "X.sls.json").string()));
  const Json map = io::read_file((std::filesystem::path(dir) / "phi.map.json").string());
  if (!map.contains("lattice") || !map.contains("images")) fail(ErrorKind::ingestion, "phi.map.json needs lattice and images");
  const auto f = io::lattice_from_json(map["lattice"]);
  const auto elems = f.base.elements();
  std::vector<std::optional<LinearSet>> slot(elems.size());
  for (const auto& row : map["images"]) {
    if (!row.is_object() || !row.contains("element") || !row.contains("set"))
      fail(ErrorKind::ingestion, "each image needs element and set");
    const PointSet x = io::element_from_json(f.base, row["element"]);
    const auto at = std::find(elems.begin(), elems.end(), x) - elems.begin();
    slot[at] = io::sls_from_json(row["set"]);
  }
  std::vector<LinearSet> images;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!slot[i]) fail(ErrorKind::ingestion, "no image for " + show(f.base, elems[i]));
    images.push_back(*slot[i]);
  }
  const auto report = embed_check(f.base, GeometryTarget{carrier}, images);
  bool ok = report.ok() && images.back().ambient() == carrier.ambient();
  std::string failure = report.direct_failure.empty() ? report.criterion_failure : report.direct_failure;
  if (f.asc) {
    const std::function<int(const LinearSet&)> count = geometric_asc;
    const auto asc = asc_embed_check(*f.asc, images, count);
    ok = ok && asc.all;
    if (!asc.all && failure.empty()) failure = asc.failure;
  }
  emit(Json{{"ok", ok}, {"failure", failure}}, ok ? "embedding ok\n" : "embedding fails: " + failure + "\n");
  return ok ? 0 : 1;
}

int run_prime(const std::string& path) {
  const auto f = load(path);
  const auto prime = prime_substructure(f.base);
  Json elems = Json::array();
  std::ostringstream h;
  for (PointSet x : prime.elements) {
    elems.push_back(io::element_to_json(f.base, x));
    h << show(f.base, x) << "\n";
  }
  h << prime.elements.size() << " elements, " << prime.size() << " irreducibles\n";
  Json j{{"elements", elems}, {"irreducibles", prime.size()}, {"lattice", io::lattice_to_json(prime.induced)}};
  if (f.asc) j["completion_invariant"] = to_hex(completion_invariant(*f.asc));
  emit(j, h.str());
  return 0;
}

int run_canon(const std::string& path) {
  const auto f = load(path);
  std::string form = to_hex(canonical_form(f.base));
  Json j{{"canonical_form", form}, {"d", f.base.d()}};
  if (f.asc) {
    std::vector<std::uint64_t> colors(f.asc->weights().begin(), f.asc->weights().end());
    form = to_hex(canonical_form(f.base, colors));
    j["canonical_form_with_counts"] = form;
  }
  emit(j, form + "\n");
  return 0;
}

int run_iso(const std::string& a, const std::string& b) {
  const auto fa = load(a);
  const auto fb = load(b);
  bool iso = fa.base.d() == fb.base.d() && is_isomorphic(fa.base, fb.base);
  if (iso && (fa.asc || fb.asc)) {
    const auto wa = as_asc(fa).weights();
    const auto wb = as_asc(fb).weights();
    iso = canonical_form(fa.base, {wa.begin(), wa.end()}) == canonical_form(fb.base, {wb.begin(), wb.end()});
  }
  emit(Json{{"isomorphic", iso}}, iso ? "isomorphic\n" : "not isomorphic\n");
  return 0;
}

int run_enumerate(int d, int max_irr, bool asc, const std::optional<std::string>& cap, const std::string& dir) {
  std::vector<Json> files;
  if (asc) {
    for (const auto& b : enumerate_asc_bases(d, max_irr, cap ? int_list(*cap) : std::vector<int>{1}))
      files.push_back(io::lattice_to_json(b));
  } else {
    for (const auto& b : enumerate_bases(d, max_irr)) files.push_back(io::lattice_to_json(b));
  }
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < files.size(); ++i) {
      std::ostringstream name;
      name << "base_" << std::setw(5) << std::setfill('0') << i << ".json";
      io::write_file((std::filesystem::path(dir) / name.str()).string(), files[i]);
    }
  }
  Json j{{"count", files.size()}};
  if (dir.empty()) j["bases"] = files;
  emit(j, std::to_string(files.size()) + " bases\n");
  return 0;
}

Json outcome_json(const DecisionOutcome& out, const Sentence& phi) {
  Json j{{"format", io::format_tag},
         {"formula", render(phi)},
         {"verdict", std::string(to_string(out.verdict))},
         {"exhaustive", out.exhaustive},
         {"bound_used", out.bound_used},
         {"interrupted", out.interrupted},
         {"bases_searched", out.bases_searched},
         {"evaluations", out.evaluations}};
  if (!out.note.empty()) j["note"] = out.note;
  if (out.witness) {
    const auto& w = *out.witness;
    Json assignment = Json::object();
    for (std::size_t i = 0; i < w.variables.size() && i < w.assignment.size(); ++i)
      assignment[w.variables[i]] = io::element_to_json(w.base, w.assignment[i]);
    j["witness"] = Json{{"lattice", w.asc ? io::lattice_to_json(*w.asc) : io::lattice_to_json(w.base)},
                        {"assignment", assignment}};
  }
  return j;
}

std::string outcome_text(const DecisionOutcome& out) {
  std::ostringstream h;
  h << to_string(out.verdict);
  if (!out.exhaustive) h << " (searched up to " << out.bound_used << " irreducibles; not exhaustive)";
  h << "\n";
  if (out.witness) {
    const auto& w = *out.witness;
    h << "witness: " << w.base.size() << " points, canonical form " << to_hex(canonical_form(w.base)) << "\n";
    for (std::size_t i = 0; i < w.variables.size() && i < w.assignment.size(); ++i)
      h << "  " << w.variables[i] << " = " << show(w.base, w.assignment[i]) << "\n";
  }
  if (!out.note.empty()) h << "note: " << out.note << "\n";
  return h.str();
}

int outcome_status(const DecisionOutcome& out) { return out.exhaustive && !out.interrupted ? 0 : capped; }

SearchOptions search_options(std::optional<int> max_irr, int ceiling, std::uint64_t budget, const std::optional<std::string>& cap) {
  SearchOptions o;
  o.bound = max_irr;
  o.ceiling = ceiling;
  o.budget = budget;
  if (cap) {
    o.k_cap = int_list(*cap);
    o.k_cap.erase(std::remove(o.k_cap.begin(), o.k_cap.end(), 0), o.k_cap.end());
  }
  return o;
}

int run_sat(int d, const std::string& formula, const SearchOptions& options) {
  const Sentence phi = parse_formula(formula);
  const auto out = sat_qf(phi, d, options);
  trace(std::to_string(out.bases_searched) + " bases, " + std::to_string(out.evaluations) + " evaluations");
  emit(outcome_json(out, phi), outcome_text(out));
  return outcome_status(out);
}

int run_decide(const std::string& theory, int d, const std::string& formula, const std::string& prime_path, bool asc,
               const SearchOptions& options) {
  if (theory != "Td") fail(ErrorKind::argument, "only --theory Td is supported");
  if (d < 0) fail(ErrorKind::argument, "--d must be non-negative");
  const Sentence phi = parse_formula(formula);
  // Without --prime: the prime of a lattice whose top is pure of dimension d.
  io::LatticeFile prime{ScaledBase(Poset::from_relation({"top"}, {}), d, {d}), std::nullopt};
  if (!prime_path.empty()) prime = load(prime_path);
  DecisionOutcome out;
  if (asc || prime.asc) out = decide(as_asc(prime), phi, d, options);
  else out = decide(prime.base, phi, d, options);
  trace(std::to_string(out.bases_searched) + " bases, " + std::to_string(out.evaluations) + " evaluations");
  emit(outcome_json(out, phi), outcome_text(out));
  return outcome_status(out);
}

int run_theory_eq(const std::string& a, const std::string& b, bool asc) {
  const auto fa = load(a);
  const auto fb = load(b);
  const bool same = asc || fa.asc || fb.asc ? theory_equal(as_asc(fa), as_asc(fb)) : theory_equal(fa.base, fb.base);
  emit(Json{{"equal", same}}, same ? "same completion\n" : "different completions\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite subscaled lattices: checks, extensions, representations and decisions"};
  app.set_version_flag("--version", tool_version);
  app.require_subcommand(1);
  app.add_flag("--json", globals.json, "machine-readable output");
  app.add_flag("--trace", globals.trace, "intermediate steps on stderr");
  app.add_option("--seed", globals.seed, "seed for sampled checks");
  app.fallthrough();

  std::function<int()> action;
  std::string file, other, formula, out, a, b1, b2, signature, theory = "Td", prime_path;
  std::optional<std::string> element, cap;
  std::optional<int> max_irr, atoms;
  std::vector<std::string> assigns, generators;
  bool sample = false, asc = false;
  int d = 1, ceiling = 6;
  std::uint64_t budget = 100'000'000;

  auto* c = app.add_subcommand("validate", "check a lattice file");
  c->add_option("lattice", file)->required();
  c->callback([&] { action = [&] { return run_validate(file); }; });

  c = app.add_subcommand("axioms", "check the axioms and derived rules");
  c->add_option("lattice", file)->required();
  c->add_flag("--sample", sample, "sample tuples even for small bases");
  c->callback([&] { action = [&] { return run_axioms(file, sample); }; });

  c = app.add_subcommand("dim", "scdim and dimension of elements");
  c->add_option("lattice", file)->required();
  c->add_option("--element", element, "comma-separated generating points");
  c->callback([&] { action = [&] { return run_dim(file, element); }; });

  c = app.add_subcommand("eval", "evaluate a formula in a lattice");
  c->add_option("lattice", file)->required();
  c->add_option("--formula", formula)->required();
  c->add_option("--assign", assigns, "x=p,q (repeatable)");
  c->callback([&] { action = [&] { return run_eval(file, formula, assigns); }; });

  c = app.add_subcommand("signatures", "list the signatures of a lattice");
  c->add_option("lattice", file)->required();
  c->add_option("--k-cap", cap, "atom counts to try, comma-separated");
  c->callback([&] { action = [&] { return run_signatures(file, cap); }; });

  c = app.add_subcommand("extend", "apply a signature");
  c->add_option("lattice", file)->required();
  c->add_option("--signature", signature, "signature file or inline JSON")->required();
  c->add_option("-o,--output", out);
  c->callback([&] { action = [&] { return run_extend(file, signature, out); }; });

  c = app.add_subcommand("tower", "decompose a lattice over a substructure");
  c->add_option("lattice", file)->required();
  c->add_option("--generator", generators, "generators of the inner substructure (default: the prime)");
  c->callback([&] { action = [&] { return run_tower(file, generators); }; });

  c = app.add_subcommand("split", "splitting extension along b1, b2");
  c->add_option("lattice", file)->required();
  c->add_option("--a", a)->required();
  c->add_option("--b1", b1)->required();
  c->add_option("--b2", b2)->required();
  c->add_option("-o,--output", out);
  c->callback([&] { action = [&] { return run_split(file, a, b1, b2, out); }; });

  c = app.add_subcommand("represent", "linear representation");
  c->add_option("lattice", file)->required();
  c->add_option("-o,--output", out, "directory for X.sls.json and phi.map.json");
  c->callback([&] { action = [&] { return run_represent(file, out, std::nullopt); }; });

  c = app.add_subcommand("represent-asc", "linear representation with atom counts");
  c->add_option("lattice", file)->required();
  c->add_option("--atoms", atoms, "points for atoms without a finite count")->default_val(3);
  c->add_option("-o,--output", out, "directory for X.sls.json and phi.map.json");
  c->callback([&] { action = [&] { return run_represent(file, out, atoms.value_or(3)); }; });

  c = app.add_subcommand("validate-embedding", "recheck a written representation");
  c->add_option("dir", file)->required();
  c->callback([&] { action = [&] { return run_validate_embedding(file); }; });

  c = app.add_subcommand("prime", "prime substructure");
  c->add_option("lattice", file)->required();
  c->callback([&] { action = [&] { return run_prime(file); }; });

  c = app.add_subcommand("canon", "canonical form in hex");
  c->add_option("lattice", file)->required();
  c->callback([&] { action = [&] { return run_canon(file); }; });

  c = app.add_subcommand("iso", "isomorphism test");
  c->add_option("first", file)->required();
  c->add_option("second", other)->required();
  c->callback([&] { action = [&] { return run_iso(file, other); }; });

  c = app.add_subcommand("enumerate", "all bases up to isomorphism");
  c->add_option("--d", d)->required();
  c->add_option("--max-irr", max_irr)->required();
  c->add_flag("--asc", asc);
  c->add_option("--k-cap", cap);
  c->add_option("-o,--output", out, "directory for one file per base");
  c->callback([&] { action = [&] { return run_enumerate(d, *max_irr, asc, cap, out); }; });

  auto search_flags = [&](CLI::App* s) {
    s->add_option("--d", d)->required();
    s->add_option("--formula", formula)->required();
    s->add_option("--max-irr", max_irr, "search bound in irreducibles");
    s->add_option("--ceiling", ceiling, "default bound cap")->default_val(6);
    s->add_option("--budget", budget, "maximum formula evaluations")->default_val(100'000'000);
    s->add_option("--k-cap", cap, "atom counts to try, comma-separated");
  };

  c = app.add_subcommand("sat", "quantifier-free satisfiability");
  search_flags(c);
  c->callback([&] { action = [&] { return run_sat(d, formula, search_options(max_irr, ceiling, budget, cap)); }; });

  c = app.add_subcommand("decide", "decide a sentence in a completion");
  search_flags(c);
  c->add_option("--theory", theory)->default_val("Td");
  c->add_option("--prime", prime_path, "lattice file generated by its constants");
  c->add_flag("--asc", asc);
  c->callback([&] {
    action = [&] { return run_decide(theory, d, formula, prime_path, asc, search_options(max_irr, ceiling, budget, cap)); };
  });

  c = app.add_subcommand("theory-eq", "compare the completions of two bases");
  c->add_option("first", file)->required();
  c->add_option("second", other)->required();
  c->add_flag("--asc", asc);
  c->callback([&] { action = [&] { return run_theory_eq(file, other, asc); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  try {
    return action();
  } catch (const Error& e) {
    Json err{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
    if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) err["error"]["position"] = s->position();
    if (globals.json) std::cout << io::dump(err);
    else std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err{{"error", {{"kind", "internal"}, {"message", e.what()}}}};
    if (globals.json) std::cout << io::dump(err);
    else std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
