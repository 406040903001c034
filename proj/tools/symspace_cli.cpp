// Command-line front end: load an i-root datum (named catalog entry or JSON
// input document), run a computation, print JSON / DOT / text.

#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symspace/catalog.hpp"
#include "symspace/json_io.hpp"

using namespace symspace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

struct Options {
  std::string input_file;
  std::string space;
  std::string format = "json";
  int bound = 4;
};

struct Loaded {
  InputDocument doc;
  std::string source;
};

Loaded load(const Options& opt) {
  if (opt.input_file.empty() == opt.space.empty())
    throw CLI::ValidationError("exactly one of --input and --space is required");
  if (!opt.space.empty()) {
    InputDocument doc{catalog::get(opt.space), std::nullopt, std::nullopt};
    return {std::move(doc), opt.space};
  }
  return {load_input_file(opt.input_file), opt.input_file};
}

std::shared_ptr<const SphericalLattice> lattice_of(const Loaded& in) {
  return std::make_shared<SphericalLattice>(spherical_lattice(in.doc.ird));
}

// monoid from the input document, defaulting to the full dominant monoid
SphericalMonoid monoid_of(const Loaded& in, std::shared_ptr<const SphericalLattice> sl) {
  if (in.doc.monoid_generators) return SphericalMonoid(std::move(sl), *in.doc.monoid_generators);
  return dominant_monoid(std::move(sl));
}

json json_int(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json labels_of(const SphericalLattice& sl, const std::vector<int>& nodes) {
  json a = json::array();
  for (int i : nodes) a.push_back(sl.ird.datum.labels[static_cast<size_t>(i)]);
  return a;
}

void emit(const Options& opt, const json& out) {
  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
    return;
  }
  // plain-text rendering: flat "key: value" lines, arrays inlined
  for (const auto& [key, value] : out.items())
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
}

int cmd_validate(const Options& opt) {
  Loaded in = [&] {
    try {
      return load(opt);
    } catch (const AxiomError& e) {
      json out{{"axioms", "failed"}, {"axiom", e.axiom()}, {"node", e.index()}, {"error", e.what()}};
      emit(opt, out);
      std::exit(kExitValidation);
    }
  }();
  auto sl = lattice_of(in);
  json out{{"source", in.source},
           {"axioms", "ok"},
           {"cartan_type", in.doc.ird.datum.type.to_string()},
           {"spherical_type", sl->spherical_type.to_string()},
           {"spherical_rank", sl->spherical_rank()}};
  t_coefficients(in.doc.ird);  // throws on an inconsistent datum
  if (in.doc.monoid_generators) {
    AffineEmbedding emb = validate_embedding(sl, *in.doc.monoid_generators, opt.bound);
    out["embedding"] = to_json(emb.report);
    out["bound"] = opt.bound;
    emit(opt, out);
    return emb.report.valid() ? kExitOk : kExitValidation;
  }
  emit(opt, out);
  return kExitOk;
}

int cmd_spherical_roots(const Options& opt) {
  Loaded in = load(opt);
  auto sl = lattice_of(in);
  json out{{"source", in.source},
           {"lattice_basis", to_json(sl->lattice.basis)},
           {"bar_alpha", to_json(sl->bar_alpha)},
           {"spherical_roots", to_json(sl->spherical_roots)},
           {"spherical_cartan", to_json(sl->spherical_cartan)},
           {"spherical_type", sl->spherical_type.to_string()},
           {"nodes", labels_of(*sl, sl->ird.I_circ_prime)}};
  emit(opt, out);
  return kExitOk;
}

int cmd_valuation_cone(const Options& opt) {
  Loaded in = load(opt);
  auto sl = lattice_of(in);
  ValuationCone vc = valuation_cone(*sl);
  json out{{"source", in.source},
           {"dual_rank", vc.cone.ambient_rank},
           {"cone", to_json(vc.cone)},
           {"bar_alpha_dual", to_json(vc.bar_alpha_dual)}};
  emit(opt, out);
  return kExitOk;
}

int cmd_orbits(const Options& opt) {
  Loaded in = load(opt);
  auto sl = lattice_of(in);
  SphericalMonoid L = monoid_of(in, sl);
  OrbitPoset poset = orbit_poset(L, opt.bound);
  if (opt.format == "dot") {
    std::cout << orbit_poset_dot(poset);
    return kExitOk;
  }
  json nodes = json::array();
  for (const auto& n : poset.nodes)
    nodes.push_back(json{{"label", n.label}, {"open_orbit", !n.ideal.has_value()}});
  json ideals = json::array();
  for (const auto& mif : poset.ideals)
    ideals.push_back(json{{"face_rays", mif.face.ray_set},
                          {"face_dim", mif.face.dim},
                          {"complement_hilbert", to_json(mif.face_hilbert)},
                          {"ideal_hilbert", to_json(mif.ideal_hilbert)}});
  json out{{"source", in.source},
           {"bound", opt.bound},
           {"generators", to_json(L.generators())},
           {"closed_prime_ideals", ideals},
           {"orbit_count", poset.nodes.size()},
           {"nodes", nodes},
           {"hasse", poset.hasse}};
  emit(opt, out);
  return kExitOk;
}

int cmd_canonical(const Options& opt) {
  Loaded in = load(opt);
  auto sl = lattice_of(in);
  CanonicalEmbedding ce = canonical_embedding(*sl);
  if (opt.format == "dot") {
    std::cout << orbit_lattice_dot(ce, *sl);
    return kExitOk;
  }
  json orbits = json::array();
  for (const auto& J : ce.orbits) orbits.push_back(labels_of(*sl, J));
  json out{{"source", in.source},
           {"spherical_rank", ce.spherical_rank},
           {"orbits", json_int(ce.orbit_count)},
           {"orbit_subsets", orbits},
           {"smooth", ce.smooth},
           {"lattice_index", json_int(ce.lattice_index)},
           {"chart_hilbert_basis", to_json(ce.chart_hilbert.elements)},
           {"chart_cone", to_json(ce.chart_cone)}};
  emit(opt, out);
  return kExitOk;
}

int cmd_essential_pairs(const Options& opt) {
  Loaded in = load(opt);
  auto sl = lattice_of(in);
  std::vector<EssentialPair> pairs = essential_pairs(*sl);
  int count = 0;
  for (const auto& p : pairs) count += p.essential ? 1 : 0;
  if (opt.format == "text") {
    std::cout << "J1 | J2 | essential\n";
    for (const auto& p : pairs) {
      auto show = [&](const std::vector<int>& J) {
        std::string s = "{";
        for (size_t t = 0; t < J.size(); ++t)
          s += (t ? "," : "") + sl->ird.datum.labels[static_cast<size_t>(J[t])];
        return s + "}";
      };
      std::cout << show(p.J1) << " | " << show(p.J2) << " | " << (p.essential ? "yes" : "no")
                << "\n";
    }
    std::cout << "essential: " << count << " of " << pairs.size() << "\n";
    return kExitOk;
  }
  json arr = json::array();
  for (const auto& p : pairs)
    arr.push_back(json{{"J1", labels_of(*sl, p.J1)},
                       {"J2", labels_of(*sl, p.J2)},
                       {"essential", p.essential}});
  json out{{"source", in.source},
           {"spherical_rank", sl->spherical_rank()},
           {"total", pairs.size()},
           {"essential", count},
           {"pairs", arr}};
  emit(opt, out);
  return kExitOk;
}

int cmd_enveloping(const Options& opt) {
  Loaded in = load(opt);
  auto sl = lattice_of(in);
  EnvelopingMonoid em = enveloping_monoid(sl);
  EmbeddingReport rep = validate_monoid(em.monoid, opt.bound);
  VeryFlatReport vf = is_very_flat(em, opt.bound);
  json out{{"source", in.source},
           {"bound", opt.bound},
           {"generators", to_json(em.monoid.generators())},
           {"diag_generators", to_json(em.diag_generators)},
           {"shift_generators", to_json(em.shift_generators)},
           {"validation", to_json(rep)},
           {"very_flat", to_json(vf)}};
  if (in.doc.pair) {
    EnvelopingIdeal ideal = enveloping_ideal(em, in.doc.pair->first, in.doc.pair->second);
    IdealCheck check = check_enveloping_ideal(em, ideal, opt.bound);
    out["pair"] = json{{"J1", labels_of(*sl, ideal.J1)},
                       {"J2", labels_of(*sl, ideal.J2)},
                       {"essential", essential(*sl, ideal.J1, ideal.J2)},
                       {"zero_ideal", check.zero_ideal},
                       {"closed", check.closed},
                       {"prime", check.prime},
                       {"absorbing", check.absorbing},
                       {"passes", check.passes()}};
  } else {
    CrossCheckReport cc = cross_check(em, opt.bound);
    out["cross_check"] = json{{"total", cc.total},
                              {"essential", cc.essential_count},
                              {"nonzero_essential", cc.nonzero_essential_count},
                              {"all_agree", cc.all_agree},
                              {"integral_rational_agree", cc.integral_rational_agree}};
  }
  emit(opt, out);
  return kExitOk;
}

int cmd_abelianization(const Options& opt) {
  Loaded in = load(opt);
  auto sl = lattice_of(in);
  SphericalMonoid L = monoid_of(in, sl);
  Abelianization ab = abelianization(L);
  VeryFlatReport vf = is_very_flat(L, opt.bound);
  json out{{"source", in.source},
           {"bound", opt.bound},
           {"central_generators", to_json(ab.central.generators())},
           {"unit_group_basis", to_json(ab.unit_group_basis)},
           {"minimal_elements", to_json(minimal_elements(L, ab, opt.bound))},
           {"very_flat", to_json(vf)}};
  emit(opt, out);
  return kExitOk;
}

int cmd_hilbert(const Options& opt) {
  Loaded in = load(opt);
  auto sl = lattice_of(in);
  SphericalMonoid L = monoid_of(in, sl);
  json out{{"source", in.source},
           {"generators", to_json(L.generators())},
           {"cone", to_json(L.cone())},
           {"hilbert_basis", to_json(L.hilbert().elements)},
           {"saturated", is_saturated(L)}};
  emit(opt, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of symmetric-space embeddings"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input_file, "input document (JSON)");
    sub->add_option("--space", opt.space, "named catalog entry");
    sub->add_option("--format", opt.format, "json | dot | text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--bound", opt.bound, "degree bound for bounded searches")
        ->check(CLI::PositiveNumber);
    return sub;
  };

  std::map<std::string, int (*)(const Options&)> commands = {
      {"validate", cmd_validate},           {"spherical-roots", cmd_spherical_roots},
      {"valuation-cone", cmd_valuation_cone}, {"orbits", cmd_orbits},
      {"canonical", cmd_canonical},         {"essential-pairs", cmd_essential_pairs},
      {"enveloping", cmd_enveloping},       {"abelianization", cmd_abelianization},
      {"hilbert", cmd_hilbert}};

  static const std::map<std::string, std::string> descriptions = {
      {"validate", "check the Satake axioms (and a monoid, if given)"},
      {"spherical-roots", "spherical lattice, restricted roots, spherical Cartan matrix"},
      {"valuation-cone", "the cone of invariant valuations"},
      {"orbits", "closed prime ideals and the orbit poset of an affine embedding"},
      {"canonical", "orbit lattice, chart monoid and smoothness of the canonical embedding"},
      {"essential-pairs", "essential pairs of the enveloping monoid"},
      {"enveloping", "enveloping monoid, validation, very-flatness, ideal cross-check"},
      {"abelianization", "central monoid, unit group, minimal elements, very-flatness"},
      {"hilbert", "Hilbert basis of the monoid's cone in the spherical lattice"}};

  for (auto& [name, fn] : commands) add_common(app.add_subcommand(name, descriptions.at(name)));

  CLI11_PARSE(app, argc, argv);

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    return commands.at(sub)(opt);
  } catch (const AxiomError& e) {
    json out{{"axioms", "failed"}, {"axiom", e.axiom()}, {"node", e.index()}, {"error", e.what()}};
    std::cout << out.dump(2) << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
