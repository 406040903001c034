#include "symspace/json_io.hpp"

#include <fstream>



namespace symspace {

namespace {

Int parse_int(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer (number or decimal string)");
}

IntVec parse_vec(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
  IntVec v;
  for (const auto& e : j) v.push_back(parse_int(e));
  return v;
}

std::vector<IntVec> parse_vecs(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of vectors");
  std::vector<IntVec> out;
  for (const auto& e : j) out.push_back(parse_vec(e));
  return out;
}

IntMat parse_mat(const json& j) {
  std::vector<IntVec> rows = parse_vecs(j);
  if (rows.empty()) return IntMat(0, 0);
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged matrix");
    for (size_t k = 0; k < rows[i].size(); ++k) m.at(static_cast<int>(i), static_cast<int>(k)) = rows[i][k];
  }
  return m;
}

std::vector<int> parse_indices(const json& j) {
  std::vector<int> out;
  for (const auto& e : j) out.push_back(e.get<int>());
  return out;
}

}  // namespace

InputDocument parse_input(const json& doc) {
  if (!doc.contains("root_datum")) throw std::invalid_argument("missing \"root_datum\"");
  const json& rd = doc.at("root_datum");
  const int rank = rd.at("rank").get<int>();
  std::vector<IntVec> roots = parse_vecs(rd.at("simple_roots"));
  std::vector<IntVec> coroots = parse_vecs(rd.at("simple_coroots"));
  std::optional<IntMat> pairing;
  if (rd.contains("pairing")) pairing = parse_mat(rd.at("pairing"));
  std::vector<std::string> labels;
  if (rd.contains("labels")) labels = rd.at("labels").get<std::vector<std::string>>();
  RootDatum datum = make_root_datum(rank, roots, coroots, pairing, labels);

  if (!doc.contains("satake")) throw std::invalid_argument("missing \"satake\"");
  const json& sj = doc.at("satake");
  SatakeData sat;
  sat.I_bullet = parse_indices(sj.at("I_bullet"));
  sat.tau = parse_indices(sj.at("tau"));
  sat.tau_X = sj.contains("tau_X") ? parse_mat(sj.at("tau_X")) : IntMat::identity(rank);
  if (sj.contains("I_circ_prime")) sat.I_circ_prime = parse_indices(sj.at("I_circ_prime"));

  InputDocument out{build_iroot_datum(datum, sat), std::nullopt, std::nullopt};
  if (doc.contains("monoid")) out.monoid_generators = parse_vecs(doc.at("monoid").at("generators"));
  if (doc.contains("pair"))
    out.pair = std::make_pair(parse_indices(doc.at("pair").at("J1")),
                              parse_indices(doc.at("pair").at("J2")));
  return out;
}

InputDocument load_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json doc = json::parse(in);
  return parse_input(doc);
}

namespace {

json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

}  // namespace

json to_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

json to_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& q : v) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1)
      a.push_back(int_to_json(c.get_num()));
    else
      a.push_back(c.get_str());
  }
  return a;
}

json to_json(const IntMat& m) {
  json a = json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json to_json(const std::vector<IntVec>& vecs) {
  json a = json::array();
  for (const auto& v : vecs) a.push_back(to_json(v));
  return a;
}

json to_json(const Cone& c) {
  return json{{"ambient_rank", c.ambient_rank},
              {"dim", c.dim},
              {"rays", to_json(c.rays)},
              {"facets", to_json(c.facets)}};
}

json to_json(const HilbertBasis& hb) {
  return json{{"lattice_basis", to_json(hb.lattice.basis)}, {"elements", to_json(hb.elements)}};
}

json to_json(const EmbeddingReport& rep) {
  return json{{"closed", rep.closed},
              {"saturated", rep.saturated},
              {"generating", rep.generating},
              {"valid", rep.valid()},
              {"failures", rep.failures}};
}

json to_json(const VeryFlatReport& rep) {
  return json{{"very_flat", rep.very_flat},
              {"exact", rep.exact},
              {"bounded", !rep.exact},
              {"bound", rep.bound},
              {"flat_condition", rep.flat_condition},
              {"fibers_condition", rep.fibers_condition},
              {"diagonal_certified", rep.diagonal_certified},
              {"notes", rep.notes}};
}

}  // namespace symspace
