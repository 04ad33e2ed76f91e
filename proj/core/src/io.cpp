#include "tropctl/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tropctl::io {

namespace {

using nlohmann::json;

json scalar_to_json(Scalar s) {
  if (s.is_neg_inf()) return "-inf";
  if (s.is_pos_inf()) return "+inf";
  return s.value();
}

Scalar scalar_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar::finite(j.get<std::int64_t>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw std::invalid_argument(where + ": entries are integers or \"-inf\"/\"+inf\"");
}

json vec_to_json(const Vec& v) {
  json arr = json::array();
  for (Scalar s : v) arr.push_back(scalar_to_json(s));
  return arr;
}

Vec vec_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument(where + ": expected a non-empty array");
  }
  Vec v;
  v.reserve(j.size());
  for (const json& e : j) v.push_back(scalar_from_json(e, where));
  return v;
}

json matrix_to_json(const TropMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return json{{"rows", rows}};
}

TropMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("rows")) {
    throw std::invalid_argument(where + ": expected {\"rows\": [[...], ...]}");
  }
  const json& rows = j.at("rows");
  if (!rows.is_array() || rows.empty()) {
    throw std::invalid_argument(where + ".rows: expected a non-empty array");
  }
  std::vector<Vec> parsed;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    parsed.push_back(vec_from_json(rows[i], where + ".rows[" + std::to_string(i) + "]"));
    if (parsed[i].size() != parsed[0].size()) {
      throw std::invalid_argument(where + ": ragged rows");
    }
  }
  TropMatrix m(parsed.size(), parsed[0].size());
  for (std::size_t i = 0; i < parsed.size(); ++i)
    for (std::size_t k = 0; k < parsed[i].size(); ++k) m.at(i, k) = parsed[i][k];
  return m;
}

json semimodule_to_json(const Semimodule& s) {
  json gens = json::array();
  for (const Vec& c : s.gens().cols) gens.push_back(vec_to_json(c));
  json j{{"dim", s.dim()}, {"generators", gens}};
  if (s.domain() == ScalarDomain::nonpositive) j["domain"] = "nonpositive";
  return j;
}

Semimodule semimodule_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("generators")) {
    throw std::invalid_argument(where +
                                ": expected {\"dim\": n, \"generators\": [...]}");
  }
  const std::size_t dim = j.at("dim").get<std::size_t>();
  if (dim == 0) throw std::invalid_argument(where + ".dim must be positive");
  ScalarDomain domain = ScalarDomain::full;
  if (j.contains("domain")) {
    const std::string d = j.at("domain").get<std::string>();
    if (d == "nonpositive") {
      domain = ScalarDomain::nonpositive;
    } else if (d != "full") {
      throw std::invalid_argument(where + ".domain: \"full\" or \"nonpositive\"");
    }
  }
  GeneratorSet g{dim, {}};
  for (const json& col : j.at("generators")) {
    Vec v = vec_from_json(col, where + ".generators");
    if (v.size() != dim) {
      throw std::invalid_argument(where + ": generator length != dim");
    }
    g.cols.push_back(std::move(v));
  }
  return Semimodule(std::move(g), domain);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json violation_to_json(const Violation& v) {
  return json{
      {"kind", v.kind == Violation::Kind::headway ? "headway" : "connection"},
      {"step", v.step},
      {"from", v.from_dir + 1},
      {"to", v.to_dir + 1},
      {"amount", v.amount},
      {"bound", v.bound},
  };
}

json feedback_to_json(const FeedbackResult& r) {
  json j{{"status", r.found() ? "found" : "not_algebraically_invariant"}};
  if (r.f) j["F"] = matrix_to_json(*r.f);
  if (r.g) j["G"] = matrix_to_json(*r.g);
  return j;
}

json invariance_to_json(const InvarianceReport& r) {
  json steps = json::array();
  for (const Semimodule& s : r.steps) steps.push_back(semimodule_to_json(s));
  json j{{"steps", steps}, {"cap_exceeded", r.cap_exceeded}};
  j["stabilized_at"] = r.stabilized_at ? json(*r.stabilized_at) : json();
  j["result"] = r.result ? semimodule_to_json(*r.result) : json();
  j["hilbert_bound"] = r.hilbert_bound ? json(*r.hilbert_bound) : json();
  return j;
}

std::string scalar_text(Scalar s) { return to_string(s); }

std::string matrix_text_impl(const TropMatrix& m) {
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      width[j] = std::max(width[j], scalar_text(m.at(i, j)).size());
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string tok = scalar_text(m.at(i, j));
      if (j > 0) out << ' ';
      out << std::string(width[j] - tok.size(), ' ') << tok;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << contents;
}

namespace {

json parse_checked(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
  return j;
}

}  // namespace

TropMatrix parse_matrix(const std::string& text) {
  return matrix_from_json(parse_checked(text), "matrix");
}

Vec parse_vector(const std::string& text) {
  return vec_from_json(parse_checked(text), "vector");
}

Semimodule parse_semimodule(const std::string& text) {
  return semimodule_from_json(parse_checked(text), "semimodule");
}

TwoSidedSystem parse_system(const std::string& text) {
  const json j = parse_checked(text);
  if (!j.is_object() || !j.contains("D") || !j.contains("C")) {
    throw std::invalid_argument("system: expected {\"D\": ..., \"C\": ...}");
  }
  return TwoSidedSystem(matrix_from_json(j.at("D"), "system.D"),
                        matrix_from_json(j.at("C"), "system.C"));
}

NetworkSpec parse_network(const std::string& text) {
  const json j = parse_checked(text);
  for (const char* key : {"directions", "travel", "pred", "connections"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("network: missing field '") +
                                  key + "'");
    }
  }
  NetworkSpec spec;
  spec.directions = j.at("directions").get<std::size_t>();
  const std::size_t n = spec.directions;
  spec.travel = j.at("travel").get<std::vector<std::int64_t>>();
  for (std::size_t p : j.at("pred").get<std::vector<std::size_t>>()) {
    if (p == 0) throw std::invalid_argument("network.pred is 1-based");
    spec.pred.push_back(p - 1);
  }
  for (const json& row : j.at("connections")) {
    std::vector<std::size_t> c;
    for (std::size_t v : row.get<std::vector<std::size_t>>()) {
      if (v == 0) throw std::invalid_argument("network.connections is 1-based");
      c.push_back(v - 1);
    }
    spec.connections.push_back(std::move(c));
  }
  const json l = j.contains("L") ? j.at("L") : json(0);
  if (l.is_array()) {
    spec.headway_bound = l.get<std::vector<std::int64_t>>();
  } else {
    spec.headway_bound.assign(n, l.get<std::int64_t>());
  }
  const json m = j.contains("M") ? j.at("M") : json(0);
  if (m.is_array()) {
    for (const json& row : m) {
      spec.connection_bound.push_back(row.get<std::vector<std::int64_t>>());
    }
  } else {
    spec.connection_bound.assign(
        n, std::vector<std::int64_t>(n, m.get<std::int64_t>()));
  }
  spec.validate();
  return spec;
}

std::string matrix_json(const TropMatrix& m) { return dump(matrix_to_json(m)); }

std::string vector_json(const Vec& v) { return dump(vec_to_json(v)); }

std::string semimodule_json(const Semimodule& s) {
  return dump(semimodule_to_json(s));
}

std::string generators_json(const GeneratorSet& g) {
  json gens = json::array();
  for (const Vec& c : g.cols) gens.push_back(vec_to_json(c));
  return dump(json{{"dim", g.dim}, {"generators", gens}});
}

std::string star_json(const StarResult& r) {
  json j{{"diverged", r.diverged()}};
  if (!r.diverged()) j["star"] = matrix_to_json(*r.star);
  return dump(j);
}

std::string invariance_json(const InvarianceReport& r) {
  return dump(invariance_to_json(r));
}

std::string feedback_json(const FeedbackResult& r) {
  return dump(feedback_to_json(r));
}

std::string volume_json(const VolumeResult& r) {
  json j;
  if (r.finite()) {
    j = json{{"status", "finite"}, {"volume", r.count}};
  } else {
    j = json{{"status", "requires_all_finite_generators"}};
  }
  return dump(j);
}

std::string simulation_json(const SimulationResult& r) {
  json states = json::array();
  for (const Vec& x : r.states) states.push_back(vec_to_json(x));
  json violations = json::array();
  for (const Violation& v : r.violations) violations.push_back(violation_to_json(v));
  return dump(json{{"states", states}, {"violations", violations}});
}

std::string synthesis_json(const SynthesisOutput& s) {
  const char* status = nullptr;
  switch (s.status) {
    case SynthesisOutput::Status::synthesized: status = "synthesized"; break;
    case SynthesisOutput::Status::infeasible_spec: status = "infeasible_spec"; break;
    case SynthesisOutput::Status::cap_exceeded: status = "cap_exceeded"; break;
    case SynthesisOutput::Status::not_algebraically_invariant:
      status = "not_algebraically_invariant";
      break;
  }
  json j{{"status", status},
         {"A", matrix_to_json(s.a)},
         {"Abar", matrix_to_json(s.abar)},
         {"Bbar", matrix_to_json(s.bbar)},
         {"E", matrix_to_json(s.e)}};
  if (s.e_star) j["E_star"] = matrix_to_json(*s.e_star);
  if (s.k) j["K"] = semimodule_to_json(*s.k);
  if (s.invariance) j["invariance"] = invariance_to_json(*s.invariance);
  if (s.k_star) j["K_star"] = semimodule_to_json(*s.k_star);
  if (s.feedback) j["feedback"] = feedback_to_json(*s.feedback);
  if (s.periodic) {
    j["periodic"] = json{{"lambda", s.periodic->lambda},
                         {"u0", vec_to_json(s.periodic->u0)},
                         {"xbar0", vec_to_json(s.periodic->xbar0)}};
  }
  return dump(j);
}

std::string matrix_text(const TropMatrix& m) { return matrix_text_impl(m); }

std::string semimodule_text(const Semimodule& s) {
  std::ostringstream out;
  out << "dim " << s.dim();
  if (s.domain() == ScalarDomain::nonpositive) out << " (nonpositive domain)";
  out << ", " << s.gens().cols.size() << " generator(s)\n";
  if (!s.trivial_module()) out << matrix_text_impl(s.gens().matrix());
  return out.str();
}

std::string star_text(const StarResult& r) {
  if (r.diverged()) return "diverged (a positive-mean cycle is reachable)\n";
  return matrix_text_impl(*r.star);
}

std::string invariance_text(const InvarianceReport& r) {
  std::ostringstream out;
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    out << "X_" << (i + 1) << ":\n";
    out << semimodule_text(r.steps[i]);
  }
  if (r.stabilized_at) {
    out << "stabilized at step " << *r.stabilized_at << "\n";
  } else {
    out << "did not stabilize within " << r.steps.size() << " steps\n";
  }
  if (r.hilbert_bound) out << "a-priori bound " << *r.hilbert_bound << "\n";
  return out.str();
}

std::string feedback_text(const FeedbackResult& r) {
  if (!r.found()) return "not algebraically invariant\n";
  std::ostringstream out;
  out << "feedback found\nF:\n" << matrix_text_impl(*r.f);
  if (r.g) out << "G:\n" << matrix_text_impl(*r.g);
  return out.str();
}

std::string volume_text(const VolumeResult& r) {
  if (!r.finite()) return "volume requires all-finite generators\n";
  return "volume " + std::to_string(r.count) + "\n";
}

std::string simulation_text(const SimulationResult& r) {
  std::ostringstream out;
  for (std::size_t k = 0; k < r.states.size(); ++k) {
    out << "x(" << k << ") =";
    for (Scalar s : r.states[k]) out << ' ' << to_string(s);
    out << '\n';
  }
  for (const Violation& v : r.violations) {
    if (v.kind == Violation::Kind::headway) {
      out << "violation: headway " << v.amount << " > " << v.bound << " in d"
          << (v.to_dir + 1) << " at step " << v.step << '\n';
    } else {
      out << "violation: " << v.amount << "-unit wait at the d"
          << (v.from_dir + 1) << " -> d" << (v.to_dir + 1)
          << " connection (bound " << v.bound << ") at step " << v.step << '\n';
    }
  }
  if (r.violations.empty()) out << "no violations\n";
  return out.str();
}

std::string synthesis_text(const SynthesisOutput& s) {
  std::ostringstream out;
  out << "A:\n" << matrix_text_impl(s.a);
  switch (s.status) {
    case SynthesisOutput::Status::infeasible_spec:
      out << "infeasible: the constraint star diverges\n";
      return out.str();
    case SynthesisOutput::Status::cap_exceeded:
      out << "iteration cap exceeded before stabilization\n";
      return out.str();
    case SynthesisOutput::Status::not_algebraically_invariant:
      out << "K* admits no linear state feedback\n";
      return out.str();
    case SynthesisOutput::Status::synthesized:
      break;
  }
  out << "E*:\n" << matrix_text_impl(*s.e_star);
  out << "stabilized at step " << *s.invariance->stabilized_at << "\n";
  out << "K*:\n" << semimodule_text(*s.k_star);
  out << feedback_text(*s.feedback);
  if (s.periodic) {
    out << "periodic timetable: lambda " << s.periodic->lambda << ", u0 =";
    for (Scalar v : s.periodic->u0) out << ' ' << to_string(v);
    out << ", start =";
    for (Scalar v : s.periodic->xbar0) out << ' ' << to_string(v);
    out << '\n';
  } else {
    out << "no periodic witness found\n";
  }
  return out.str();
}

}  // namespace tropctl::io
