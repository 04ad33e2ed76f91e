#pragma once

#include <string>

#include "tropctl/feedback.hpp"
#include "tropctl/invariance.hpp"
#include "tropctl/network.hpp"
#include "tropctl/semimodule.hpp"
#include "tropctl/twosided.hpp"

namespace tropctl::io {

/// JSON wire formats (entries are integers or "-inf"/"+inf" tokens):
///   matrix      {"rows": [[entry, ...], ...]}
///   vector      [entry, ...]
///   semimodule  {"dim": n, "generators": [[col], ...]}
///               plus optional "domain": "full" | "nonpositive"
///   system      {"D": matrix, "C": matrix}
///   network     {"directions": n, "travel": [...], "pred": [...],
///                "connections": [[...], ...], "L": int|[...],
///                "M": int|[[...], ...]}  (1-based direction indices)
/// Emission is canonical: sorted keys, fixed indentation, sorted
/// generator columns — identical inputs give identical bytes.

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

TropMatrix parse_matrix(const std::string& text);
Vec parse_vector(const std::string& text);
Semimodule parse_semimodule(const std::string& text);
TwoSidedSystem parse_system(const std::string& text);
NetworkSpec parse_network(const std::string& text);

std::string matrix_json(const TropMatrix& m);
std::string vector_json(const Vec& v);
std::string semimodule_json(const Semimodule& s);
std::string generators_json(const GeneratorSet& g);
std::string star_json(const StarResult& r);
std::string invariance_json(const InvarianceReport& r);
std::string feedback_json(const FeedbackResult& r);
std::string volume_json(const VolumeResult& r);
std::string simulation_json(const SimulationResult& r);
std::string synthesis_json(const SynthesisOutput& s);

std::string matrix_text(const TropMatrix& m);
std::string semimodule_text(const Semimodule& s);
std::string star_text(const StarResult& r);
std::string invariance_text(const InvarianceReport& r);
std::string feedback_text(const FeedbackResult& r);
std::string volume_text(const VolumeResult& r);
std::string simulation_text(const SimulationResult& r);
std::string synthesis_text(const SynthesisOutput& s);

}  // namespace tropctl::io
