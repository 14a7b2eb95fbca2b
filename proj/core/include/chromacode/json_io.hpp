#pragma once

#include "chromacode/char_graph.hpp"
#include "chromacode/codec.hpp"
#include "chromacode/coloring.hpp"
#include "chromacode/entropy.hpp"
#include "chromacode/expansion.hpp"
#include "chromacode/graph.hpp"
#include "chromacode/rational.hpp"
#include "chromacode/spectral.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace chromacode {

using Json = nlohmann::json;

// {"vertices": V, "edges": [[u,v],...]} plus "tuple_base"/"tuple_len" for powers.
Json to_json(const Graph& g);
// Also accepts {"kind": "cycle"|"complete"|"path", "size": V}.
Graph graph_from_json(const Json& j);

// {"x1": n1, "x2": n2, "f": [[...]]}; entries may be integers or strings.
Json to_json(const FunctionSpec& spec);
FunctionSpec function_spec_from_json(const Json& j);

// {"x1", "x2", "p": [["num/den", ...], ...]}; "uniform" in place of the object or of "p".
Json to_json(const JointPMF& pmf);
JointPMF joint_pmf_from_json(const Json& j, std::size_t x1, std::size_t x2);

Json to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json rationals_to_json(const std::vector<Rational>& v);

Json to_json(const Spectrum& s);
Json to_json(const GershgorinIntervals& g);
Json to_json(const BoundReport& b);
Json to_json(const SplitReport& r);
Json to_json(const EntropyWindow& w);
Json to_json(const HuffmanCode& h);
Json to_json(const ExpansionReport& r);
Json to_json(const RateReport& r);
Json to_json(const CodecPlan& plan);

Json read_json_file(const std::string& path);
// Two-space indent and a trailing newline.
std::string dump_json(const Json& j);
void write_json_file(const std::string& path, const Json& j);

}  // namespace chromacode
