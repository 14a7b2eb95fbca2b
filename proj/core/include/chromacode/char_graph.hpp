#pragma once

#include "chromacode/coloring.hpp"
#include "chromacode/graph.hpp"
#include "chromacode/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace chromacode {

// f(x1, x2) as a dense |X1| x |X2| table of outcome ids 0..outcome_count-1.
struct FunctionSpec {
    std::size_t x1 = 0;
    std::size_t x2 = 0;
    std::vector<int> table;            // row-major, x1 major
    std::vector<std::string> labels;   // original outcome label of each id

    int operator()(std::size_t a, std::size_t b) const { return table[a * x2 + b]; }
    std::size_t outcome_count() const { return labels.size(); }
};

// Normalizes arbitrary labels (compared as strings, numbers ordered numerically) to dense ids.
FunctionSpec make_function_spec(std::size_t x1, std::size_t x2, const std::vector<std::vector<long long>>& f);
FunctionSpec make_function_spec_labels(std::size_t x1, std::size_t x2,
                                       const std::vector<std::vector<std::string>>& f);

struct JointPMF {
    std::size_t x1 = 0;
    std::size_t x2 = 0;
    std::vector<Rational> probs;  // row-major

    const Rational& operator()(std::size_t a, std::size_t b) const { return probs[a * x2 + b]; }
    std::vector<Rational> marginal1() const;
    std::vector<Rational> marginal2() const;
};

JointPMF make_joint_pmf(std::size_t x1, std::size_t x2, std::vector<Rational> probs);
JointPMF uniform_joint_pmf(std::size_t x1, std::size_t x2);

enum class Source { first = 1, second = 2 };

Graph build_characteristic_graph(const FunctionSpec& spec, const JointPMF& pmf, Source source);

// Throws InvalidArgument if either coloring is invalid on its characteristic graph.
bool verify_coloring_sufficiency(const FunctionSpec& spec, const JointPMF& pmf, const Coloring& c1,
                                 const Coloring& c2);

// Pairs of positive-probability inputs that share a color pair but disagree on f.
struct LookupConflict {
    std::size_t x1a, x2a, x1b, x2b;
};

// Decoder-table check without the validity precondition.
std::optional<LookupConflict> find_lookup_conflict(const FunctionSpec& spec, const JointPMF& pmf,
                                                   const Coloring& c1, const Coloring& c2);
bool lookup_table_consistent(const FunctionSpec& spec, const JointPMF& pmf, const Coloring& c1,
                             const Coloring& c2);

// f(x1,x2) = (x1 + x2) mod 2 with X1 uniform on {0..3}, X2 uniform on {0,1}.
FunctionSpec example1_spec();
JointPMF example1_pmf();

// Support {(e,e), (e+1 mod V, e)} with f = 1 exactly on the second kind; both graphs are C_V.
FunctionSpec cycle_spec(std::size_t v);
JointPMF cycle_pmf(std::size_t v);

}  // namespace chromacode
