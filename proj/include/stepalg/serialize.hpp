#pragma once

#include <string>

#include <json.hpp>

#include "stepalg/generators.hpp"

namespace stepalg {

// All JSON output uses ordered_json so documents are byte-deterministic:
// object keys appear in insertion order, and every rational is rendered
// as a canonical "p/q" string (GMP canonical form), never as a float.
using ordered_json = nlohmann::ordered_json;

ordered_json weight_json(const Weight& w);
Weight parse_weight(const ordered_json& j);

ordered_json affine_json(const AffineForm& f);
AffineForm parse_affine(const ordered_json& j);

// {num: [[coeff, [exponents]], ...], den: [[affine form, power], ...]}
ordered_json cartan_scalar_json(const CartanScalar& s);
CartanScalar parse_cartan_scalar(const ordered_json& j);

// Summary of the pair: ambient algebra, subalgebra roots, complement
// classes and the Cartan split.
ordered_json describe_json(const LeviPair& lp);

// One complement model: class roots, side, nodes (label + weight) and
// the labeled arrows of its diagram.
ordered_json model_json(const ComplementModel& m);

// One generator: node, and one term per route with the route's node
// labels, the word of the term in product order, and its coefficient.
ordered_json generator_json(const ComplementModel& m, const MickelssonGenerator& g);

// Rebuilds the element of a serialized generator by multiplying the
// labeled factors of each term and its coefficient; inverse of
// generator_json up to PBW normalization.
AlgebraElement parse_generator_element(const ComplementModel& m,
                                       const ordered_json& generator);

// Full document for a family of models and their generators; the
// verification value is emitted as-is (null when not requested).
ordered_json document_json(const LeviPair& lp,
                           const std::vector<ComplementModel>& models,
                           const std::vector<std::vector<MickelssonGenerator>>& gens,
                           ordered_json verification);

// Human-oriented renderings.
std::string affine_latex(const AffineForm& f);
std::string cartan_scalar_latex(const CartanScalar& s);
std::string generator_latex(const ComplementModel& m, const MickelssonGenerator& g);
std::string generator_text(const ComplementModel& m, const MickelssonGenerator& g);

}  // namespace stepalg
