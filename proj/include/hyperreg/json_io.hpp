#pragma once

#include <string>

#include <json.hpp>

#include "hyperreg/generator.hpp"
#include "hyperreg/verify.hpp"

namespace hyperreg {

using Json = nlohmann::ordered_json;

// Stable JSON-lines record for one hypergraph, edges sorted, no whitespace:
// {"n":6,"d":1,"k":3,"edges":[[1,2,3],[4,5,6]]}
std::string hypergraph_record(const Params& p, const Multigraph& g);

// Permutation dump: a JSON array of the nd labels.
std::string permutation_record(const PermSeq& y);

// BigInt as a JSON number when it fits 64 bits, else a decimal string.
Json big_to_json(const BigInt& v);
Json rat_to_json(const BigRat& r);  // "num/den" string
Json float_to_json(const BigFloat& f);

Json to_json(const Params& p);
Json to_json(const Classification& c);
Json to_json(const ForwardOp& op);
Json to_json(const BackwardOp& op);
Json to_json(const CountReport& r);
Json to_json(const CompareReport& r);
Json to_json(const ClassSizes& s);
Json to_json(const McSummary& s);
Json to_json(const ExhaustiveSummary& s);
Json to_json(const ChiSquareResult& r);
Json to_json(const LevelRatioRow& row);
Json to_json(const std::vector<LevelRatioRow>& rows);
Json to_json(const IdentityReport& r);
Json to_json(const BoundsReport& r);
Json to_json(const UniformityReport& r);
Json to_json(const GenTrace& t);

}  // namespace hyperreg
