#ifndef SHIFTEQ_JSON_IO_HPP
#define SHIFTEQ_JSON_IO_HPP

#include "shifteq/bimodule.hpp"
#include "shifteq/dimension_group.hpp"
#include "shifteq/int_matrix.hpp"
#include "shifteq/rat_matrix.hpp"
#include "shifteq/shift_equivalence.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace shifteq {

// All emitted JSON uses insertion order, so identical inputs serialize to
// identical bytes.
using Json = nlohmann::ordered_json;

// Integers inside the int64 range become JSON numbers, larger ones decimal
// strings; readers accept both.
Json json_of(const BigInt& n);
// Rationals with denominator 1 follow the integer rule, others are "p/q".
Json json_of(const BigRat& r);
Json json_of(const IntMatrix& M);  // array of row arrays
Json json_of(const RatMatrix& M);
Json json_of(const DimClass& c);        // {"v": column entries, "k": stage}
Json json_of(const VerifyReport& rep);  // {"ok", "checks": [{name, pass, residual?}]}
Json json_of(const SEWitness& w);       // {"A","B","R","S","m"}

// Parsers throw DomainError with a message naming the offending field.
BigInt bigint_from_json(const Json& j, const std::string& what);
IntMatrix matrix_from_json(const Json& j, const std::string& what);
// Column vector from a flat array.
IntMatrix column_from_json(const Json& j, const std::string& what);

SEWitness witness_from_json(const Json& j);                // {A,B,R,S,m}
RelaxedSEWitness relaxed_witness_from_json(const Json& j); // {A,B,R,S,T,m,k}
GradedHomSpec homspec_from_json(const Json& j);            // {A,B,images:[{v,l}]}
// {A, steps: [{R,S}, ...], B}
struct ChainData {
  IntMatrix A, B;
  std::vector<SSEStep> steps;
};
ChainData chain_from_json(const Json& j);

// Reads a whole file; DomainError if unreadable.
std::string read_file(const std::string& path);
Json parse_json_file(const std::string& path);

}  // namespace shifteq

#endif
