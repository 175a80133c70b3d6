#pragma once

#include <string>

#include <json.hpp>

#include "hadlat/bounds.hpp"
#include "hadlat/hadamard.hpp"

namespace hadlat {

// Field order in emitted objects is fixed, so output bytes are reproducible.
using Json = nlohmann::ordered_json;

// Big integers travel as decimal strings: JSON numbers cap at 2^53 in most
// readers and the exact values matter here.
std::string to_string(const BigInt& x);
std::string to_string(const BigRational& x);  // "p/q", or "p" when q = 1

Json to_json(const DensityEstimate& estimate);
Json to_json(const BoundReport& report);

Json point_to_json(const LatticePoint& v);  // plain array of coordinates
std::string point_to_csv(const LatticePoint& v);

}  // namespace hadlat
