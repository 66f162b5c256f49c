#pragma once

// JSON forms of the exact and numeric types, and a dumper that prints
// floats with 17 significant digits.

#include <initializer_list>
#include <string>

#include <json.hpp>

#include "lng/algmodel.hpp"
#include "lng/harness.hpp"

namespace lng {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j);

// throws BadRequest when j has a key outside `allowed`
void check_fields(const Json& j, std::initializer_list<const char*> allowed);

Json to_json(const Q& q);
Json to_json(cplx z);
Json to_json(const NumComplex& z);
Json to_json(const ExactScalar& e);
Json to_json(const QVector& v);
Json to_json(const Witness& w);
Json to_json(const Lattice& L);
Json to_json(const GroupDescriptor& g);
Json to_json(const IsoWitness& w);
Json to_json(const AutDescriptor& a);
Json to_json(const AlgGroupLabel& l);
Json to_json(const ProjPoint& p);
Json to_json(const PeriodGroup& p);
Json to_json(const Report& r);

Q rational_from_json(const Json& j);
cplx complex_from_json(const Json& j);
ExactScalar scalar_from_json(const Json& j);
QVector qvector_from_json(const Json& j);
Lattice lattice_from_json(const Json& j);
GroupDescriptor descriptor_from_json(const Json& j);

Json parse_json(const std::string& text);

}  // namespace lng
