#pragma once

#include "ncdegen/complexes.hpp"
#include "ncdegen/incidence.hpp"

#include <string>

namespace ncdegen::json_io {

// Deterministic (byte-stable) JSON renderings of the core objects; the golden
// files under tests/ are frozen copies of these.
std::string incidence_scheme_json(const incidence::Scheme& scheme);
std::string complex_json(const complexes::SimplicialComplex2& c);
std::string surfaces_json();  // per component: basis, Gram diagonal, curve class table
std::string presentation_json(const complexes::GroupPresentation& p);
// m05 and the spanning-tree presentation of the dual complex, one document
std::string presentations_json(const incidence::Scheme& scheme);

}  // namespace ncdegen::json_io
