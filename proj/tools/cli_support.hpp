#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "logriemann/ends.hpp"
#include "logriemann/numerics.hpp"
#include "logriemann/sheet_complex.hpp"
#include "logriemann/skeleton.hpp"

namespace lrs::cli {

// "re,im"
Complex parse_complex(const std::string& s);
// "re,im;re,im;..."
std::vector<Complex> parse_complex_list(const std::string& s);
// "3", "-1.5", "2i", "1+2i", "-0.5-i"
Complex parse_coefficient(const std::string& s);
// "k:c0,c1,..." : c0 z^k + c1 z^{k+1} + ...
LaurentPoly parse_laurent(const std::string& s);
// "c0,c1,..."
Polynomial parse_polynomial(const std::string& s);
// "8;64;512"
std::vector<long> parse_long_list(const std::string& s);

/// Writes through a temporary file in the same directory and renames it into place.
void write_atomic(const std::string& path, const std::string& content);
/// write_atomic, or stdout when path is empty.
void emit(const std::string& path, const std::string& content);

std::string format_double(double x);  // %.17g
std::string dump(const nlohmann::json& j);

nlohmann::json complex_json(Complex z);
nlohmann::json validation_json(const ValidationReport& r);
nlohmann::json census_json(const std::vector<CensusEntry>& census);
nlohmann::json ends_json(const EndsReport& r);
nlohmann::json witness_json(const std::vector<std::string>& cycle, const EmbeddingWitness& w);
nlohmann::json topology_json(const std::vector<ComponentTopology>& t);
nlohmann::json probe_json(const ProbeReport& r, double cluster_tol);

}  // namespace lrs::cli
