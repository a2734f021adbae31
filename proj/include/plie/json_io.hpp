#pragma once

#include "plie/bialgebra.hpp"
#include "plie/jets.hpp"
#include "plie/phi.hpp"
#include "plie/poisson.hpp"
#include "plie/poly.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace plie {

// Stable key order keeps report payloads byte-identical across runs.
using ojson = nlohmann::ordered_json;

// Rationals cross every file boundary as canonical "p/q" strings.
ojson poly_to_json(const CoordPoly& p);
CoordPoly poly_from_json(const ojson& j, bool require_laurent_x1 = true);

ojson jet_to_json(const JetElement& x);
JetElement jet_from_json(const ojson& j);

ojson series_to_json(const SeriesQ& s);
SeriesQ series_from_json(const ojson& j);

// Sparse phi storage: only i < j entries; antisymmetry rebuilds the rest.
ojson phi_to_json(const PhiSeries& phi);
PhiSeries phi_from_json(const ojson& j);

// Structure files: {"kind": "mu|lambda|omega|phi|r|alpha", ...payload}.
ojson mu_to_json(const MuSeq& m);
MuSeq mu_from_json(const ojson& j);
ojson lambda_to_json(const LambdaTable& t, std::optional<int> d = std::nullopt);
LambdaTable lambda_from_json(const ojson& j);
ojson omega_to_json(const OmegaTable& w, std::optional<int> d = std::nullopt);
OmegaTable omega_from_json(const ojson& j);
ojson rmatrix_to_json(const Wedge2& r);
Wedge2 rmatrix_from_json(const ojson& j);
ojson alpha_to_json(const AlphaTable& a);
AlphaTable alpha_from_json(const ojson& j);

ojson solve_result_to_json(const SolveResult& s);

// Envelope helpers.
std::string structure_kind(const ojson& j);
ojson load_json_file(const std::string& path);
void write_json_file(const std::string& path, const ojson& j);

} // namespace plie
