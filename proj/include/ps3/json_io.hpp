#pragma once
// JSON (de)serialization for the file formats the command-line tool speaks,
// plus the small CSV/SVG emitters.  Numbers are plain JSON numbers except
// points at infinity, which use the string sentinels "inf" / "-inf".

#include <string>

#include "json.hpp"
#include "ps3/membrane.hpp"
#include "ps3/moduli.hpp"
#include "ps3/pants.hpp"
#include "ps3/ratfun.hpp"
#include "ps3/recon.hpp"
#include "ps3/spectral.hpp"

namespace ps3 {

using json = nlohmann::json;

// extended reals with the "inf"/"-inf" sentinels
json json_real(double x);
double real_from_json(const json& j);

// rational maps: {"num":[n0,n1,n2,n3],"den":[d0,d1,d2,d3]}
json to_json(const RationalDeg3& R);
RationalDeg3 rational_from_json(const json& j);

// pants: {"slots":[{"lo":..,"hi":..,"color":"red"},...]}
json to_json(const RealSlitPants& p);
RealSlitPants pants_from_json(const json& j);

json to_json(const ModuliTriple& t);
ModuliTriple moduli_from_json(const json& j);

// one-way debug/report serializations
json to_json(const MembraneSpec& s);
MembraneSpec spec_from_json(const json& j);
json to_json(const SurfaceAtlas& a);   // charts, slits, seams, ovals
json to_json(const MatchResult& m);
json to_json(const VerifyReport& r);
json spectrum_sidecar(const SpectrumResult& sp);  // coefficient vectors

std::string spectrum_csv(const SpectrumResult& sp);
std::string reconstruction_csv(const ReconstructedU& rec);

// plots: the membrane chart diagram and a plain graph of u
std::string membrane_svg(const SurfaceAtlas& a);
std::string reconstruction_svg(const ReconstructedU& rec);

// file helpers (throw InvalidInput on I/O or parse failure)
json load_json(const std::string& path);
void save_text(const std::string& path, const std::string& content);

}  // namespace ps3
