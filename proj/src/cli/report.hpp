#pragma once

#include <json.hpp>

#include "exact/sumfree.hpp"
#include "fourier/dilation.hpp"
#include "freiman/dense_model.hpp"
#include "residue/residue.hpp"
#include "testfn/mps.hpp"

namespace sf {

using Json = nlohmann::ordered_json;

Json to_json(const IntegerSet& s);
Json to_json(const SumFreeResult& r);
Json to_json(const DilationBound& d);
Json to_json(const ModelCertificate& c);
Json to_json(const ResidueTree& t, const ResidueSignature& s);
Json to_json(const ResidueTree& t);
Json to_json(const ResidueTree& t, const Chain& c, const ChainAudit& a);
Json to_json(const ResidueTree& t, const DichotomyReport& d);
// include_phi: add the grid values of Phi_J as [re, im] pairs
Json to_json(const CertifiedBound& c, bool include_phi = false);
Json to_json(const EnergyReport& r);

}  // namespace sf
