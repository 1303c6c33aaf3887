#pragma once

#include <json.hpp>

#include "sptri/invariant_count.hpp"
#include "sptri/trivector.hpp"

namespace sptri
{

using Json = nlohmann::ordered_json;

/// {"two_n": int, "coords": [["a,b,c", "num/den"], ...]}, nonzero
/// coordinates in lexicographic order.
Json trivector_to_json(Trivector const &t);
/// Accepts any order of distinct indices in a key and canonicalizes the
/// sign; repeated keys accumulate. Throws ParseError.
Trivector trivector_from_json(nlohmann::json const &j);

/// {"two_n": int, "F": [["h,i", "num/den"], ...], "DF": [["h,i,l", "num/den"], ...]}
/// where "h,i,l" holds dF_hi/dx^l.
Json jet_to_json(Jet1TwoForm const &jet);
Jet1TwoForm jet_from_json(nlohmann::json const &j);

Json to_json(RankCertificate const &c);
Json to_json(GenericRankReport const &r);
Json to_json(VerificationReport const &r);
Json to_json(StabilizerKernel const &k);

} // namespace sptri
