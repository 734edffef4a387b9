#ifndef DERIVSPACE_SERIALIZE_HPP
#define DERIVSPACE_SERIALIZE_HPP

#include <json.hpp>

#include "derivspace/derivatives.hpp"
#include "derivspace/exactla.hpp"
#include "derivspace/reconstruct.hpp"

namespace derivspace {

/// Name of the canonical monomial order, echoed in every serialized matrix.
inline constexpr const char* kMonomialOrder = "grlex-desc";

nlohmann::json to_json(const Subspace& s);
/// Throws FormatError on malformed input, DimensionMismatch if the basis is
/// not canonical.
Subspace subspace_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExactMatrix& m);
nlohmann::json to_json(const Catalecticant& c);
nlohmann::json to_json(const ReconstructionResult& r);
nlohmann::json to_json(const RelationMatrix& a);
nlohmann::json to_json(const SymmetryReport& s);
nlohmann::json to_json(const TheoremReport& t);

} // namespace derivspace

#endif // DERIVSPACE_SERIALIZE_HPP
