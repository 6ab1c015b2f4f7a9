#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "saitoforge/covering.hpp"
#include "saitoforge/duality.hpp"
#include "saitoforge/saito.hpp"

namespace sf::cli {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "v1";

// Rationals are written as strings ("1/6"); other field elements as
// {"order": N, "coeffs": [...]} in the power basis of Q(zeta_N).
Json to_json(const CycNum& c);
CycNum cycnum_from_json(const Json& j);

Json to_json(const Ring& r);
Ring ring_from_json(const Json& j);

// Terms in canonical order, each [exponents, coefficient]; the ring is
// stored separately.
Json terms_json(const MPoly& p);
MPoly poly_from_json(const Json& j, const Ring& r);

// A polynomial as a term list, otherwise {"num": ..., "den": ...}.
Json to_json(const RatFn& f);
RatFn ratfn_from_json(const Json& j, const Ring& r);

Json to_json(const Matrix<RatFn>& m);
Matrix<RatFn> matrix_from_json(const Json& j, const Ring& r);
Json to_json(const Matrix<MPoly>& m);
Matrix<MPoly> poly_matrix_from_json(const Json& j, const Ring& r);

Json to_json(const SaitoData& s);
SaitoData saito_from_json(const Json& j);
Json to_json(const AlmostSaitoData& a);
AlmostSaitoData almost_from_json(const Json& j);

Json to_json(const ResidualReport& r, const Ring& ring);
Json to_json(const NaturalTest& t, const Ring& ring);
Json to_json(const CoveringRowReport& r);
Json to_json(const LineSearch& l);

// Top-level document {"schema": "v1", "kind": kind, "data": data}.
Json envelope(const std::string& kind, Json data);
// Throws SchemaMismatch on a wrong schema or kind.
const Json& open_envelope(const Json& doc, const std::string& kind);

// Byte-stable text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);
// Throws ParseError on malformed input.
Json parse(const std::string& text);

void store(const std::string& path, const Json& doc);
// Throws ParseError when the file is missing or malformed.
Json load(const std::string& path);

}  // namespace sf::cli
