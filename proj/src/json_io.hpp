#pragma once

#include <nlohmann/json.hpp>

#include "gaussmanin.hpp"
#include "hurwitz.hpp"
#include "quasimodular.hpp"
#include "symgroup.hpp"
#include "theta.hpp"

namespace qmh {

/* Insertion-ordered documents so serialized output is byte-stable and keys
 * appear in the documented order. Rationals are always rendered as strings,
 * "p" or "p/q", never as floating point. */
using Json = nlohmann::ordered_json;

Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

Json to_json(const BiSeries& b);

Json to_json(const QMPolynomial& p);
Json to_json(const RecognitionReport& r);

Json to_json(const Partition& p);
Json to_json(const ClassMatrix& m);
Json to_json(const HurwitzTable& t);

Json to_json(const CrosscheckReport& r);

Json to_json(const Poly3& p);
Json to_json(const RationalFunction& f);
Json to_json(const VectorField& v);
Json to_json(const ConnectionReport& r);
Json to_json(const Sl2Report& r);

}  // namespace qmh
