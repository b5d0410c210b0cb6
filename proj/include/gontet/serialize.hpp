#pragma once

#include <complex>
#include "json.hpp"

#include "gontet/batch.hpp"
#include "gontet/bigint.hpp"
#include "gontet/hilbert.hpp"
#include "gontet/identities.hpp"
#include "gontet/laurent.hpp"
#include "gontet/quantum.hpp"
#include "gontet/ratfunc.hpp"
#include "gontet/spinnet.hpp"
#include "gontet/surd.hpp"
#include "gontet/triples.hpp"

namespace gontet {

using Json = nlohmann::ordered_json;

// Big values are always written as decimal strings.
Json to_json(const BigInt& v);
Json to_json(const BigRational& v);
Json to_json(const Surd& v);  // {"coeff": "p/q", "radicand": "d"}
Json to_json(const LaurentPoly& p);  // {"terms": [[e, "c"], ...]}
Json to_json(const RatFunc& r);  // {"num": ..., "den": ...}
Json to_json(const QFraction& f);
Json to_json(const SpinValue& v);
Json to_json(const Triple& t);  // [a,b,c]
Json to_json(const TetLabels& t);  // [[a,b,c],[d,e,f]]
Json to_json(const RationalMatrix& m);
Json to_json(const QMatrix& m);
Json to_json(const IdentityReport& r);
Json to_json(const QIdentityReport& r);
Json to_json(const SuiteResult& r);
Json to_json(std::complex<double> z);

LaurentPoly laurent_from_json(const Json& j);
Surd surd_from_json(const Json& j);

}  // namespace gontet
