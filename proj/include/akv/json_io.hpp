#ifndef AKV_JSON_IO_HPP
#define AKV_JSON_IO_HPP

#include <json.hpp>

#include "akv/chern.hpp"
#include "akv/graded.hpp"
#include "akv/hermitian.hpp"

namespace akv {

using Json = nlohmann::json;

// Complex matrices serialize as nested arrays of [re, im] pairs.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json space_to_json(const HermitianSpace& s);

// {"deg0": "p/q", "deg1": {"c1(M)": "p/q"}, "deg2": {"c1(M)*c1(N)": "p/q"}}
Json graded_to_json(const GradedClass& c);

// {"pushed": {"c1(M)*c1(N)": "p/q"}, "analytic": "p/q"}
Json base_to_json(const BaseClass& b);

Json symbol_to_json(const BundleSymbol& s);
Json pairing_report_to_json(const PairingReport& r);

}  // namespace akv

#endif
