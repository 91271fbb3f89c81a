#pragma once

#include "spectral/domain.hpp"
#include "spectral/embedding.hpp"
#include "spectral/expoly.hpp"
#include "spectral/newton_ap.hpp"
#include "spectral/point_sets.hpp"
#include "spectral/search.hpp"
#include "spectral/structure.hpp"

#include "json.hpp"

#include <iosfwd>
#include <stdexcept>

namespace spectral::io {

using nlohmann::json;

// Input does not match the documented schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rationals travel as "p/q" strings; plain JSON integers are accepted on input.
Rational rational_from_json(const json& j);
json to_json(const Rational& r);

// {"intervals": [["left", "right"], ...]}
IntervalUnion domain_from_json(const json& j);
json to_json(const IntervalUnion& omega);

// {"period": "p/q", "offsets": [...]}
PeriodicSet periodic_set_from_json(const json& j);
json to_json(const PeriodicSet& s);

// {"points": [...]}
DiscreteSampleSet sample_set_from_json(const json& j);
json to_json(const DiscreteSampleSet& s);

json to_json(const AffineMap& m);
json to_json(const MultiplicityFunction& f);
json to_json(const ZeroVerdict& v);
json to_json(const APVerdict& v);
json to_json(const SpanBasis& b);
json to_json(const PeriodicExtension& e);
json to_json(const GapAlphabet& g);
json to_json(const WindowProfile& p);
json to_json(const FiberDecomposition& dec);
json to_json(const SpectrumVerdict& v);
json to_json(const SearchResult& r);
json to_json(const std::vector<CrosscheckRow>& rows);

// CSV header `R,n_minus,n_plus,density` then one row per report.
void write_density_csv(std::ostream& out, const std::vector<DensityReport>& reports);

}  // namespace spectral::io
