#include "spectral/json_io.hpp"

#include <ostream>

namespace spectral::io {

namespace {

json rationals(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& r : v) arr.push_back(to_json(r));
  return arr;
}

std::vector<Rational> rationals_from(const json& arr, const char* what) {
  if (!arr.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const auto& e : arr) out.push_back(rational_from_json(e));
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json witness_json(const std::optional<APWitness>& w) {
  if (!w) return nullptr;
  return {{"k", w->k}, {"value", to_json(w->value)}};
}

}  // namespace

Rational rational_from_json(const json& j) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  throw SchemaError("rational must be a \"p/q\" string, got " + j.dump());
}

json to_json(const Rational& r) { return r.to_string(); }

IntervalUnion domain_from_json(const json& j) {
  const json& arr = field(j, "intervals");
  if (!arr.is_array()) throw SchemaError("\"intervals\" must be an array");
  std::vector<std::pair<Rational, Rational>> pairs;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2) throw SchemaError("each interval must be a [left, right] pair");
    pairs.emplace_back(rational_from_json(p[0]), rational_from_json(p[1]));
  }
  try {
    return IntervalUnion::from_endpoints(pairs);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

json to_json(const IntervalUnion& omega) {
  json arr = json::array();
  for (const auto& iv : omega.intervals()) arr.push_back({to_json(iv.left), to_json(iv.right())});
  return {{"intervals", arr}};
}

PeriodicSet periodic_set_from_json(const json& j) {
  const Rational period = rational_from_json(field(j, "period"));
  auto offsets = rationals_from(field(j, "offsets"), "\"offsets\"");
  try {
    return PeriodicSet(period, std::move(offsets));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

json to_json(const PeriodicSet& s) { return {{"period", to_json(s.period())}, {"offsets", rationals(s.offsets())}}; }

DiscreteSampleSet sample_set_from_json(const json& j) {
  auto pts = rationals_from(field(j, "points"), "\"points\"");
  try {
    return DiscreteSampleSet(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

json to_json(const DiscreteSampleSet& s) { return {{"points", rationals(s.points())}}; }

json to_json(const AffineMap& m) { return {{"scale", to_json(m.scale)}, {"shift", to_json(m.shift)}}; }

json to_json(const MultiplicityFunction& f) {
  json pieces = json::array();
  for (const auto& p : f.pieces()) pieces.push_back({{"lo", to_json(p.lo)}, {"hi", to_json(p.hi)}, {"count", p.count}});
  return {{"d", to_json(f.d())}, {"pieces", pieces}};
}

json to_json(const ZeroVerdict& v) {
  json j{{"is_zero", v.is_zero}, {"method", to_string(v.method)}};
  if (v.witness) j["witness"] = *v.witness;
  return j;
}

json to_json(const APVerdict& v) {
  json pairing = nullptr;
  if (v.pairing) {
    pairing = json::array();
    for (const auto& [r, l] : *v.pairing) pairing.push_back({r, l});
  }
  return {{"d", to_json(v.d)},
          {"hypothesis_holds", v.hypothesis_holds},
          {"full_ap_in_zeroset", v.full_ap_in_zeroset},
          {"d_is_integer", v.d_is_integer},
          {"tiles", v.tiles},
          {"pairing", pairing},
          {"failure_witness", witness_json(v.failure_witness)},
          {"spot_check_bound", v.spot_check_bound},
          {"method", "exact"}};
}

json to_json(const SpanBasis& b) {
  json pts = json::array();
  if (b.method == ZeroMethod::exact) {
    pts = rationals(b.base_points);
  } else {
    for (double x : b.numeric_points) pts.push_back(x);
  }
  return {{"rank", b.rank}, {"base_points", pts}, {"method", to_string(b.method)}};
}

json to_json(const PeriodicExtension& e) {
  const auto& c = e.certificate;
  return {{"set", to_json(e.set)},
          {"certificate",
           {{"orthogonal", c.orthogonal},
            {"ap_hypothesis", c.ap_hypothesis},
            {"pairs_checked", c.pairs_checked},
            {"shift_bound", c.shift_bound},
            {"failure", c.failure ? json(*c.failure) : json(nullptr)},
            {"method", "exact"}}}};
}

json to_json(const GapAlphabet& g) { return {{"gaps", rationals(g.gaps)}}; }

json to_json(const WindowProfile& p) {
  json wins = json::array();
  for (const auto& w : p.windows) {
    wins.push_back({{"k", w.k.str()},
                    {"points", rationals(w.points)},
                    {"word", rationals(w.word)},
                    {"exit_gap", w.exit_gap ? to_json(*w.exit_gap) : json(nullptr)},
                    {"dim", w.dim},
                    {"complete", w.complete}});
  }
  return {{"window_length", to_json(p.window_length)},
          {"windows", wins},
          {"distinct_words", p.distinct_words},
          {"word_bound", p.word_bound.str()},
          {"max_dim", p.max_dim},
          {"uniform_dim", p.uniform_dim},
          {"method", "exact"}};
}

json to_json(const FiberDecomposition& dec) {
  json classes = json::array();
  for (const auto& c : dec.classes) {
    json pieces = json::array();
    for (const auto& e : c.pieces) pieces.push_back({to_json(e.left), to_json(e.right())});
    classes.push_back({{"E", pieces}, {"A", c.shifts}});
  }
  return {{"d", dec.d}, {"classes", classes}, {"invariants_hold", decomposition_invariants_hold(dec)}, {"method", "exact"}};
}

json to_json(const SpectrumVerdict& v) {
  json fp = nullptr;
  if (v.failing_pair)
    fp = {{"lambda_i", to_json(v.failing_pair->lambda_i)},
          {"lambda_j", to_json(v.failing_pair->lambda_j)},
          {"k", v.failing_pair->k}};
  return {{"is_spectrum", v.is_spectrum},
          {"orthogonality_certified", v.orthogonality_certified},
          {"density_ok", v.density_ok},
          {"d_integer", v.d_integer},
          {"tiles", v.tiles},
          {"failing_pair", fp},
          {"shift_bound", v.shift_bound},
          {"method", "exact"}};
}

json to_json(const SearchResult& r) {
  json spectra = json::array();
  for (std::size_t i = 0; i < r.spectra.size(); ++i) {
    json s = to_json(r.spectra[i]);
    s["translation_class"] = r.translation_class[i];
    spectra.push_back(std::move(s));
  }
  json grids = json::array();
  for (const auto& g : r.grids)
    grids.push_back({{"d", g.d},
                     {"tiles", g.tiles},
                     {"ap_hypothesis", g.ap_hypothesis},
                     {"denominator", g.denominator.str()},
                     {"candidates", g.candidates},
                     {"found", g.found}});
  return {{"spectra", spectra},
          {"grids", grids},
          {"budget_exhausted", r.budget_exhausted},
          {"nodes", r.nodes},
          {"method", "exact"}};
}

json to_json(const std::vector<CrosscheckRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"d", r.d},
                   {"tiles", r.tiles},
                   {"ap_hypothesis", r.ap_hypothesis},
                   {"spectra_found", r.spectra_found},
                   {"minimal_period_spectrum", r.minimal_period_spectrum},
                   {"grid_denominator", r.grid_denominator.str()},
                   {"budget_exhausted", r.budget_exhausted}});
  return {{"rows", arr}, {"method", "exact"}};
}

void write_density_csv(std::ostream& out, const std::vector<DensityReport>& reports) {
  out << "R,n_minus,n_plus,density\n";
  for (const auto& r : reports)
    out << r.window_length << ',' << r.n_minus << ',' << r.n_plus << ',' << r.density << '\n';
}

}  // namespace spectral::io
