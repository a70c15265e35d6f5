#include "documents.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "cremona/context.hpp"
#include "cremona/errors.hpp"
#include "cremona/gcd.hpp"
#include "cremona/poly_format.hpp"

namespace cremona::docs {

namespace {

std::string seed_string(uint64_t seed) { return std::to_string(seed); }

const Json& require_key(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    fail(ErrorKind::parse_error, std::string("document is missing the \"") + key +
                                     "\" field");
  }
  return *it;
}

int require_int(const Json& doc, const char* key) {
  const Json& v = require_key(doc, key);
  if (!v.is_number_integer()) {
    fail(ErrorKind::parse_error, std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

std::string require_string(const Json& doc, const char* key) {
  const Json& v = require_key(doc, key);
  if (!v.is_string()) {
    fail(ErrorKind::parse_error, std::string("field \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

std::vector<std::string> require_string_array(const Json& doc, const char* key) {
  const Json& v = require_key(doc, key);
  if (!v.is_array()) {
    fail(ErrorKind::parse_error,
         std::string("field \"") + key + "\" must be an array of strings");
  }
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_string()) {
      fail(ErrorKind::parse_error,
           std::string("field \"") + key + "\" must contain only strings");
    }
    out.push_back(e.get<std::string>());
  }
  return out;
}

Json components_json(const std::vector<Poly>& comps) {
  Json arr = Json::array();
  for (const auto& c : comps) arr.push_back(format_poly(c));
  return arr;
}

bool standard_coordinates(const ContextPtr& ctx) {
  for (int i = 0; i < ctx->size(); ++i) {
    if (ctx->name(i) != "x" + std::to_string(i)) return false;
  }
  return true;
}

// Transfer a polynomial onto a context with the same arity by position.
Poly rename_positional(const Poly& p, const ContextPtr& target) {
  Poly acc = Poly::zero(target);
  for (const auto& [m, c] : p.terms()) {
    acc = acc + Poly::monomial(target, m, c);
  }
  return acc;
}

Json param_value_json(const ParamValue& v) {
  Json j;
  if (v.rational) {
    j["rational"] = to_string(*v.rational);
  } else {
    j["root_of"] = format_poly(*v.minimal_polynomial);
  }
  return j;
}

Json drop_points_json(const std::vector<DropPoint>& points) {
  Json arr = Json::array();
  for (const auto& p : points) {
    Json j;
    j["at"] = param_value_json(p.at);
    j["degree"] = p.degree;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json oracle_config_json(const OracleConfig& cfg) {
  Json j;
  j["prime_bits"] = cfg.prime_bits;
  j["trials"] = cfg.trials;
  j["seed"] = seed_string(cfg.seed);
  return j;
}

Json scan_options_json(const DropScanOptions& options) {
  Json j;
  j["seed"] = seed_string(options.seed);
  j["coefficient_bound"] = options.coefficient_bound;
  j["lines"] = options.lines;
  return j;
}

Json primes_json(const std::vector<uint64_t>& primes) {
  Json arr = Json::array();
  for (uint64_t p : primes) arr.push_back(std::to_string(p));
  return arr;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json load_document(const std::string& source) {
  std::string text;
  if (!source.empty() && source.front() == '{') {
    text = source;
  } else if (source.rfind("builtin:", 0) == 0) {
    return builtin_document(source.substr(8));
  } else {
    std::ifstream in(source);
    if (!in) {
      fail(ErrorKind::invalid_argument, "cannot read document file '" + source + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::string> builtin_names() {
  return {"standard-quadratic", "henon", "nodal-cubic", "degeneration"};
}

Json builtin_document(const std::string& name) {
  if (name == "standard-quadratic") {
    return map_to_json(standard_quadratic(),
                       "quadratic involution of the plane: composing it with itself "
                       "gives x_i * x0*x1*x2, which normalizes to the identity");
  }
  if (name == "henon") {
    ContextPtr ctx = projective(2);
    RationalMap henon = RationalMap::make(
        2, {parse_poly("x1*x2", ctx), parse_poly("x1^2 - x0*x2", ctx),
            parse_poly("x2^2", ctx)});
    return map_to_json(henon,
                       "plane map whose iterates double in degree: the m-th power "
                       "has degree 2^m");
  }
  if (name == "nodal-cubic") return family_to_json(nodal_cubic_family(2));
  if (name == "degeneration") return family_to_json(degeneration_demo());
  std::string known;
  for (const auto& b : builtin_names()) known += (known.empty() ? "" : ", ") + b;
  fail(ErrorKind::invalid_argument,
       "unknown builtin '" + name + "' (available: " + known + ")");
}

bool is_family_document(const Json& doc) { return doc.contains("param"); }

Json map_to_json(const RationalMap& f, const std::string& provenance) {
  Json doc;
  doc["n"] = f.n();
  if (!standard_coordinates(f.context())) {
    Json coords = Json::array();
    for (const auto& name : f.context()->names()) coords.push_back(name);
    doc["coordinates"] = std::move(coords);
  }
  doc["components"] = components_json(f.components());
  if (!provenance.empty()) doc["provenance"] = provenance;
  return doc;
}

RationalMap map_from_json(const Json& doc) {
  if (is_family_document(doc)) {
    fail(ErrorKind::parse_error,
         "expected a map document, found a family document (it has \"param\")");
  }
  int n = require_int(doc, "n");
  if (n < 1) fail(ErrorKind::parse_error, "a map document needs n >= 1");
  ContextPtr ctx;
  if (doc.contains("coordinates")) {
    std::vector<std::string> names = require_string_array(doc, "coordinates");
    if (static_cast<int>(names.size()) != n + 1) {
      fail(ErrorKind::parse_error, "\"coordinates\" must list exactly n + 1 names");
    }
    ctx = make_context(std::move(names));
  } else {
    ctx = projective(n);
  }
  std::vector<std::string> texts = require_string_array(doc, "components");
  if (static_cast<int>(texts.size()) != n + 1) {
    fail(ErrorKind::parse_error,
         "a map of P^" + std::to_string(n) + " needs exactly " + std::to_string(n + 1) +
             " components, got " + std::to_string(texts.size()));
  }
  std::vector<Poly> comps;
  comps.reserve(texts.size());
  for (const auto& t : texts) comps.push_back(parse_poly(t, ctx));
  return RationalMap::make(std::move(ctx), std::move(comps));
}

Json family_to_json(const ParamWriting& w) {
  Json doc;
  doc["n"] = w.n();
  doc["param"] = w.param();
  doc["components"] = components_json(w.components());
  if (!w.provenance().empty()) doc["provenance"] = w.provenance();
  return doc;
}

ParamWriting family_from_json(const Json& doc) {
  int n = require_int(doc, "n");
  if (n < 1) fail(ErrorKind::parse_error, "a family document needs n >= 1");
  std::string param = require_string(doc, "param");
  if (param.empty()) fail(ErrorKind::parse_error, "\"param\" must be a variable name");
  ContextPtr ctx = projective_with_param(n, param);
  std::vector<std::string> texts = require_string_array(doc, "components");
  if (static_cast<int>(texts.size()) != n + 1) {
    fail(ErrorKind::parse_error,
         "a family on P^" + std::to_string(n) + " needs exactly " +
             std::to_string(n + 1) + " components, got " + std::to_string(texts.size()));
  }
  std::vector<Poly> comps;
  comps.reserve(texts.size());
  for (const auto& t : texts) comps.push_back(parse_poly(t, ctx));
  std::string provenance =
      doc.contains("provenance") ? require_string(doc, "provenance") : "";
  return ParamWriting::make(n, param, std::move(comps), std::move(provenance));
}

Json map_info_report(const RationalMap& f) {
  RationalMap norm = normalize(f);
  Json r;
  r["kind"] = "map-info";
  r["n"] = f.n();
  r["written_degree"] = f.written_degree();
  r["degree"] = norm.written_degree();
  r["components"] = components_json(norm.components());
  r["jacobian_nonzero"] = is_dominant_candidate(f);
  r["identity"] = is_identity(f);
  return r;
}

Json identity_report(const RationalMap& f) {
  Json r;
  r["kind"] = "map-identity";
  r["identity"] = is_identity(f);
  return r;
}

Json jacobian_report(const RationalMap& f) {
  Poly j = jacobian(f);
  Json r;
  r["kind"] = "map-jacobian";
  r["jacobian"] = format_poly(j);
  r["nonzero"] = !j.is_zero();
  return r;
}

Json powers_report(const RationalMap& f, int max_power) {
  GrowthReport growth = cyclic_growth_report(f, max_power);
  Json r;
  r["kind"] = "map-powers";
  r["config"] = Json{{"max_power", max_power}};
  r["n"] = f.n();
  Json entries = Json::array();
  for (const auto& [m, d] : growth.evidence.entries) {
    entries.push_back(Json{{"m", m}, {"degree", d}});
  }
  r["entries"] = std::move(entries);
  r["classification"] = to_string(growth.classification);
  if (growth.classification == GrowthClass::finite_order) r["order"] = growth.order;
  r["caveat"] = growth.caveat;
  return r;
}

Json compose_report(const RationalMap& f, const RationalMap& g) {
  RationalMap fg = compose(f, g);
  Json r;
  r["kind"] = "map-compose";
  r["degree"] = degree(fg);
  r["result"] = map_to_json(fg);
  return r;
}

Json conjugate_report(const RationalMap& f, const RationalMap& by) {
  RationalMap inv = invert_linear(by);
  RationalMap result = conjugate(f, by, inv);
  Json r;
  r["kind"] = "map-conjugate";
  r["degree"] = degree(result);
  r["result"] = map_to_json(result);
  return r;
}

Json jonq_check_report(const RationalMap& f) {
  StarMembership star = in_star(f);
  Json r;
  r["kind"] = "jonq-check";
  r["n"] = f.n();
  r["jon"] = in_jon(f);
  r["star"] = star.member;
  r["quotient"] = star.member ? map_to_json(*star.quotient) : Json(nullptr);
  Json images = Json::array();
  for (int ell = 1; ell <= f.n(); ++ell) {
    images.push_back(in_image_sigma_ell(f, ell));
  }
  r["sigma_images"] = std::move(images);
  return r;
}

Json rho_report(const RationalMap& f) {
  RationalMap quotient = rho(f);
  Json r;
  r["kind"] = "jonq-rho";
  r["degree"] = degree(quotient);
  r["result"] = map_to_json(quotient);
  return r;
}

Json sigma_report(const RationalMap& h, int ell) {
  RationalMap on_hyperplane = h;
  if (standard_coordinates(h.context())) {
    // Shift x0..x(n-1) onto the hyperplane coordinates x1..xn of the target.
    ContextPtr target = hyperplane_context(h.n() + 1);
    std::vector<Poly> comps;
    comps.reserve(h.components().size());
    for (const auto& c : h.components()) comps.push_back(rename_positional(c, target));
    on_hyperplane = RationalMap::make(target, std::move(comps));
  }
  RationalMap section = sigma_ell(on_hyperplane, ell);
  Json r;
  r["kind"] = "jonq-sigma";
  r["config"] = Json{{"ell", ell}};
  r["degree"] = degree(section);
  r["result"] = map_to_json(section);
  return r;
}

Json family_deg_report(const ParamWriting& w) {
  Json r;
  r["kind"] = "family-deg";
  r["n"] = w.n();
  r["param"] = w.param();
  r["writing_degree"] = writing_degree(w);
  r["Deg"] = family_Deg(w);
  return r;
}

Json stratify_report(const ParamWriting& w, const DropScanOptions& options) {
  DegreeProfile profile = stratify(w, options);
  Json r;
  r["kind"] = "family-stratify";
  r["config"] = scan_options_json(options);
  r["n"] = w.n();
  r["param"] = w.param();
  r["writing_degree"] = profile.writing_deg;
  r["Deg"] = profile.Deg;
  r["common_factor"] =
      profile.common_factor ? Json(format_poly(*profile.common_factor)) : Json(nullptr);
  r["generic_witness"] = Json{{"value", to_string(profile.generic_witness_value)},
                              {"degree", profile.generic_witness_degree}};
  r["drop_points"] = drop_points_json(profile.drop_points);
  Json collapses = Json::array();
  for (const auto& v : profile.collapse_points) collapses.push_back(param_value_json(v));
  r["collapse_points"] = std::move(collapses);
  r["horizon_note"] = profile.horizon_note;
  return r;
}

Json scan_report(const ParamWriting& w, int samples, uint64_t seed,
                 const DropScanOptions& options) {
  if (samples < 1) {
    fail(ErrorKind::invalid_argument, "a scan needs at least one sample");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numerator(-1000, 1000);
  std::uniform_int_distribution<long> denominator(1, 30);
  std::vector<Rational> values;
  values.reserve(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    values.push_back(make_rational(numerator(rng), denominator(rng)));
  }
  SemicontinuityReport report = semicontinuity_scan(w, values, options);
  Json r;
  r["kind"] = "family-scan";
  Json config = scan_options_json(options);
  config["samples"] = samples;
  config["sample_seed"] = seed_string(seed);
  r["config"] = std::move(config);
  r["n"] = w.n();
  r["param"] = w.param();
  r["Deg"] = report.Deg;
  Json sample_arr = Json::array();
  for (const auto& s : report.samples) {
    Json j;
    j["t0"] = to_string(s.value);
    j["degree"] = s.degree;
    j["at_drop"] = s.at_drop;
    j["collapses_writing"] = s.collapses_writing;
    sample_arr.push_back(std::move(j));
  }
  r["samples"] = std::move(sample_arr);
  r["note"] = report.note;
  return r;
}

Json family_compose_report(const ParamWriting& w1, const ParamWriting& w2) {
  ParamWriting composed = family_compose(w1, w2);
  Json r;
  r["kind"] = "family-compose";
  r["writing_degree"] = writing_degree(composed);
  r["Deg"] = family_Deg(composed);
  r["result"] = family_to_json(composed);
  return r;
}

Json reparam_report(const ParamWriting& w, const Mobius& mobius) {
  ParamWriting result = reparameterize(w, mobius);
  Json r;
  r["kind"] = "family-reparam";
  r["config"] = Json{{"mobius", Json{{"a", to_string(mobius.a)},
                                     {"b", to_string(mobius.b)},
                                     {"c", to_string(mobius.c)},
                                     {"d", to_string(mobius.d)}}}};
  r["writing_degree"] = writing_degree(result);
  r["Deg"] = family_Deg(result);
  r["result"] = family_to_json(result);
  return r;
}

Json oracle_gcd_report(const std::vector<Poly>& polys, const OracleConfig& cfg) {
  GcdDegreeReport report = gcd_degree_report(polys, cfg);
  Json r;
  r["kind"] = "oracle-gcd";
  r["config"] = oracle_config_json(report.config);
  r["degree"] = report.degree;
  r["trial_degrees"] = report.trial_degrees;
  r["primes"] = primes_json(report.primes);
  r["redraws"] = report.redraws;
  return r;
}

Json oracle_identity_report(const RationalMap& f, const OracleConfig& cfg) {
  IdentityCheckReport report = identity_check_report(f, cfg);
  Json r;
  r["kind"] = "oracle-identity";
  r["config"] = oracle_config_json(report.config);
  r["identity"] = report.identity;
  r["false_accept_bound"] = report.false_accept_bound;
  r["primes"] = primes_json(report.primes);
  if (report.witness_point) {
    Json w;
    w["prime"] = std::to_string(*report.witness_prime);
    Json pt = Json::array();
    for (uint64_t c : *report.witness_point) pt.push_back(std::to_string(c));
    w["point"] = std::move(pt);
    r["witness"] = std::move(w);
  } else {
    r["witness"] = nullptr;
  }
  r["redraws"] = report.redraws;
  return r;
}

Json oracle_profile_report(const ParamWriting& w, int samples, const OracleConfig& cfg) {
  EmpiricalProfile profile = empirical_degree_profile(w, samples, cfg);
  Json r;
  r["kind"] = "oracle-profile";
  Json config = oracle_config_json(profile.config);
  config["samples"] = samples;
  r["config"] = std::move(config);
  r["n"] = w.n();
  r["param"] = w.param();
  r["Deg"] = profile.Deg;
  Json arr = Json::array();
  for (const auto& s : profile.samples) {
    arr.push_back(Json{{"t0", to_string(s.t0)}, {"degree", s.degree}});
  }
  r["samples"] = std::move(arr);
  return r;
}

namespace {

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string tuple_text(const Json& components) {
  std::string out = "(";
  bool first = true;
  for (const auto& c : components) {
    if (!first) out += " : ";
    out += c.get<std::string>();
    first = false;
  }
  return out + ")";
}

std::string param_value_text(const Json& v) {
  if (v.contains("rational")) return v["rational"].get<std::string>();
  return "root of " + v["root_of"].get<std::string>();
}

std::string document_text(const Json& doc) {
  std::ostringstream out;
  if (doc.contains("param")) {
    out << "family on P^" << doc["n"].get<int>() << " with parameter "
        << doc["param"].get<std::string>() << "\n";
  } else {
    out << "map of P^" << doc["n"].get<int>() << "\n";
  }
  out << "  components: " << tuple_text(doc["components"]) << "\n";
  if (doc.contains("provenance")) {
    out << "  provenance: " << doc["provenance"].get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace

std::string render_text(const Json& report) {
  if (!report.contains("kind")) return document_text(report);
  const std::string kind = report["kind"].get<std::string>();
  std::ostringstream out;
  if (kind == "map-info") {
    out << "map of P^" << report["n"].get<int>() << "\n"
        << "  written degree: " << report["written_degree"].get<int>() << "\n"
        << "  degree: " << report["degree"].get<int>() << "\n"
        << "  normalized components: " << tuple_text(report["components"]) << "\n"
        << "  jacobian nonzero: " << yesno(report["jacobian_nonzero"].get<bool>())
        << "\n"
        << "  identity: " << yesno(report["identity"].get<bool>()) << "\n";
  } else if (kind == "map-identity") {
    out << "identity: " << yesno(report["identity"].get<bool>()) << "\n";
  } else if (kind == "map-jacobian") {
    out << "jacobian: " << report["jacobian"].get<std::string>() << "\n"
        << "nonzero: " << yesno(report["nonzero"].get<bool>()) << "\n";
  } else if (kind == "map-powers") {
    out << "degrees of the powers:\n";
    for (const auto& e : report["entries"]) {
      out << "  m = " << e["m"].get<int>() << ": degree " << e["degree"].get<int>()
          << "\n";
    }
    out << "classification: " << report["classification"].get<std::string>();
    if (report.contains("order")) out << " (order " << report["order"].get<int>() << ")";
    out << "\n" << report["caveat"].get<std::string>() << "\n";
  } else if (kind == "map-compose" || kind == "map-conjugate" || kind == "jonq-rho" ||
             kind == "jonq-sigma") {
    out << "degree: " << report["degree"].get<int>() << "\n"
        << document_text(report["result"]);
  } else if (kind == "jonq-check") {
    out << "fixes the fibres of the projection (jon): " << yesno(report["jon"].get<bool>())
        << "\n"
        << "permutes the fibres (star): " << yesno(report["star"].get<bool>()) << "\n";
    if (report["quotient"].is_null()) {
      out << "quotient: none\n";
    } else {
      out << "quotient: " << tuple_text(report["quotient"]["components"]) << "\n";
    }
    out << "section images:";
    int ell = 1;
    for (const auto& b : report["sigma_images"]) {
      out << " sigma_" << ell++ << "=" << yesno(b.get<bool>());
    }
    out << "\n";
  } else if (kind == "family-deg") {
    out << "family on P^" << report["n"].get<int>() << " with parameter "
        << report["param"].get<std::string>() << "\n"
        << "  writing degree: " << report["writing_degree"].get<int>() << "\n"
        << "  family degree: " << report["Deg"].get<int>() << "\n";
  } else if (kind == "family-stratify") {
    out << "family on P^" << report["n"].get<int>() << " with parameter "
        << report["param"].get<std::string>() << "\n"
        << "  writing degree: " << report["writing_degree"].get<int>() << "\n"
        << "  family degree: " << report["Deg"].get<int>() << "\n"
        << "  common factor: " << report["common_factor"].get<std::string>() << "\n"
        << "  generic witness: degree " << report["generic_witness"]["degree"].get<int>()
        << " at " << report["generic_witness"]["value"].get<std::string>() << "\n";
    out << "  drop points:";
    if (report["drop_points"].empty()) out << " none";
    out << "\n";
    for (const auto& d : report["drop_points"]) {
      out << "    " << param_value_text(d["at"]) << " -> degree "
          << d["degree"].get<int>() << "\n";
    }
    out << "  collapse points of this writing:";
    if (report["collapse_points"].empty()) out << " none";
    out << "\n";
    for (const auto& v : report["collapse_points"]) {
      out << "    " << param_value_text(v) << "\n";
    }
    out << "  " << report["horizon_note"].get<std::string>() << "\n";
  } else if (kind == "family-scan") {
    out << "family degree: " << report["Deg"].get<int>() << "\n";
    for (const auto& s : report["samples"]) {
      out << "  " << s["t0"].get<std::string>() << " -> degree "
          << s["degree"].get<int>() << (s["at_drop"].get<bool>() ? " (drop point)" : "")
          << (s["collapses_writing"].get<bool>() ? " (writing collapses)" : "") << "\n";
    }
    out << "all samples within the semicontinuity bound\n";
  } else if (kind == "family-compose" || kind == "family-reparam") {
    out << "writing degree: " << report["writing_degree"].get<int>() << "\n"
        << "family degree: " << report["Deg"].get<int>() << "\n"
        << document_text(report["result"]);
  } else if (kind == "oracle-gcd") {
    out << "estimated gcd degree: " << report["degree"].get<int>() << " (min over "
        << report["trial_degrees"].size() << " trials)\n";
  } else if (kind == "oracle-identity") {
    out << "identity: " << yesno(report["identity"].get<bool>()) << "\n";
    if (report["witness"].is_null()) {
      out << "false-accept bound: " << report["false_accept_bound"].get<double>()
          << "\n";
    } else {
      out << "witness point (" << tuple_text(report["witness"]["point"]) << ") mod "
          << report["witness"]["prime"].get<std::string>() << "\n";
    }
  } else if (kind == "oracle-profile") {
    out << "family degree: " << report["Deg"].get<int>() << "\n";
    for (const auto& s : report["samples"]) {
      out << "  " << s["t0"].get<std::string>() << " -> degree "
          << s["degree"].get<int>() << "\n";
    }
  } else {
    return dump(report);
  }
  return out.str();
}

}  // namespace cremona::docs
