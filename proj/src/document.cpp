#include "xisigma/document.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

#include "xisigma/error.hpp"

namespace xisigma {

Model ModelDocument::model() const {
  switch (carrier->kind()) {
    case CarrierKind::FiniteExplicit: return Model::finite(generate_algebra(carrier, generators));
    case CarrierKind::CountableNat: return Model::finite_cofinite(carrier, generators, window);
    case CarrierKind::UncountableOmega: return Model::countable_cocountable(carrier, generators);
  }
  throw Error(ErrorKind::UnsupportedModel, "unknown carrier kind");
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

std::string scalar_text(const YAML::Node& n, const std::string& where) {
  if (!n.IsScalar()) fail(where + ": expected a scalar");
  return n.as<std::string>();
}

std::vector<std::string> string_list(const YAML::Node& n, const std::string& where) {
  std::vector<std::string> out;
  if (!n) return out;
  if (!n.IsSequence()) fail(where + ": expected a list");
  for (const auto& item : n) out.push_back(scalar_text(item, where));
  return out;
}

std::vector<PointLabel> labels(const std::vector<std::string>& texts) {
  return {texts.begin(), texts.end()};
}

void check_keys(const YAML::Node& n, const std::string& where, std::initializer_list<std::string_view> allowed) {
  if (!n.IsMap()) fail(where + ": expected a mapping");
  for (const auto& kv : n) {
    const auto key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) fail(where + ": unknown key '" + key + "'");
  }
}

CarrierPtr parse_carrier(const YAML::Node& n, std::size_t& window) {
  if (!n) fail("missing 'carrier' section");
  check_keys(n, "carrier", {"kind", "points", "window"});
  const std::string kind = n["kind"] ? scalar_text(n["kind"], "carrier.kind") : "";
  auto points = labels(string_list(n["points"], "carrier.points"));
  if (n["window"]) {
    if (kind != "nat") fail("carrier.window applies to nat carriers only");
    window = n["window"].as<std::size_t>();
  }
  if (kind == "finite") return Carrier::finite(std::move(points));
  if (kind == "nat") return Carrier::naturals(std::move(points));
  if (kind == "omega") return Carrier::omega(std::move(points));
  fail("carrier.kind must be finite, nat or omega");
}

TopSpace parse_topology(const YAML::Node& n, const CarrierPtr& carrier) {
  check_keys(n, "topology", {"kind", "opens", "limit"});
  const std::string kind = n["kind"] ? scalar_text(n["kind"], "topology.kind") : "";
  if (kind == "finite") {
    std::vector<SymbolicSet> opens;
    for (const auto& s : string_list(n["opens"], "topology.opens")) opens.push_back(parse_set(carrier, s));
    return TopSpace::finite(carrier, std::move(opens));
  }
  if (kind == "cofinite") return TopSpace::cofinite(carrier);
  if (kind == "convergent-sequence") {
    if (!n["limit"]) fail("topology.limit is required for a convergent sequence");
    return TopSpace::convergent_sequence(carrier, PointLabel(scalar_text(n["limit"], "topology.limit")));
  }
  fail("topology.kind must be finite, cofinite or convergent-sequence");
}

Measure parse_measure(const YAML::Node& n, const CarrierPtr& carrier) {
  check_keys(n, "measure", {"atomic", "diffuse"});
  std::map<PointLabel, Rational> atomic;
  if (n["atomic"]) {
    if (!n["atomic"].IsMap()) fail("measure.atomic: expected a mapping point -> mass");
    for (const auto& kv : n["atomic"])
      atomic.emplace(PointLabel(kv.first.as<std::string>()), parse_rational(scalar_text(kv.second, "measure.atomic")));
  }
  Rational diffuse = n["diffuse"] ? parse_rational(scalar_text(n["diffuse"], "measure.diffuse")) : Rational(0);
  return Measure(carrier, std::move(atomic), std::move(diffuse));
}

QuasiNorm parse_norm(const YAML::Node& n) {
  if (!n) return QuasiNorm::sup();
  if (n.IsScalar()) {
    const auto tag = n.as<std::string>();
    if (tag == "sup") return QuasiNorm::sup();
    if (tag == "limsup") return QuasiNorm::limsup();
    if (tag == "sup-squared") return QuasiNorm::sup_squared();
    fail("algebra.norm: unknown norm '" + tag + "'");
  }
  check_keys(n, "algebra.norm", {"scaled", "weighted"});
  if (n["scaled"]) return QuasiNorm::scaled(parse_rational(scalar_text(n["scaled"], "algebra.norm.scaled")));
  const auto w = n["weighted"];
  check_keys(w, "algebra.norm.weighted", {"weights", "default"});
  std::map<PointLabel, Rational> weights;
  if (w["weights"]) {
    if (!w["weights"].IsMap()) fail("algebra.norm.weighted.weights: expected a mapping");
    for (const auto& kv : w["weights"])
      weights.emplace(PointLabel(kv.first.as<std::string>()), parse_rational(scalar_text(kv.second, "weight")));
  }
  Rational def = w["default"] ? parse_rational(scalar_text(w["default"], "algebra.norm.weighted.default")) : Rational(1);
  return QuasiNorm::weighted(std::move(weights), std::move(def));
}

FnElement parse_function(const YAML::Node& n, const CarrierPtr& carrier) {
  check_keys(n, "algebra.generators[]", {"values", "default"});
  std::map<PointLabel, Scalar> values;
  if (n["values"]) {
    if (!n["values"].IsMap()) fail("algebra.generators[].values: expected a mapping");
    for (const auto& kv : n["values"])
      values.emplace(PointLabel(kv.first.as<std::string>()), Scalar::parse(scalar_text(kv.second, "value")));
  }
  Scalar def = n["default"] ? Scalar::parse(scalar_text(n["default"], "default")) : Scalar(0);
  return FnElement(carrier, std::move(values), def);
}

AlgebraSpec parse_algebra(const YAML::Node& n, const CarrierPtr& carrier, Field field, std::size_t window) {
  check_keys(n, "algebra", {"class", "unital", "window", "generators", "norm"});
  const std::string cls = n["class"] ? scalar_text(n["class"], "algebra.class") : "generated";
  QuasiNorm norm = parse_norm(n["norm"]);
  if (norm.kind() == QuasiNorm::Kind::LimSup && !carrier->is_infinite())
    throw Error(ErrorKind::UnsupportedModel, "limsup needs an infinite carrier");
  if (cls == "generated") {
    std::vector<FnElement> gens;
    if (n["generators"]) {
      if (!n["generators"].IsSequence()) fail("algebra.generators: expected a list");
      for (const auto& g : n["generators"]) gens.push_back(parse_function(g, carrier));
    }
    const bool unital = n["unital"] ? n["unital"].as<bool>() : false;
    return {FunctionAlgebra::generated(carrier, std::move(gens), unital, field), norm};
  }
  std::vector<PointLabel> win;
  if (n["window"]) {
    win = labels(string_list(n["window"], "algebra.window"));
  } else {
    for (std::size_t k = 0; k < window; ++k) win.push_back(PointLabel::natural(k));
  }
  if (n["generators"] || n["unital"]) fail("algebra." + cls + " takes neither generators nor unital");
  if (cls == "eventually-constant") return {FunctionAlgebra::eventually_constant(carrier, std::move(win), field), norm};
  if (cls == "finitely-supported") return {FunctionAlgebra::finitely_supported(carrier, std::move(win), field), norm};
  fail("algebra.class must be generated, eventually-constant or finitely-supported");
}

ModelDocument parse_root(const YAML::Node& root) {
  if (!root || root.IsNull()) fail("empty model document");
  check_keys(root, "document", {"name", "seed", "field", "carrier", "generators", "topology", "measure", "algebra"});
  ModelDocument doc;
  doc.name = root["name"] ? scalar_text(root["name"], "name") : "model";
  doc.seed = root["seed"] ? root["seed"].as<std::uint64_t>() : 0;
  if (root["field"]) {
    const auto f = scalar_text(root["field"], "field");
    if (f == "real")
      doc.field = Field::Real;
    else if (f == "complex")
      doc.field = Field::Complex;
    else
      fail("field must be real or complex");
  }
  doc.carrier = parse_carrier(root["carrier"], doc.window);
  for (const auto& s : string_list(root["generators"], "generators")) doc.generators.push_back(parse_set(doc.carrier, s));
  if (root["topology"]) doc.topology = parse_topology(root["topology"], doc.carrier);
  if (root["measure"]) doc.measure = parse_measure(root["measure"], doc.carrier);
  if (root["algebra"]) doc.algebra = parse_algebra(root["algebra"], doc.carrier, doc.field, doc.window);
  return doc;
}

}  // namespace

ModelDocument parse_document(const std::string& text) {
  try {
    return parse_root(YAML::Load(text));
  } catch (const YAML::Exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

ModelDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

namespace {

void emit_function(YAML::Emitter& out, const FnElement& f) {
  out << YAML::Flow << YAML::BeginMap << YAML::Key << "values" << YAML::Value << YAML::BeginMap;
  for (const auto& [x, v] : f.exceptions()) out << YAML::Key << x.text() << YAML::Value << v.to_string();
  out << YAML::EndMap << YAML::Key << "default" << YAML::Value << f.default_value().to_string() << YAML::EndMap;
}

void emit_norm(YAML::Emitter& out, const QuasiNorm& rho) {
  switch (rho.kind()) {
    case QuasiNorm::Kind::Sup: out << "sup"; return;
    case QuasiNorm::Kind::LimSup: out << "limsup"; return;
    case QuasiNorm::Kind::SupSquared: out << "sup-squared"; return;
    case QuasiNorm::Kind::ScaledSup:
      out << YAML::BeginMap << YAML::Key << "scaled" << YAML::Value << to_string(rho.scale()) << YAML::EndMap;
      return;
    case QuasiNorm::Kind::WeightedSup:
      out << YAML::BeginMap << YAML::Key << "weighted" << YAML::Value << YAML::BeginMap;
      out << YAML::Key << "weights" << YAML::Value << YAML::Flow << YAML::BeginMap;
      for (const auto& [x, w] : rho.weights()) out << YAML::Key << x.text() << YAML::Value << to_string(w);
      out << YAML::EndMap << YAML::Key << "default" << YAML::Value << to_string(rho.default_weight());
      out << YAML::EndMap << YAML::EndMap;
      return;
  }
}

}  // namespace

std::string emit_document(const ModelDocument& doc) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << doc.name;
  out << YAML::Key << "seed" << YAML::Value << doc.seed;
  out << YAML::Key << "field" << YAML::Value << std::string(to_string(doc.field));
  out << YAML::Key << "carrier" << YAML::Value << YAML::BeginMap;
  switch (doc.carrier->kind()) {
    case CarrierKind::FiniteExplicit: out << YAML::Key << "kind" << YAML::Value << "finite"; break;
    case CarrierKind::CountableNat: out << YAML::Key << "kind" << YAML::Value << "nat"; break;
    case CarrierKind::UncountableOmega: out << YAML::Key << "kind" << YAML::Value << "omega"; break;
  }
  out << YAML::Key << "points" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (const auto& x : doc.carrier->named()) out << x.text();
  out << YAML::EndSeq;
  if (doc.carrier->kind() == CarrierKind::CountableNat) out << YAML::Key << "window" << YAML::Value << doc.window;
  out << YAML::EndMap;

  out << YAML::Key << "generators" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (const auto& g : doc.generators) out << YAML::DoubleQuoted << g.to_string();
  out << YAML::EndSeq;

  if (doc.topology) {
    const auto& t = *doc.topology;
    out << YAML::Key << "topology" << YAML::Value << YAML::BeginMap;
    switch (t.kind()) {
      case TopSpace::Kind::Finite: {
        out << YAML::Key << "kind" << YAML::Value << "finite";
        // Every open set is a union of minimal neighbourhoods.
        const auto& nb = t.neighbourhoods();
        std::vector<SymbolicSet> opens;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nb.size()); ++mask) {
          SymbolicSet u = SymbolicSet::empty(doc.carrier);
          for (std::size_t k = 0; k < nb.size(); ++k)
            if (mask >> k & 1) u = unite(u, nb[k]);
          if (std::find(opens.begin(), opens.end(), u) == opens.end()) opens.push_back(u);
        }
        out << YAML::Key << "opens" << YAML::Value << YAML::Flow << YAML::BeginSeq;
        for (const auto& o : opens) out << YAML::DoubleQuoted << o.to_string();
        out << YAML::EndSeq;
        break;
      }
      case TopSpace::Kind::CofiniteNat: out << YAML::Key << "kind" << YAML::Value << "cofinite"; break;
      case TopSpace::Kind::ConvergentSequence:
        out << YAML::Key << "kind" << YAML::Value << "convergent-sequence";
        out << YAML::Key << "limit" << YAML::Value << t.limit()->text();
        break;
    }
    out << YAML::EndMap;
  }

  if (doc.measure) {
    out << YAML::Key << "measure" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "atomic" << YAML::Value << YAML::Flow << YAML::BeginMap;
    for (const auto& [x, m] : doc.measure->atomic()) out << YAML::Key << x.text() << YAML::Value << to_string(m);
    out << YAML::EndMap;
    out << YAML::Key << "diffuse" << YAML::Value << to_string(doc.measure->diffuse());
    out << YAML::EndMap;
  }

  if (doc.algebra) {
    const auto& a = doc.algebra->algebra;
    out << YAML::Key << "algebra" << YAML::Value << YAML::BeginMap;
    switch (a.kind()) {
      case FunctionAlgebra::Kind::Generated:
        out << YAML::Key << "class" << YAML::Value << "generated";
        out << YAML::Key << "unital" << YAML::Value << a.unital();
        out << YAML::Key << "generators" << YAML::Value << YAML::BeginSeq;
        for (const auto& g : a.generators()) emit_function(out, g);
        out << YAML::EndSeq;
        break;
      case FunctionAlgebra::Kind::EventuallyConstant:
      case FunctionAlgebra::Kind::FinitelySupported:
        out << YAML::Key << "class" << YAML::Value
            << (a.kind() == FunctionAlgebra::Kind::EventuallyConstant ? "eventually-constant" : "finitely-supported");
        out << YAML::Key << "window" << YAML::Value << YAML::Flow << YAML::BeginSeq;
        for (const auto& x : a.window()) out << x.text();
        out << YAML::EndSeq;
        break;
    }
    out << YAML::Key << "norm" << YAML::Value;
    emit_norm(out, doc.algebra->norm);
    out << YAML::EndMap;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace xisigma
