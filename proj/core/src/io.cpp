#include "urysohn/io.hpp"

#include <fstream>
#include <sstream>

namespace urysohn {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("field '") + key + "': " + e.what());
  }
}

const Json& child(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json permutation_to_json(const Permutation& g) { return g.images(); }

Permutation permutation_from_json(const Json& j) {
  try {
    return Permutation(j.get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("permutation: ") + e.what());
  }
}

std::vector<int> labels_to_indices(const FiniteMetricSpace& space, const Json& j) {
  std::vector<int> out;
  for (const auto& l : j) out.push_back(space.index_of(l.get<std::string>()));
  return out;
}

Json indices_to_labels(const FiniteMetricSpace& space, const std::vector<int>& idx) {
  Json out = Json::array();
  for (int i : idx) out.push_back(space.label(i));
  return out;
}

}  // namespace

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

std::string dump_json(const Json& value) { return value.dump(2) + "\n"; }

void write_json(const std::filesystem::path& path, const Json& value) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << dump_json(value);
}

Json rational_to_json(const Rational& r) {
  if (denominator(r) == 1 && abs(numerator(r)) < BigInt(1) << 62) return numerator(r).convert_to<long long>();
  std::ostringstream s;
  s << numerator(r) << '/' << denominator(r);
  return s.str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return Rational(j.get<double>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      const auto slash = s.find('/');
      if (slash == std::string::npos) return Rational(BigInt(s));
      const BigInt den(s.substr(slash + 1));
      if (den == 0) throw InvalidInput("zero denominator in '" + s + "'");
      return Rational(BigInt(s.substr(0, slash)), den);
    } catch (const std::runtime_error&) {
      throw InvalidInput("malformed rational '" + s + "'");
    }
  }
  throw InvalidInput("expected a rational number");
}

Json value_set_to_json(const DistanceValueSet& vs) {
  Json j;
  switch (vs.kind()) {
    case ValueSetKind::finite:
      j["kind"] = "finite";
      j["values"] = vs.values();
      break;
    case ValueSetKind::integers:
      j["kind"] = "integers";
      break;
    case ValueSetKind::scaled:
      j["kind"] = "scaled";
      break;
  }
  if (vs.bound()) j["bound"] = *vs.bound();
  return j;
}

DistanceValueSet value_set_from_json(const Json& j, Dist scale) {
  if (j.is_null()) return DistanceValueSet::scaled();
  const std::string kind = field<std::string>(j, "kind");
  std::optional<Dist> bound;
  if (j.contains("bound") && !j.at("bound").is_null()) bound = field<Dist>(j, "bound");
  if (kind == "finite") return DistanceValueSet::finite(field<std::vector<Dist>>(j, "values"));
  if (kind == "integers") return DistanceValueSet::integers(scale, bound);
  if (kind == "scaled") return DistanceValueSet::scaled(bound);
  throw InvalidInput("unknown value set kind '" + kind + "'");
}

Json space_to_json(const FiniteMetricSpace& space) {
  Json j;
  j["name"] = space.name();
  j["scale"] = space.scale();
  j["labels"] = space.labels();
  j["dist"] = space.matrix();
  j["value_set"] = value_set_to_json(space.value_set());
  return j;
}

FiniteMetricSpace space_from_json(const Json& j) {
  const Dist scale = j.contains("scale") ? field<Dist>(j, "scale") : 1;
  const auto dist = field<DistanceMatrix>(j, "dist");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = field<std::vector<std::string>>(j, "labels");
  } else {
    for (std::size_t i = 0; i < dist.size(); ++i) labels.push_back(std::to_string(i));
  }
  const DistanceValueSet vs = value_set_from_json(j.contains("value_set") ? j.at("value_set") : Json(), scale);
  return FiniteMetricSpace(j.contains("name") ? field<std::string>(j, "name") : std::string(), std::move(labels), scale,
                           dist, vs);
}

Json sphere_witness_to_json(const SphereWitness& w) {
  Json j = space_to_json(w.fragment);
  Json f = Json::object();
  for (std::size_t i = 0; i < w.epsilons.size(); ++i) f[w.epsilons[i]] = w.family[i];
  j["witness"] = {{"m", w.m},
                  {"k", w.k},
                  {"N", w.n},
                  {"z0", w.fragment.label(w.z0)},
                  {"a", indices_to_labels(w.fragment, w.a)},
                  {"b", indices_to_labels(w.fragment, w.b)},
                  {"f_eps", f}};
  return j;
}

SphereWitness sphere_witness_from_json(const Json& j) {
  SphereWitness w;
  w.fragment = space_from_json(j);
  const Json& data = child(j, "witness");
  w.m = field<int>(data, "m");
  w.k = field<int>(data, "k");
  w.n = field<int>(data, "N");
  w.small_k = w.k < 2;
  w.z0 = w.fragment.index_of(field<std::string>(data, "z0"));
  w.a = labels_to_indices(w.fragment, child(data, "a"));
  w.b = labels_to_indices(w.fragment, child(data, "b"));
  for (const auto& [bits, values] : child(data, "f_eps").items()) {
    w.epsilons.push_back(bits);
    w.family.push_back(values.get<KatetovFunction>());
  }
  return w;
}

Json word_to_json(const Word& w) { return word_codes(w); }

Word word_from_json(const Json& j) {
  try {
    return word_from_codes(j.get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("word: ") + e.what());
  }
}

Json partial_to_json(const FiniteMetricSpace& space, const PartialIsometry& p) {
  return {{"dom", indices_to_labels(space, p.domain())}, {"img", indices_to_labels(space, p.image())}};
}

PartialIsometry partial_from_json(const FiniteMetricSpace& space, const Json& j) {
  return PartialIsometry(space.size(), labels_to_indices(space, child(j, "dom")),
                         labels_to_indices(space, child(j, "img")));
}

Json quotient_to_json(const QuotientAction& action) {
  const FiniteMetricSpace& space = action.space();
  Json alphabet = Json::array();
  for (const auto& letter : action.alphabet().letters()) alphabet.push_back(partial_to_json(space, letter));
  Json gens = Json::object();
  for (int i = 0; i < action.alphabet().size(); ++i) gens[std::to_string(i)] = permutation_to_json(action.generator(i));
  return {{"space", space.name()},   {"base_point", space.label(action.a0())},
          {"omega", action.omega()}, {"omega_base", action.base()},
          {"alphabet", alphabet},    {"gens", gens},
          {"metric", space_to_json(space)}};
}

QuotientAction quotient_from_json(const Json& j) {
  auto alphabet = std::make_shared<const Alphabet>(space_from_json(child(j, "metric")));
  const FiniteMetricSpace& space = alphabet->space();
  if (j.contains("alphabet")) {
    const Json& letters = j.at("alphabet");
    if (static_cast<int>(letters.size()) != alphabet->size()) throw InvalidInput("alphabet size mismatch");
    for (int i = 0; i < alphabet->size(); ++i) {
      if (!(partial_from_json(space, letters.at(i)) == alphabet->letter(i))) {
        throw InvalidInput("alphabet entry " + std::to_string(i) + " is out of canonical order");
      }
    }
  }
  const Json& gens = child(j, "gens");
  std::vector<Permutation> generators(alphabet->size());
  for (int i = 0; i < alphabet->size(); ++i) {
    const std::string key = std::to_string(i);
    if (!gens.contains(key)) throw InvalidInput("missing generator for letter " + key);
    generators[i] = permutation_from_json(gens.at(key));
  }
  const int a0 = space.index_of(field<std::string>(j, "base_point"));
  const int base = j.contains("omega_base") ? field<int>(j, "omega_base") : 0;
  return QuotientAction(alphabet, a0, field<int>(j, "omega"), std::move(generators), base);
}

Json stats_to_json(const SearchStats& s) {
  return {{"attempts", s.attempts},
          {"candidates", s.candidates},
          {"omega_tried", s.omega_tried},
          {"omega", s.omega},
          {"best_defect", s.best_defect},
          {"elapsed_s", s.elapsed_s},
          {"seed", s.seed},
          {"budget_exhausted", s.budget_exhausted},
          {"note", s.note}};
}

SearchStats stats_from_json(const Json& j) {
  SearchStats s;
  if (!j.is_object()) return s;
  s.attempts = j.value("attempts", std::uint64_t{0});
  s.candidates = j.value("candidates", std::uint64_t{0});
  s.omega_tried = j.value("omega_tried", 0);
  s.omega = j.value("omega", 0);
  s.best_defect = j.value("best_defect", Dist{0});
  s.elapsed_s = j.value("elapsed_s", 0.0);
  s.seed = j.value("seed", std::uint64_t{0});
  s.budget_exhausted = j.value("budget_exhausted", false);
  s.note = j.value("note", std::string());
  return s;
}

Json witness_to_json(const EppaWitness& w) {
  Json embed = Json::object();
  for (int i = 0; i < w.base.size(); ++i) embed[w.base.label(i)] = w.witness.label(w.embed[i]);
  Json extensions = Json::array();
  for (const auto& e : w.extensions) {
    extensions.push_back({{"partial", partial_to_json(w.base, e.partial)}, {"global", permutation_to_json(e.global)}});
  }
  return {{"base", space_to_json(w.base)},
          {"witness", space_to_json(w.witness)},
          {"embed", embed},
          {"extensions", extensions},
          {"provenance", to_string(w.provenance)},
          {"stats", stats_to_json(w.stats)}};
}

EppaWitness witness_from_json(const Json& j) {
  EppaWitness w;
  w.base = space_from_json(child(j, "base"));
  w.witness = space_from_json(child(j, "witness"));
  const Json& embed = child(j, "embed");
  w.embed.assign(w.base.size(), -1);
  for (int i = 0; i < w.base.size(); ++i) {
    if (!embed.contains(w.base.label(i))) throw InvalidInput("embed is missing '" + w.base.label(i) + "'");
    w.embed[i] = w.witness.index_of(embed.at(w.base.label(i)).get<std::string>());
  }
  for (const auto& e : child(j, "extensions")) {
    w.extensions.push_back({partial_from_json(w.base, child(e, "partial")), permutation_from_json(child(e, "global"))});
  }
  w.provenance = provenance_from_string(field<std::string>(j, "provenance"));
  if (j.contains("stats")) w.stats = stats_from_json(j.at("stats"));
  return w;
}

Json tower_to_json(const Tower& tower) {
  Json levels = Json::array();
  for (const auto& l : tower.levels) levels.push_back(space_to_json(l));
  Json steps = Json::array();
  for (const auto& s : tower.steps) steps.push_back(witness_to_json(s));
  Json groups = Json::array();
  for (const auto& g : tower.groups) {
    Json gens = Json::array();
    for (const auto& p : g.generators()) gens.push_back(permutation_to_json(p));
    groups.push_back({{"degree", g.degree()}, {"generators", gens}});
  }
  Json compat = Json::array();
  for (const auto& row : tower.compatibility) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(permutation_to_json(p));
    compat.push_back(r);
  }
  return {{"levels", levels}, {"steps", steps}, {"groups", groups}, {"compatibility", compat}, {"failure", tower.failure}};
}

Tower tower_from_json(const Json& j) {
  Tower t;
  for (const auto& l : child(j, "levels")) t.levels.push_back(space_from_json(l));
  for (const auto& s : child(j, "steps")) t.steps.push_back(witness_from_json(s));
  for (const auto& g : child(j, "groups")) {
    std::vector<Permutation> gens;
    for (const auto& p : child(g, "generators")) gens.push_back(permutation_from_json(p));
    t.groups.emplace_back(field<int>(g, "degree"), std::move(gens));
  }
  for (const auto& row : child(j, "compatibility")) {
    std::vector<Permutation> r;
    for (const auto& p : row) r.push_back(permutation_from_json(p));
    t.compatibility.push_back(std::move(r));
  }
  t.failure = j.value("failure", std::string());
  return t;
}

Json left_system_to_json(const LeftSystem& system) {
  Json eqs = Json::array();
  for (const auto& e : system.equations) {
    eqs.push_back({{"lhs", e.lhs}, {"rhs", e.rhs ? Json(*e.rhs) : Json()}, {"g", word_to_json(e.g)}, {"index", e.index}});
  }
  return {{"unknowns", system.unknowns}, {"equations", eqs}};
}

LeftSystem left_system_from_json(const Json& j) {
  LeftSystem s;
  s.unknowns = field<int>(j, "unknowns");
  for (const auto& e : child(j, "equations")) {
    LeftEquation eq;
    eq.lhs = field<int>(e, "lhs");
    if (e.contains("rhs") && !e.at("rhs").is_null()) eq.rhs = field<int>(e, "rhs");
    eq.g = word_from_json(child(e, "g"));
    eq.index = e.value("index", 0);
    if (eq.lhs < 0 || eq.lhs >= s.unknowns || (eq.rhs && (*eq.rhs < 0 || *eq.rhs >= s.unknowns))) {
      throw InvalidInput("equation refers to an unknown out of range");
    }
    s.equations.push_back(std::move(eq));
  }
  return s;
}

Json tree_to_json(const NEpsTree& tree) {
  Json nodes = Json::object();
  for (const auto& [address, v] : tree.nodes) {
    Json vec = Json::array();
    for (const auto& r : v) vec.push_back(rational_to_json(r));
    nodes[address.empty() ? "root" : address] = vec;
  }
  return {{"depth", tree.depth}, {"eps", rational_to_json(tree.eps)}, {"radius", rational_to_json(tree.radius)},
          {"nodes", nodes}};
}

NEpsTree tree_from_json(const Json& j) {
  NEpsTree tree;
  tree.depth = field<int>(j, "depth");
  tree.eps = rational_from_json(child(j, "eps"));
  tree.radius = rational_from_json(child(j, "radius"));
  for (const auto& [address, vec] : child(j, "nodes").items()) {
    ExactVector v;
    for (const auto& r : vec) v.push_back(rational_from_json(r));
    tree.nodes.emplace(address == "root" ? std::string() : address, std::move(v));
  }
  return tree;
}

Json certificate_to_json(const TreeCertificate& c) {
  Json j = {{"depth", c.depth},
            {"gamma_hat", c.gamma_hat},
            {"radius", c.radius},
            {"eps_claimed", c.eps_claimed},
            {"nodes", c.tree ? tree_to_json(*c.tree).at("nodes") : Json::object()},
            {"source", {{"fragment", c.fragment_id}, {"embedding", c.embedding_id}, {"m", c.m}, {"k", c.k},
                        {"t_eps", c.t_eps}}},
            {"stats", {{"delta", c.delta},
                       {"depth_bound", c.depth_bound},
                       {"degenerate", c.degenerate},
                       {"level_separation", c.level_separation},
                       {"support_functional", c.support},
                       {"note", c.note}}}};
  if (c.tree) j["tree"] = tree_to_json(*c.tree);
  return j;
}

TreeCertificate certificate_from_json(const Json& j) {
  TreeCertificate c;
  c.depth = field<int>(j, "depth");
  c.gamma_hat = field<double>(j, "gamma_hat");
  c.radius = field<double>(j, "radius");
  c.eps_claimed = field<double>(j, "eps_claimed");
  const Json& source = child(j, "source");
  c.fragment_id = source.value("fragment", std::string());
  c.embedding_id = source.value("embedding", std::string());
  c.m = source.value("m", 0);
  c.k = source.value("k", 0);
  c.t_eps = source.value("t_eps", std::vector<std::string>());
  if (j.contains("stats")) {
    const Json& s = j.at("stats");
    c.delta = s.value("delta", 0.0);
    c.depth_bound = s.value("depth_bound", -1LL);
    c.degenerate = s.value("degenerate", false);
    c.level_separation = s.value("level_separation", std::vector<double>());
    c.support = s.value("support_functional", std::vector<double>());
    c.note = s.value("note", std::string());
  }
  if (j.contains("tree")) c.tree = tree_from_json(j.at("tree"));
  return c;
}

Embedding embedding_from_json(const Json& j) {
  const Json& map = j.contains("embedding") ? j.at("embedding") : j;
  if (!map.is_object()) throw InvalidInput("embedding must map labels to vectors");
  Embedding e;
  for (const auto& [label, vec] : map.items()) {
    if (!vec.is_array()) throw InvalidInput("embedding of '" + label + "' is not a vector");
    ExactVector v;
    for (const auto& r : vec) v.push_back(rational_from_json(r));
    e.emplace(label, std::move(v));
  }
  return e;
}

Json embedding_to_json(const Embedding& e) {
  Json map = Json::object();
  for (const auto& [label, v] : e) {
    Json vec = Json::array();
    for (const auto& r : v) vec.push_back(rational_to_json(r));
    map[label] = vec;
  }
  return {{"embedding", map}};
}

}  // namespace urysohn
