#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>

#include "urysohn/eppa.hpp"
#include "urysohn/left_system.hpp"
#include "urysohn/probe.hpp"
#include "urysohn/quotient.hpp"
#include "urysohn/sphere_witness.hpp"

namespace urysohn {

using Json = nlohmann::ordered_json;

/// Throws InvalidInput on unreadable or malformed files.
Json load_json(const std::filesystem::path& path);
/// Two-space indentation and a trailing newline.
void write_json(const std::filesystem::path& path, const Json& value);
std::string dump_json(const Json& value);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json value_set_to_json(const DistanceValueSet& vs);
DistanceValueSet value_set_from_json(const Json& j, Dist scale);

/// {"name", "scale", "labels", "dist", "value_set"}.
Json space_to_json(const FiniteMetricSpace& space);
/// Runs the validating constructor; invalid spaces raise InvalidSpace with the full report.
FiniteMetricSpace space_from_json(const Json& j);

/// Metric-space JSON of the fragment plus {"witness": {"m", "k", "N", "z0", "a", "b", "f_eps"}}.
Json sphere_witness_to_json(const SphereWitness& w);
SphereWitness sphere_witness_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

Json partial_to_json(const FiniteMetricSpace& space, const PartialIsometry& p);
PartialIsometry partial_from_json(const FiniteMetricSpace& space, const Json& j);

/// {"space": name, "base_point": a0 label, "omega", "omega_base", "alphabet", "gens", "metric"}.
Json quotient_to_json(const QuotientAction& action);
QuotientAction quotient_from_json(const Json& j);

Json stats_to_json(const SearchStats& stats);
SearchStats stats_from_json(const Json& j);

/// {"base", "witness", "embed", "extensions", "provenance", "stats"}.
Json witness_to_json(const EppaWitness& w);
EppaWitness witness_from_json(const Json& j);

Json tower_to_json(const Tower& tower);
Tower tower_from_json(const Json& j);

Json left_system_to_json(const LeftSystem& system);
LeftSystem left_system_from_json(const Json& j);

Json tree_to_json(const NEpsTree& tree);
NEpsTree tree_from_json(const Json& j);

/// {"depth", "gamma_hat", "radius", "eps_claimed", "nodes", "source", "stats"}; "tree"
/// carries the exact tree when one was built.
Json certificate_to_json(const TreeCertificate& c);
TreeCertificate certificate_from_json(const Json& j);

/// {"embedding": {label: [number or "p/q"]}} or a bare label map.
Embedding embedding_from_json(const Json& j);
Json embedding_to_json(const Embedding& e);

}  // namespace urysohn
