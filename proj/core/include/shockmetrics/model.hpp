#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shockmetrics/dist.hpp"
#include "shockmetrics/graph.hpp"

namespace shockmetrics {

// How an attack family's distribution depends on the environment value e
// (number of compromised neighbors r, or sustainment level theta).  All three
// non-trivial links rescale the underlying random variable:
//   ScaleTimesEnv   Z(e) = e     * Z_base   (scale parameter multiplied by e)
//   ScaleInverseEnv Z(e) = (1/e) * Z_base   (scale parameter divided by e)
//   RateTimesEnv    Z(e) = (1/e) * Z_base   (rate parameter multiplied by e)
enum class EnvLink { ScaleTimesEnv, ScaleInverseEnv, RateTimesEnv, None };

const char* env_link_name(EnvLink l);
EnvLink env_link_from_name(const std::string& name);

enum class FamilyKind { PushMagnitude, PushInterarrival, PullMagnitude, PullInterarrival };

// The law of e * Z for Z ~ d (scale families only; Binomial/Empty cannot be
// rescaled and raise validation_error).
DistributionSpec scale_distribution(const DistributionSpec& d, double factor);

// A map from environment value to a concrete DistributionSpec.
struct EnvFamily {
    FamilyKind kind = FamilyKind::PushMagnitude;
    DistributionSpec base;
    EnvLink env_link = EnvLink::None;

    // e = 0 yields Empty for inter-arrival kinds (no attacks at all) and
    // Dirac(0) for magnitude kinds, regardless of env_link.
    DistributionSpec instantiate(double e) const;
};

struct NodeSpec {
    double c1 = 1.0;             // push defense capability
    double c2 = 1.0;             // pull defense capability
    double recovery_mean = 1.0;  // E[R_v]
    DistributionSpec local_env;  // pmf of compromised-neighbor count on {0..degree}
    DistributionSpec global_env; // sustainment-level law H_v
};

// --- On-disk configuration document (canonical JSON form) -------------------

// A distribution exactly as written in the config; Binomial "trials" may be
// omitted to mean "the node's in-degree".
struct DistConfig {
    Family family = Family::Empty;
    std::map<std::string, double> params;

    // degree_for_trials < 0 means "not in node context": an omitted Binomial
    // trials count is then an error.
    DistributionSpec resolve(int degree_for_trials) const;
};

struct FamilyConfig {
    DistConfig dist;
    EnvLink env_link = EnvLink::None;
};

struct NodeSettings {  // all fields optional: defaults and overrides share this shape
    std::optional<double> c1, c2, recovery_mean;
    std::optional<DistConfig> local_env, global_env;
};

struct ModelConfig {
    std::optional<std::string> graph_ref;
    FamilyConfig push_magnitude, push_interarrival, pull_magnitude, pull_interarrival;
    NodeSettings node_defaults;
    std::map<std::string, NodeSettings> node_overrides;
};

struct AttackDefenseModel {
    AttackDefenseGraph graph;
    std::vector<NodeSpec> node_specs;  // indexed like graph.nodes
    EnvFamily push_magnitude, push_interarrival, pull_magnitude, pull_interarrival;
    ModelConfig config;  // the document this model was assembled from

    const NodeSpec& spec(int v) const { return node_specs[v]; }
};

// Parse the JSON config document.  Unknown keys anywhere are a
// validation_error (fail-closed); malformed JSON is a parse_error.
ModelConfig parse_model_config(const std::string& json_text, const std::string& source_name);

// Assemble and eagerly validate a model from a parsed config plus graph.
AttackDefenseModel build_model(const AttackDefenseGraph& g, const ModelConfig& cfg);

// Load graph and config from disk and build.  graph_path may be empty when the
// config carries graph_ref; an explicit path wins over graph_ref.
AttackDefenseModel load_model(const std::string& graph_path, const std::string& config_path);

// Canonical JSON serialization of the configuration document: keys sorted,
// two-space indent, shortest round-trip number formatting.  Reloading the
// output and serializing again is byte-identical.
std::string save_model(const AttackDefenseModel& m);
std::string canonical_config_json(const ModelConfig& cfg);

// --- Assumption validation --------------------------------------------------

enum class Assumption { A2, A4, NBU, NBUE };

struct AssumptionReport {
    Assumption which = Assumption::A2;
    bool passed = true;
    std::vector<std::string> failures;  // human-readable violation records
    std::vector<std::string> notes;
};

const char* assumption_name(Assumption a);

// A2: i.i.d. attack samples — structural here, always passes (recorded).
// A4: magnitudes stochastically increasing in e, inter-arrivals stochastically
//     decreasing in e, checked pointwise on env/abscissa grids.
// NBU/NBUE: aging-class checks of the instantiated inter-arrival laws over the
//     environment values the model can realize.
AssumptionReport validate_assumptions(const AttackDefenseModel& m, Assumption which);

}  // namespace shockmetrics
