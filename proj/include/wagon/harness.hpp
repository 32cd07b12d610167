#pragma once

#include "wagon/colouring.hpp"
#include "wagon/graph.hpp"
#include "wagon/recognition.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace wagon {

/// Labelled-graph enumeration with isomorph rejection is feasible only for
/// small orders; beyond this the harness samples.
inline constexpr int kEnumerateLimit = 8;

enum class SweepMode { EnumerateAll, RandomSample };
enum class FaultInjection { None, Colouring, Partition };

struct SweepConfig {
    GraphClass cls = GraphClass::P3P2Free;
    int n_min = 1;
    int n_max = kEnumerateLimit;
    SweepMode mode = SweepMode::EnumerateAll;
    int sample_count = 0; // random mode: total instances wanted (structured seeds count)
    std::uint64_t seed = 1;
    FaultInjection inject = FaultInjection::None;
};

struct SweepFailure {
    int instance = 0;
    std::string property;
    std::string witness;
    std::string graph; // compact edge-list encoding of the instance
};

struct OmegaStats {
    int instances = 0;
    int max_colours = 0;
    int bound = 0;
    int max_chi = -1; // -1 when the exact oracle never ran at this omega
};

struct CaseStats {
    int count = 0;
    int max_colours = 0;
};

struct SweepReport {
    SweepConfig config;
    int instances_tested = 0;
    int injection_eligible = 0;
    std::vector<SweepFailure> failures;
    std::map<int, OmegaStats> by_omega;
    std::map<std::string, CaseStats> by_case; // diamond colourer branch tokens

    bool passed() const { return failures.empty(); }
    std::string to_records() const; // machine-readable, byte-stable per config
    std::string summary() const;    // human-readable

    std::string records_text; // filled by run_suite
};

/// Canonical 64-bit code of the adjacency relation, minimised over
/// degree-respecting relabelings; equal codes iff isomorphic. n <= 8.
std::uint64_t canonical_code(const Graph& g);

/// All non-isomorphic graphs on exactly n vertices whose members pass keep.
/// keep must be hereditary (closed under vertex deletion) for the
/// vertex-augmentation search to be exhaustive. n <= 8.
std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& keep);

/// Instance stream for a sweep. Enumerate mode lists every class member up
/// to isomorphism per order in range. Random mode emits deterministic
/// structured seeds (fixtures, blow-ups, cliques with pendant structures,
/// planted-clique families) and then rejection-sampled random graphs over a
/// density grid until sample_count instances exist. Every emitted graph is
/// a class member; identical configs give identical streams.
std::vector<Graph> generate_class_instances(const SweepConfig& cfg);

/// Runs the full property pipeline per instance: class re-check, partition
/// and claims over sampled clique orderings, the class's constructive
/// colouring (plus colour_p4p2 alongside colour_p3p2 where both apply),
/// properness, bound compliance, the exact-chromatic sandwich, and the
/// perfectness checks the bounds table asserts. Fault-injection modes
/// corrupt each instance instead and expect detection.
SweepReport run_suite(const SweepConfig& cfg);

std::string encode_edge_list(const Graph& g);

/// Short branch token of a diamond-colourer trace, for coverage accounting.
std::string case_token(const std::string& trace);

std::string mode_name(SweepMode m);
std::string injection_name(FaultInjection f);

} // namespace wagon
