#pragma once
// The agentic loop: initial reasoning, intent planning, atomic
// decomposition, diffusive wide exploration with per-round sufficiency
// verdicts, and advancement across intents.
//
// Termination is guaranteed on any backend: rounds per intent are bounded by
// max_diffusion_depth + 1, intents by max_intents, and every central-role
// parse failure fails closed (verdict coerced to sufficient, advancement to
// done). Total central calls <= 1 + max_intents * (2 + max_diffusion_depth).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gistchain/agent_types.hpp"
#include "gistchain/gateway.hpp"
#include "gistchain/synthesis.hpp"

namespace gistchain {

class HybridIndex;

// Retrieval abstraction for one atomic query. The engine ships the local
// hybrid-index retriever; a search-engine adapter can implement the same
// interface.
class Retriever {
public:
    virtual ~Retriever() = default;
    virtual RetrievalResult retrieve(const std::string& query) = 0;
};

// Embeds the query through the gateway and scores it against the local
// hybrid index.
class LocalIndexRetriever : public Retriever {
public:
    LocalIndexRetriever(const HybridIndex& index, Gateway& gateway, double alpha, size_t k,
                        size_t pool_per_side);
    RetrievalResult retrieve(const std::string& query) override;

private:
    const HybridIndex& index_;
    Gateway& gateway_;
    double alpha_;
    size_t k_;
    size_t pool_per_side_;
};

struct RoundTrace {
    int round = 0; // 1-based
    std::vector<AtomicQuery> queries_issued;
    bool verdict_called = false;
    bool sufficient = false;
    bool forced = false;      // verdict coerced rather than model-decided
    std::string forced_reason; // "depth_budget" | "parse_failure" | "duplicate_queries"
};

struct IntentTrace {
    Intent intent;
    std::vector<AtomicSpace> spaces;        // one per executed query
    std::vector<std::string> retrieved_ids; // dedup union, first-seen order
    std::vector<std::string> browsed_ids;   // filter survivors
    KnowledgeSubspace subspace;
    std::vector<RoundTrace> rounds;
};

struct DiscoveryRun {
    std::string preamble;
    std::vector<IntentTrace> intents;
    bool done_forced = false; // max_intents cap overrode a non-done advance
    std::vector<std::string> events;
    std::vector<SynthesisEvent> synthesis_events;
};

class DiscoveryEngine {
public:
    DiscoveryEngine(Gateway& gateway, Retriever& retriever, Synthesizer& synthesizer,
                    DiscoveryConfig config);

    // One central call: optional intrinsic-knowledge preamble plus the first
    // intent. Throws PlanningFailure if the output stays unparseable after
    // one retry or the task is empty.
    std::pair<std::string, Intent> initial_reasoning(const std::string& task);

    // Central call returning 1..max_queries_per_decompose depth-0 queries,
    // deduplicated case-insensitively after whitespace normalization.
    std::vector<AtomicQuery> decompose(Intent& intent);

    // Central sufficiency judgment over the intent and its evidence draft.
    // Unparseable output after retry coerces to sufficient.
    Verdict diffusion_round(const Intent& intent, const KnowledgeSubspace& draft, int round,
                            bool& forced);

    // Full per-intent loop: decompose, retrieve, synthesize, judge, expand.
    IntentTrace resolve_intent(Intent intent);

    // Next intent conditioned on the resolved chain, or nullopt for done.
    std::optional<Intent> advance(const std::string& task,
                                  const std::vector<IntentTrace>& chain);

    // End-to-end run across intents.
    DiscoveryRun run(const std::string& task);

    const DiscoveryConfig& config() const { return config_; }

private:
    std::string normalized_query_key(const std::string& text) const;

    Gateway& gateway_;
    Retriever& retriever_;
    Synthesizer& synthesizer_;
    DiscoveryConfig config_;
    int next_query_id_ = 1;
    std::vector<std::string> events_;
};

} // namespace gistchain
