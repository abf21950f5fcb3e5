#pragma once
// Shared domain types of the agentic loop.

#include <string>
#include <vector>

#include "gistchain/hybrid_index.hpp"

namespace gistchain {

enum class IntentStatus { open, resolved, abandoned };

const char* intent_status_name(IntentStatus s);
IntentStatus intent_status_from_name(std::string_view name);

struct AtomicQuery {
    int query_id = 0;  // unique within a run
    int intent_id = 0;
    std::string text;
    int depth = 0;        // 0 = initial decomposition round
    int issued_round = 0; // 1-based round index
};

struct Intent {
    int intent_id = 0; // 1-based, contiguous within a run
    std::string description;
    IntentStatus status = IntentStatus::open;
    std::vector<AtomicQuery> queries;
    int rounds_used = 0;
};

// Retrieval result for one atomic query.
struct AtomicSpace {
    int query_id = 0;
    std::vector<RankedHit> hits;
};

struct DiscoveryConfig {
    int max_diffusion_depth = 5; // expansion rounds after the initial decomposition
    int max_intents = 8;
    int max_queries_per_decompose = 6;
    size_t k = 20; // hits per query
    double alpha = 0.5;
    size_t pool_per_side = 50;
    size_t workers = 8;
};

struct EvidenceUnit {
    std::string doc_id;
    int intent_id = 0;
    std::string content;
    std::string salience_note;
};

struct KnowledgeSubspace {
    int intent_id = 0;
    std::string summary;
    std::vector<EvidenceUnit> units;
    uint64_t retrieved_count = 0;
    uint64_t browsed_count = 0;
    bool empty_evidence = false;
};

} // namespace gistchain
