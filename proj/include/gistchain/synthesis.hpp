#pragma once
// Memory-guided map-reduce over retrieved documents.
//
// filter: one auxiliary relevance check per document, judged from the gist
// alone. extract: auxiliary extraction over the full text, chunked when it
// exceeds the context budget. reduce: one auxiliary synthesis call over the
// units, canonically sorted by doc_id so the result never depends on map
// completion order.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gistchain/agent_types.hpp"

namespace gistchain {

class Gateway;
class CorpusStore;
struct Document;

struct SynthesisConfig {
    size_t workers = 8;
    size_t chunk_tokens = 6000;      // auxiliary context budget per extract call
    size_t unit_cap_tokens = 512;    // per evidence unit
    size_t summary_cap_tokens = 1024;
    std::string none_sentinel = "NO_EVIDENCE";
};

// Outcome notes for the run log (provider failures, coerced decisions).
struct SynthesisEvent {
    std::string stage; // "filter" | "extract" | "reduce"
    std::string doc_id;
    std::string note;
};

class Synthesizer {
public:
    Synthesizer(Gateway& gateway, const CorpusStore& store, SynthesisConfig config);

    // Accepted subset of hits, input order preserved. A provider failure
    // retains the document (a dropped true positive is unrecoverable).
    std::vector<std::string> filter(const std::vector<RankedHit>& hits, const Intent& intent);

    // Fine-grained evidence from one document, or nullopt when the model
    // reports nothing relevant.
    std::optional<EvidenceUnit> extract(const Document& doc, const Intent& intent);

    // Synthesized subspace over the units. Empty units yield an empty,
    // flagged summary without a provider call.
    KnowledgeSubspace reduce(std::vector<EvidenceUnit> units, const Intent& intent);

    const SynthesisConfig& config() const { return config_; }
    std::vector<SynthesisEvent> drain_events();

private:
    bool filter_one(const std::string& doc_id, const Intent& intent);
    void note(std::string stage, std::string doc_id, std::string text);

    Gateway& gateway_;
    const CorpusStore& store_;
    SynthesisConfig config_;
    std::mutex events_mu_;
    std::vector<SynthesisEvent> events_;
};

} // namespace gistchain
