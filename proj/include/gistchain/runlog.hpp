#pragma once
// Structured trace of one full run: intents, queries, retrieved and browsed
// pages, evidence, ledger totals, and the rendered context. One JSON
// document per run; the schema is versioned and the log alone suffices to
// re-render the TaskContext byte-identically.

#include <json.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "gistchain/context.hpp"
#include "gistchain/discovery.hpp"

namespace gistchain {

struct QueryLogEntry {
    int query_id = 0;
    std::string text;
    int depth = 0;
    int issued_round = 0;
    std::vector<std::string> retrieved_doc_ids;
};

struct UnitLogEntry {
    std::string doc_id;
    std::string content;
    std::string salience_note;
};

struct IntentLogEntry {
    int intent_id = 0;
    std::string description;
    std::string status; // "open" | "resolved" | "abandoned"
    int rounds_used = 0;
    std::vector<QueryLogEntry> queries;
    std::vector<std::string> retrieved_ids;
    std::vector<std::string> browsed_ids;
    std::vector<UnitLogEntry> units;
    std::string summary;
    uint64_t retrieved_count = 0;
    uint64_t browsed_count = 0;
    bool empty_evidence = false;
};

struct RunLog {
    static constexpr int schema_version = 1;

    std::string run_id;
    std::string task_id;
    std::string task;
    nlohmann::json config; // effective runtime config snapshot
    std::string preamble;
    std::vector<IntentLogEntry> intents;
    std::vector<std::string> events;
    uint64_t reasoning_tokens = 0;
    uint64_t processing_tokens = 0;
    uint64_t downstream_tokens = 0;
    uint64_t wall_ms = 0;
    std::string rendered_context;
    bool has_answer = false;
    std::string answer_text;

    nlohmann::json to_json() const;
    static RunLog from_json(const nlohmann::json& j);

    void save(const std::string& path) const;
    static RunLog load(const std::string& path);

    // Rebuilds the TaskContext from logged fields only. Replaying assemble()
    // over this must reproduce rendered_context exactly.
    std::vector<ContextStep> context_steps() const;
};

} // namespace gistchain
