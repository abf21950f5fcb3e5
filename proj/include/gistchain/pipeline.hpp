#pragma once
// End-to-end orchestration shared by the CLI and the test suites: wire the
// gateway from config, run discovery, assemble the context, and fill the
// run log.

#include <memory>
#include <string>

#include "gistchain/config.hpp"
#include "gistchain/corpus_store.hpp"
#include "gistchain/hybrid_index.hpp"
#include "gistchain/runlog.hpp"

namespace gistchain {

// Routes every configured role to its backend. With config.mock_script set,
// all roles share one scripted mock; otherwise HTTP backends are built from
// the per-role endpoints.
void wire_gateway(Gateway& gateway, const EngineConfig& config);

struct PipelineResult {
    RunLog log;
    TaskContext context;
};

// Full discovery pipeline over an already-built index. task_id may be empty;
// it then derives from the task text.
PipelineResult run_pipeline(const std::string& task, const std::string& task_id,
                            const CorpusStore& store, const HybridIndex& index,
                            Gateway& gateway, const EngineConfig& config);

// Ingests a JSON-lines corpus, generates gists per config.gist_mode, embeds
// them, and builds the hybrid index.
std::pair<CorpusStore, HybridIndex> build_corpus_and_index(const std::string& corpus_path,
                                                           Gateway& gateway,
                                                           const EngineConfig& config);

} // namespace gistchain
