#pragma once
// Engine configuration: defaults, key=value config files, and flag
// overrides. Precedence is flags over file over defaults. Unknown keys are
// rejected. Secrets never live in config files; provider keys are named env
// vars.

#include <json.hpp>
#include <cstdint>
#include <string>

#include "gistchain/agent_types.hpp"
#include "gistchain/gateway.hpp"
#include "gistchain/synthesis.hpp"

namespace gistchain {

struct EngineConfig {
    // discovery
    int max_diffusion_depth = 5;
    int max_intents = 8;
    int max_queries_per_decompose = 6;
    uint64_t k = 20;
    uint64_t pool_per_side = 50;
    double alpha = 0.5;
    uint64_t workers = 8;

    // budgets (engine tokenizer tokens)
    uint64_t gist_llm_budget = 512;
    uint64_t gist_truncation_budget = 1024;
    uint64_t chunk_tokens = 6000;
    uint64_t unit_cap_tokens = 512;
    uint64_t summary_cap_tokens = 1024;
    uint64_t context_budget = 8192;

    // index
    double bm25_k1 = 1.2;
    double bm25_b = 0.75;

    // mock embedder shape (live embedders define their own dimension)
    int embedding_dim = 64;
    uint64_t embedding_seed = 7;

    // providers; a non-empty mock_script routes every role to the scripted
    // mock and ignores endpoints
    std::string mock_script;
    ProviderConfig central;
    ProviderConfig auxiliary;
    ProviderConfig embedder;
    ProviderConfig downstream;

    std::string gist_mode = "truncation"; // "llm" | "truncation"
    bool fixed_clock = false;             // deterministic timestamps and run ids

    static EngineConfig defaults() { return {}; }
    static EngineConfig from_file(const std::string& path);

    // Applies one key=value pair; throws ConfigError on unknown keys or
    // unparseable values. Shared by the file loader and CLI flags.
    void apply_kv(const std::string& key, const std::string& value);

    void validate() const;

    nlohmann::json snapshot() const;

    DiscoveryConfig discovery() const;
    SynthesisConfig synthesis() const;
};

} // namespace gistchain
