#pragma once
// Uniform access to the provider roles: the central reasoner, the auxiliary
// processor, the embedder, and an optional downstream answerer.
//
// The gateway owns retry, token accounting, and bounded concurrency for
// auxiliary calls. Backends are pluggable; the scripted mock makes full
// pipeline runs deterministic and offline.

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gistchain/parallel.hpp"

namespace gistchain {

enum class Role { central, auxiliary, embedder, downstream };
const char* role_name(Role r);

struct ChatMessage {
    std::string role; // "system" | "user" | "assistant"
    std::string content;
};

struct Usage {
    uint64_t prompt_tokens = 0;
    uint64_t completion_tokens = 0;
    uint64_t total() const { return prompt_tokens + completion_tokens; }
};

struct Completion {
    std::string text;
    Usage usage;
};

struct CallRecord {
    Role role;
    uint64_t prompt_tokens = 0;
    uint64_t completion_tokens = 0;
    uint64_t timestamp_ms = 0;
};

struct FailureRecord {
    Role role;
    std::string error;
    uint64_t timestamp_ms = 0;
};

// Two-bucket token accounting: central usage is "reasoning", auxiliary and
// embedder usage is "processing". Downstream answer calls are tracked in
// their own bucket. Only successful calls enter the call list; failed
// attempts go to the failure list.
class TokenLedger {
public:
    void record(Role role, const Usage& usage, uint64_t timestamp_ms);
    void record_failure(Role role, std::string error, uint64_t timestamp_ms);

    uint64_t reasoning_tokens() const;
    uint64_t processing_tokens() const;
    uint64_t downstream_tokens() const;
    std::vector<CallRecord> calls() const;
    std::vector<FailureRecord> failures() const;
    size_t call_count(Role role) const;

private:
    mutable std::mutex mu_;
    uint64_t reasoning_ = 0;
    uint64_t processing_ = 0;
    uint64_t downstream_ = 0;
    std::vector<CallRecord> calls_;
    std::vector<FailureRecord> failures_;
};

class ProviderBackend {
public:
    virtual ~ProviderBackend() = default;
    virtual Completion complete(const std::string& model,
                                const std::vector<ChatMessage>& messages) = 0;
    // One vector per input text, provider dimension, not yet normalized.
    virtual std::pair<std::vector<Eigen::VectorXf>, Usage>
    embed(const std::string& model, const std::vector<std::string>& texts) = 0;
};

struct MockRule {
    std::string match; // substring over the concatenated message contents
    std::string response;
    uint64_t prompt_tokens = 0;
    uint64_t completion_tokens = 0;
};

// First-rule-wins substring matching; identical prompts always produce
// identical responses. Embeddings are seeded-hash unit directions, bitwise
// stable for a given (text, dim, seed).
class ScriptedMockBackend : public ProviderBackend {
public:
    ScriptedMockBackend(std::vector<MockRule> rules, std::string default_response,
                        int embed_dim = 64, uint64_t embed_seed = 7);

    // Script file schema:
    // { "default_response": str,
    //   "rules": [{"match": str, "response": str,
    //              "prompt_tokens": int, "completion_tokens": int}, ...],
    //   "embedding": {"dim": int, "seed": int} }
    static std::shared_ptr<ScriptedMockBackend> from_json_file(const std::string& path);

    Completion complete(const std::string& model,
                        const std::vector<ChatMessage>& messages) override;
    std::pair<std::vector<Eigen::VectorXf>, Usage>
    embed(const std::string& model, const std::vector<std::string>& texts) override;

    // Deterministic direction for one text; exposed for fixtures.
    static Eigen::VectorXf hash_embedding(std::string_view text, int dim, uint64_t seed);

private:
    std::vector<MockRule> rules_;
    std::string default_response_;
    int embed_dim_;
    uint64_t embed_seed_;
};

// Chat-completion wire protocol over HTTP: POST {endpoint}/chat/completions
// with a messages array, POST {endpoint}/embeddings for vectors. The API key
// is sent as a bearer token when present.
class HttpBackend : public ProviderBackend {
public:
    HttpBackend(std::string endpoint, std::string api_key, int timeout_sec);

    Completion complete(const std::string& model,
                        const std::vector<ChatMessage>& messages) override;
    std::pair<std::vector<Eigen::VectorXf>, Usage>
    embed(const std::string& model, const std::vector<std::string>& texts) override;

private:
    std::string scheme_host_; // e.g. http://127.0.0.1:8080
    std::string base_path_;   // e.g. /v1
    std::string api_key_;
    int timeout_sec_;
};

struct ProviderConfig {
    std::string endpoint;
    std::string model_name;
    std::string api_key_env; // name of the env var holding the key
    int max_retries = 3;     // attempts = max_retries
    int timeout_sec = 60;
};

class Gateway {
public:
    Gateway();

    void configure(Role role, ProviderConfig config, std::shared_ptr<ProviderBackend> backend);
    bool configured(Role role) const;

    // Provider text plus usage. Transport failures are retried with
    // exponential backoff up to the role's max_retries; the ledger records
    // only the successful call.
    Completion complete(Role role, const std::vector<ChatMessage>& messages);

    // Batched embedding of all texts; every returned vector is
    // unit-normalized. Throws DimensionMismatch if the provider dimension
    // changes mid-run.
    std::vector<Eigen::VectorXf> embed(const std::vector<std::string>& texts);

    TokenLedger& ledger() { return ledger_; }
    const TokenLedger& ledger() const { return ledger_; }

    // At most this many auxiliary calls run concurrently.
    void set_worker_bound(size_t w);
    size_t worker_bound() const { return worker_bound_; }

    void set_embed_batch(size_t n) { embed_batch_ = n; }
    void set_backoff_base_ms(uint64_t ms) { backoff_base_ms_ = ms; }
    // Deterministic runs replace the wall clock.
    void set_clock(std::function<uint64_t()> clock) { clock_ = std::move(clock); }

private:
    struct Slot {
        bool set = false;
        ProviderConfig config;
        std::shared_ptr<ProviderBackend> backend;
    };

    Slot& slot(Role role);
    const Slot& slot(Role role) const;
    Completion call_with_retry(Role role, const std::vector<ChatMessage>& messages);

    Slot slots_[4];
    TokenLedger ledger_;
    size_t worker_bound_ = 8;
    size_t embed_batch_ = 64;
    uint64_t backoff_base_ms_ = 100;
    std::function<uint64_t()> clock_;
    std::unique_ptr<Semaphore> aux_sem_;
    int embed_dim_ = 0; // discovered from the first embed response
    std::mutex embed_dim_mu_;
};

// ---------------------------------------------------------------------------
// Structured model output
// ---------------------------------------------------------------------------

struct Verdict {
    bool sufficient = false;
    std::vector<std::string> new_queries;
};

struct QueryList {
    std::vector<std::string> queries;
};

struct IntentPlan {
    std::string preamble; // optional intrinsic-knowledge note
    std::string intent;
    bool done = false;
};

struct ParseFailure {
    std::string reason;
};

enum class Schema { verdict, queries, intents };

using Parsed = std::variant<ParseFailure, Verdict, QueryList, IntentPlan>;

// Extracts the first JSON object embedded in free text and validates it
// against the named schema. Total: never throws into the agent loop.
Parsed parse_structured(std::string_view text, Schema schema);

// The raw JSON text of the first balanced object in `text`, if any.
std::optional<std::string> first_json_object(std::string_view text);

} // namespace gistchain
