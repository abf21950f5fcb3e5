#pragma once
// Task-specific context assembly: the resolved chain of (intent, evidence)
// pairs rendered as LLM-ready text.
//
// Rendering is a pure function of the context fields. When the rendered text
// exceeds the token budget, evidence summaries are truncated proportionally
// to their length (largest first); intent descriptions and step structure
// are never cut.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gistchain/agent_types.hpp"

namespace gistchain {

class Gateway;

struct ContextStep {
    Intent intent;
    KnowledgeSubspace subspace;
};

struct TaskContext {
    std::string task;
    std::string preamble; // intrinsic-knowledge note, may be empty
    std::vector<ContextStep> steps;
    std::string rendered;
};

// Deterministic template rendering of the chain. Throws ContextOverflow if
// the budget cannot be met even with all summaries emptied.
TaskContext assemble(const std::string& task, const std::string& preamble,
                     std::vector<ContextStep> steps, size_t budget_tokens);

// The raw template, without budget enforcement. assemble() fills
// TaskContext::rendered with this applied to the (possibly truncated) steps.
std::string render_context(const std::string& task, const std::string& preamble,
                           const std::vector<ContextStep>& steps);

nlohmann::json context_to_json(const TaskContext& ctx);

// Single downstream completion over the rendered context. Usage is logged
// under the downstream bucket.
std::string answer(const TaskContext& ctx, Gateway& gateway);

} // namespace gistchain
