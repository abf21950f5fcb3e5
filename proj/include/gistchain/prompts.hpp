#pragma once
// Every prompt the engine sends, in one place. These templates are part of
// the engine's observable behavior: golden run logs depend on them, so any
// change here is a format change.

#include <string>
#include <vector>

namespace gistchain {

struct EvidenceUnit;

namespace prompts {

std::string gist(const std::string& title, const std::string& source, const std::string& text);

std::string initial_reasoning(const std::string& task);

std::string decompose(int intent_id, const std::string& intent_description, int max_queries);

std::string sufficiency_verdict(int intent_id, const std::string& intent_description,
                                const std::string& evidence_draft, int round);

std::string advance(const std::string& task,
                    const std::vector<std::pair<std::string, std::string>>& resolved_chain,
                    int resolved_count, int max_intents);

std::string filter_check(const std::string& intent_description, const std::string& gist_text);

std::string extract(const std::string& intent_description, const std::string& chunk_text,
                    int chunk_index, int chunk_count, const std::string& none_sentinel);

std::string compress(const std::string& intent_description, const std::string& combined,
                     const std::string& none_sentinel);

std::string reduce(int intent_id, const std::string& intent_description,
                   const std::vector<EvidenceUnit>& units);

std::string answer(const std::string& rendered_context, const std::string& task);

} // namespace prompts
} // namespace gistchain
