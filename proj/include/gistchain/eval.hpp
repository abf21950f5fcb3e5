#pragma once
// Exact Match scoring over run logs. Normalization follows the open-domain
// QA convention: lowercase, strip punctuation and the articles a/an/the,
// collapse whitespace.

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gistchain {

struct RunLog;

std::string normalize_answer(std::string_view text);
bool exact_match(std::string_view predicted, std::string_view gold);

struct EvalItem {
    std::string task_id;
    std::string predicted;
    std::string gold;
    int em = 0;
    bool missing_answer = false;
};

struct EvalReport {
    std::vector<EvalItem> items;
    double aggregate_em = 0.0;
};

// Gold file: a JSON object {task_id: answer} or JSON lines of
// {"id": ..., "answer": ...}.
std::map<std::string, std::string> load_gold(const std::string& path);

EvalReport evaluate(const std::vector<RunLog>& runs,
                    const std::map<std::string, std::string>& gold);

} // namespace gistchain
