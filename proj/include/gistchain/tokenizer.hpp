#pragma once
// Engine tokenizer and text hashing.
//
// The tokenizer is the single source of truth for every token budget and
// token count in the engine. A token is a maximal run of ASCII alphanumeric
// bytes or non-ASCII UTF-8 code points; every other byte separates tokens.
// Counting and index terms use the ASCII-lowercased form.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gistchain {

struct TokenSpan {
    size_t begin = 0; // byte offset of first byte
    size_t end = 0;   // one past last byte
};

// Byte spans of all tokens, in order.
std::vector<TokenSpan> token_spans(std::string_view text);

// Lowercased token strings (index terms).
std::vector<std::string> tokenize(std::string_view text);

size_t count_tokens(std::string_view text);

// Shortest prefix of `text` that contains min(budget, count_tokens(text))
// tokens; token content and separators inside the prefix are preserved.
std::string truncate_to_tokens(std::string_view text, size_t budget);

bool valid_utf8(std::string_view bytes);

std::string to_lower_ascii(std::string_view s);

// FNV-1a over bytes.
uint64_t fnv1a64(std::string_view bytes);
// 128-bit FNV-1a, hex encoded (32 chars). Used for content-derived ids.
std::string content_hash_hex(std::string_view bytes);

} // namespace gistchain
