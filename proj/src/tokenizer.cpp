#include "gistchain/tokenizer.hpp"

namespace gistchain {

namespace {

inline bool is_token_byte(unsigned char c) {
    if (c >= 0x80) return true; // any UTF-8 continuation or lead byte
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

} // namespace

std::vector<TokenSpan> token_spans(std::string_view text) {
    std::vector<TokenSpan> spans;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        if (!is_token_byte(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        size_t begin = i;
        while (i < n && is_token_byte(static_cast<unsigned char>(text[i]))) ++i;
        spans.push_back({begin, i});
    }
    return spans;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& sp : token_spans(text)) {
        out.push_back(to_lower_ascii(text.substr(sp.begin, sp.end - sp.begin)));
    }
    return out;
}

size_t count_tokens(std::string_view text) {
    size_t count = 0;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        if (!is_token_byte(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        ++count;
        while (i < n && is_token_byte(static_cast<unsigned char>(text[i]))) ++i;
    }
    return count;
}

std::string truncate_to_tokens(std::string_view text, size_t budget) {
    if (budget == 0) return std::string();
    size_t seen = 0;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        if (!is_token_byte(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        ++seen;
        while (i < n && is_token_byte(static_cast<unsigned char>(text[i]))) ++i;
        if (seen == budget) return std::string(text.substr(0, i));
    }
    return std::string(text);
}

bool valid_utf8(std::string_view bytes) {
    size_t i = 0;
    const size_t n = bytes.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(bytes[i]);
        size_t len;
        uint32_t cp;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + len > n) return false;
        for (size_t j = 1; j < len; ++j) {
            unsigned char cc = static_cast<unsigned char>(bytes[i + j]);
            if ((cc & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        // reject overlong encodings, surrogates, and out-of-range points
        if (len == 2 && cp < 0x80) return false;
        if (len == 3 && cp < 0x800) return false;
        if (len == 4 && cp < 0x10000) return false;
        if (cp >= 0xD800 && cp <= 0xDFFF) return false;
        if (cp > 0x10FFFF) return false;
        i += len;
    }
    return true;
}

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string content_hash_hex(std::string_view bytes) {
    // 128-bit FNV-1a: offset basis 0x6c62272e07bb014262b821756295c58d,
    // prime 2^88 + 2^8 + 0x3b.
    unsigned __int128 h = (static_cast<unsigned __int128>(0x6c62272e07bb0142ULL) << 64) |
                          0x62b821756295c58dULL;
    const unsigned __int128 prime =
        (static_cast<unsigned __int128>(1) << 88) | (1ULL << 8) | 0x3b;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= prime;
    }
    static const char* hexd = "0123456789abcdef";
    std::string out(32, '0');
    for (int i = 31; i >= 0; --i) {
        out[static_cast<size_t>(i)] = hexd[static_cast<unsigned>(h & 0xF)];
        h >>= 4;
    }
    return out;
}

} // namespace gistchain
