#pragma once
// Document corpus with per-document gist memories.
//
// Identity is content-derived: doc_id is the hex hash of the normalized
// text, so re-ingesting identical bytes is a no-op. The store is safe for
// concurrent reads once ingestion is finished; writes go through a single
// writer.
//
// On-disk layout (directory):
//   manifest.json    version, dim, doc order, checksums of the data files
//   documents.jsonl  one JSON object per document (text fields + gist)
//   embeddings.f32   little-endian float32, row-major, row i = manifest entry i

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gistchain {

class Gateway;

enum class DocFormat { html, pdf_text, plain };
enum class GistGenerator { llm, truncation, verbatim };

const char* gist_generator_name(GistGenerator g);
GistGenerator gist_generator_from_name(std::string_view name);

struct Document {
    std::string doc_id;
    std::string source;
    std::string title;
    std::string raw_text;
    std::string fetched_at; // ISO-8601, may be empty
    uint64_t token_count = 0;
};

struct GistMemory {
    std::string doc_id;
    std::string gist_text;
    Eigen::VectorXf embedding; // size 0 until embedded
    GistGenerator generator = GistGenerator::truncation;
};

// Format-specific extraction followed by whitespace collapsing. Exposed for
// tests; ingest() calls this internally.
std::string extract_text(std::string_view raw_bytes, DocFormat format);
std::string normalize_text(std::string_view text);

class CorpusStore {
public:
    // Decodes, normalizes and persists one document. Returns the stored
    // document; identical content returns the already-stored one.
    const Document& ingest(std::string_view raw_bytes, std::string source, DocFormat format,
                           std::string title = {}, std::string fetched_at = {});

    // LLM-produced gist, truncated to budget_tokens. Documents at or under
    // the budget skip the provider and keep their text verbatim.
    const GistMemory& generate_gist(const Document& doc, Gateway& gateway, size_t budget_tokens);

    // Prefix-of-token-stream gist; no provider involved.
    const GistMemory& bootstrap_gist(const Document& doc, size_t budget_tokens);

    const Document* find(const std::string& doc_id) const;
    const Document& get(const std::string& doc_id) const; // throws UnknownDocument
    const GistMemory* find_gist(const std::string& doc_id) const;
    const GistMemory& gist(const std::string& doc_id) const; // throws UnknownDocument

    void set_embedding(const std::string& doc_id, Eigen::VectorXf embedding);

    // Documents in insertion order; this order defines embedding rows.
    const std::vector<Document>& documents() const { return docs_; }
    size_t size() const { return docs_.size(); }
    bool all_have_gists() const;
    // Embedding dimension, or 0 while no embedding is set.
    int embedding_dim() const;

    void save(const std::string& dir) const;
    static CorpusStore load(const std::string& dir);

private:
    GistMemory& upsert_gist(GistMemory gm);

    std::vector<Document> docs_;
    std::unordered_map<std::string, size_t> index_; // doc_id -> docs_ position
    std::unordered_map<std::string, GistMemory> gists_;
};

// Reads the JSON-lines corpus format: {"url", "text", "title"?, "fetched_at"?, "id"?}.
// The optional "id" is accepted and ignored; identity stays content-derived.
// Returns the number of lines ingested.
size_t load_corpus_jsonl(const std::string& path, CorpusStore& store);

} // namespace gistchain
