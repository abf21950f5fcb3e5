#pragma once
// Dual sparse/dense index with fused relevance scoring.
//
// Sparse side: Okapi BM25 over the raw document text (IDF floored at zero).
// Dense side: cosine over unit-normalized gist embeddings, held as an Eigen
// row-major matrix. retrieve() pools the top candidates of each side,
// min-max normalizes each component over the pool, and fuses:
//
//     fused = alpha * dense + (1 - alpha) * sparse
//
// A pool whose component scores are all equal normalizes to 0.5 for every
// member. Ties in any ranking break by ascending doc_id. The index is
// immutable after build; concurrent retrieve calls need no locking.
//
// On-disk layout (directory): manifest.json, postings.bin, dense.f32.
// postings.bin is documented in docs/FORMATS.md.

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gistchain {

class CorpusStore;
class Gateway;

struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;
};

struct Posting {
    uint32_t row = 0;
    uint32_t tf = 0;
};

struct RankedHit {
    std::string doc_id;
    double fused_score = 0.0;
    double dense_component = 0.0;  // min-max normalized, in [0,1]
    double sparse_component = 0.0; // min-max normalized, in [0,1]
};

struct RetrievalResult {
    double alpha = 0.5;
    std::vector<RankedHit> hits; // non-increasing fused_score
};

class HybridIndex {
public:
    HybridIndex() = default;

    // Sparse index over raw_text, dense index over gist embeddings. Gists
    // without an embedding are embedded through the gateway and written back
    // into the store. Requires a gist for every document.
    static HybridIndex build(CorpusStore& store, Gateway& gateway, Bm25Params params = {});

    double sparse_score(std::string_view query, const std::string& doc_id) const;
    double dense_score(const Eigen::VectorXd& unit_query, const std::string& doc_id) const;

    RetrievalResult retrieve(std::string_view query, const Eigen::VectorXd& unit_query,
                             double alpha, size_t k, size_t pool_per_side = 50) const;

    // Rows ranked by one component over the whole corpus (score desc,
    // doc_id asc). Used for pooling and exposed for ranking tests.
    std::vector<uint32_t> dense_ranking(const Eigen::VectorXd& unit_query, size_t limit) const;
    std::vector<uint32_t> sparse_ranking(std::string_view query, size_t limit) const;

    size_t doc_count() const { return doc_ids_.size(); }
    int dim() const { return static_cast<int>(dense_.cols()); }
    const Bm25Params& params() const { return params_; }
    double avg_doc_length() const { return avg_doc_length_; }
    uint64_t doc_length(const std::string& doc_id) const;
    uint32_t term_frequency(std::string_view term, const std::string& doc_id) const;
    uint32_t doc_frequency(std::string_view term) const;
    const std::vector<std::string>& doc_ids() const { return doc_ids_; }
    const std::string& doc_id_of(uint32_t row) const { return doc_ids_[row]; }
    uint32_t row_of(const std::string& doc_id) const; // throws UnknownDocument

    void save(const std::string& dir) const;
    static HybridIndex load(const std::string& dir);

private:
    double bm25_row(const std::vector<std::string>& query_terms, uint32_t row) const;
    Eigen::VectorXd dense_scores(const Eigen::VectorXd& unit_query) const;
    Eigen::VectorXd sparse_scores(const std::vector<std::string>& query_terms) const;
    std::vector<uint32_t> rank_rows(const Eigen::VectorXd& scores, size_t limit) const;

    std::map<std::string, std::vector<Posting>> postings_; // sorted term dictionary
    std::vector<uint32_t> doc_lengths_;
    std::vector<std::string> doc_ids_;
    std::map<std::string, uint32_t> row_of_;
    double avg_doc_length_ = 0.0;
    Bm25Params params_;
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> dense_;
};

} // namespace gistchain
