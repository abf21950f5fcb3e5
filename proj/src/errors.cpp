#include "gistchain/errors.hpp"

namespace gistchain {

const char* err_name(Err e) {
    switch (e) {
        case Err::empty_document: return "EmptyDocument";
        case Err::decode_error: return "DecodeError";
        case Err::io_error: return "IoError";
        case Err::schema_version_mismatch: return "SchemaVersionMismatch";
        case Err::checksum_mismatch: return "ChecksumMismatch";
        case Err::dimension_mismatch: return "DimensionMismatch";
        case Err::unknown_document: return "UnknownDocument";
        case Err::provider_error: return "ProviderError";
        case Err::timeout: return "TimeoutError";
        case Err::planning_failure: return "PlanningFailure";
        case Err::context_overflow: return "ContextOverflow";
        case Err::empty_corpus: return "EmptyCorpus";
        case Err::config_error: return "ConfigError";
    }
    return "UnknownError";
}

} // namespace gistchain
