#pragma once
// Engine-wide error codes. Hard failures are thrown as EngineError; soft
// outcomes (parse failures, absent evidence) are returned as values.

#include <stdexcept>
#include <string>

namespace gistchain {

enum class Err {
    empty_document,
    decode_error,
    io_error,
    schema_version_mismatch,
    checksum_mismatch,
    dimension_mismatch,
    unknown_document,
    provider_error,
    timeout,
    planning_failure,
    context_overflow,
    empty_corpus,
    config_error,
};

const char* err_name(Err e);

class EngineError : public std::runtime_error {
public:
    EngineError(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
    throw EngineError(code, msg);
}

} // namespace gistchain
