#pragma once

#include <stdexcept>
#include <string>

namespace openworld {

// Base for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fatal ingestion failures (unreadable file, zero valid records).
struct IngestError : Error {
    using Error::Error;
};

// Bad configuration: empty vocabularies, out-of-range parameters, missing files.
struct ConfigError : Error {
    using Error::Error;
};

// Structural problems in configurations (incompatible closed bonds, degenerate boxes).
struct ValidationError : Error {
    using Error::Error;
};

// A concept was queried that is not present in the knowledge graph.
struct MissingConceptError : Error {
    explicit MissingConceptError(const std::string& name)
        : Error("unknown concept: " + name), concept_name(name) {}
    std::string concept_name;
};

// A concept has no embedding vector.
struct MissingEmbeddingError : Error {
    explicit MissingEmbeddingError(const std::string& name)
        : Error("no embedding for concept: " + name), concept_name(name) {}
    std::string concept_name;
};

}  // namespace openworld
