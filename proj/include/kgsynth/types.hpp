#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kgsynth {

struct Document {
    std::string doc_id;
    std::string text;
    std::map<std::string, std::string> metadata;
};

/// A contiguous, non-overlapping document slice. Sentences joined with single
/// spaces; concatenating chunks in index order reproduces every sentence of
/// the source document exactly once.
struct Chunk {
    std::string chunk_id;
    std::string doc_id;
    int index = 0;
    std::string text;
    std::optional<std::string> decontextualized_text;
    std::optional<double> rouge_f1;
    bool drift_rejected = false;
    int token_count = 0;

    /// Text downstream stages consume: the accepted rewrite, or the original
    /// when no rewrite exists or it was rejected for drift.
    const std::string& effective_text() const {
        if (decontextualized_text && !drift_rejected) return *decontextualized_text;
        return text;
    }

    bool operator==(const Chunk&) const = default;
};

struct EntityNode {
    std::string entity_id;
    std::string name;
    std::string type_label;
    std::string normalized_name;

    bool operator==(const EntityNode&) const = default;
};

struct EmbeddingVector {
    std::vector<float> values;

    int dim() const { return static_cast<int>(values.size()); }
    bool operator==(const EmbeddingVector&) const = default;
};

struct Proposition {
    std::string prop_id;
    std::string text;
    std::string chunk_id;
    std::optional<EmbeddingVector> embedding; // cache, filled by index build

    bool operator==(const Proposition&) const = default;
};

struct Quadruplet {
    std::string quad_id;
    std::string source;    // entity_id
    std::string predicate;
    std::string target;    // entity_id
    std::string prop_id;
    std::string chunk_id;

    bool operator==(const Quadruplet&) const = default;
};

enum class AnswerRole { Head, Relation, Tail };

const char* answer_role_name(AnswerRole role);
std::optional<AnswerRole> answer_role_from_name(const std::string& name);

/// Proxy fact derived from a QA pair; the gold answer appears (after
/// normalization) in the part named by answer_role.
struct GroundTruthTriplet {
    std::string question_id;
    std::string head;
    std::string relation;
    std::string tail;
    AnswerRole answer_role = AnswerRole::Tail;

    bool operator==(const GroundTruthTriplet&) const = default;
};

/// One extracted fact with its semantic triplets, as parsed from the
/// relation-extraction reply.
struct FactRecord {
    std::string fact_text;
    std::vector<std::array<std::string, 3>> triplets;
};

} // namespace kgsynth
