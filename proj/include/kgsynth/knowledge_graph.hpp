#pragma once

#include "kgsynth/types.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace kgsynth {

enum class NodeKind { Entity, Proposition };

/// In-memory knowledge graph: entity and proposition nodes, quadruplet edges,
/// the chunk store, and the bipartite entity<->proposition adjacency derived
/// from the quadruplets.
///
/// Mutable only during assembly by a single writer. freeze() canonicalizes
/// quadruplet order, validates referential integrity, and makes the graph
/// safe for unrestricted concurrent reads. Proposition embeddings are a cache
/// and may still be filled after freeze by a single-writer index build.
class KnowledgeGraph {
public:
    /// Insert or unify an entity by normalized name. Keeps the longer surface
    /// name and upgrades an "unknown" type label when a typed duplicate
    /// arrives. Returns the entity id.
    std::string merge_entity(const EntityNode& candidate);

    void add_chunk(Chunk chunk);
    void add_proposition(Proposition prop);
    void add_quadruplet(Quadruplet quad);

    // Raw inserts used by the store loader and test fixtures; preserve the
    // record's own id. Integrity is checked by validate(), not here.
    void insert_entity(EntityNode entity);

    /// Adjacent node ids across the bipartite edge: for an entity, the
    /// propositions of quadruplets where it is source or target; for a
    /// proposition, the entities of its quadruplets. Sorted ascending.
    std::vector<std::string> neighbors(const std::string& node_id, NodeKind kind) const;

    /// Full-scan integrity check; throws corrupt-store naming the offending
    /// record on dangling references, orphan propositions, duplicate
    /// normalized names, or adjacency drift.
    void validate() const;

    /// Canonicalize (sort quadruplets by id), validate, and mark immutable.
    void freeze();
    bool frozen() const { return frozen_; }

    void cache_embedding(const std::string& prop_id, EmbeddingVector vec);

    const std::map<std::string, EntityNode>& entities() const { return entities_; }
    const std::map<std::string, Proposition>& propositions() const { return propositions_; }
    const std::vector<Quadruplet>& quadruplets() const { return quadruplets_; }
    const std::map<std::string, Chunk>& chunks() const { return chunks_; }

    const EntityNode* find_entity(const std::string& entity_id) const;
    const Proposition* find_proposition(const std::string& prop_id) const;
    const Chunk* find_chunk(const std::string& chunk_id) const;
    const EntityNode* find_entity_by_normalized_name(const std::string& normalized) const;

    const std::set<std::string>& props_of_entity(const std::string& entity_id) const;
    const std::set<std::string>& entities_of_prop(const std::string& prop_id) const;

    /// Quadruplets deduplicated by (source, predicate, target); provenance
    /// duplicates across chunks collapse to the first by quad id.
    std::vector<const Quadruplet*> deduplicated_quadruplets() const;

    bool operator==(const KnowledgeGraph& other) const;

private:
    void require_mutable() const;
    void index_quadruplet(const Quadruplet& quad);

    std::map<std::string, EntityNode> entities_;
    std::map<std::string, std::string> by_normalized_name_; // normalized -> entity_id
    std::map<std::string, Proposition> propositions_;
    std::vector<Quadruplet> quadruplets_;
    std::map<std::string, Chunk> chunks_;
    std::map<std::string, std::set<std::string>> entity_adjacency_; // entity -> props
    std::map<std::string, std::set<std::string>> prop_adjacency_;   // prop -> entities
    bool frozen_ = false;
};

/// Append `source`'s chunks, propositions, and quadruplets to `target`,
/// unifying entities by normalized name. Entity ids are content hashes of the
/// normalized name, so edge endpoints stay valid without remapping.
void merge_graph_into(KnowledgeGraph& target, const KnowledgeGraph& source);

} // namespace kgsynth
