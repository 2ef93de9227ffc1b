#include "kgsynth/knowledge_graph.hpp"

#include "kgsynth/error.hpp"
#include "kgsynth/ids.hpp"
#include "kgsynth/text.hpp"

#include <algorithm>

namespace kgsynth {

const char* answer_role_name(AnswerRole role) {
    switch (role) {
        case AnswerRole::Head: return "head";
        case AnswerRole::Relation: return "relation";
        case AnswerRole::Tail: return "tail";
    }
    return "tail";
}

std::optional<AnswerRole> answer_role_from_name(const std::string& name) {
    if (name == "head") return AnswerRole::Head;
    if (name == "relation") return AnswerRole::Relation;
    if (name == "tail") return AnswerRole::Tail;
    return std::nullopt;
}

void KnowledgeGraph::require_mutable() const {
    if (frozen_) throw Error(ErrorKind::FrozenGraph, "graph is frozen");
}

std::string KnowledgeGraph::merge_entity(const EntityNode& candidate) {
    require_mutable();
    if (collapse_whitespace(candidate.name).empty())
        throw Error(ErrorKind::InvalidEntity, "entity name is empty");

    const std::string normalized = normalize_name(candidate.name);
    auto it = by_normalized_name_.find(normalized);
    if (it != by_normalized_name_.end()) {
        EntityNode& existing = entities_.at(it->second);
        if (candidate.name.size() > existing.name.size()) existing.name = candidate.name;
        if ((existing.type_label.empty() || existing.type_label == "unknown") &&
            !candidate.type_label.empty() && candidate.type_label != "unknown") {
            existing.type_label = candidate.type_label;
        }
        return it->second;
    }

    EntityNode node = candidate;
    node.normalized_name = normalized;
    node.entity_id = entity_id_for(normalized);
    by_normalized_name_.emplace(normalized, node.entity_id);
    entities_.emplace(node.entity_id, std::move(node));
    return by_normalized_name_.at(normalized);
}

void KnowledgeGraph::insert_entity(EntityNode entity) {
    require_mutable();
    by_normalized_name_[entity.normalized_name] = entity.entity_id;
    entities_[entity.entity_id] = std::move(entity);
}

void KnowledgeGraph::add_chunk(Chunk chunk) {
    require_mutable();
    chunks_[chunk.chunk_id] = std::move(chunk);
}

void KnowledgeGraph::add_proposition(Proposition prop) {
    require_mutable();
    propositions_[prop.prop_id] = std::move(prop);
}

void KnowledgeGraph::index_quadruplet(const Quadruplet& quad) {
    entity_adjacency_[quad.source].insert(quad.prop_id);
    entity_adjacency_[quad.target].insert(quad.prop_id);
    prop_adjacency_[quad.prop_id].insert(quad.source);
    prop_adjacency_[quad.prop_id].insert(quad.target);
}

void KnowledgeGraph::add_quadruplet(Quadruplet quad) {
    require_mutable();
    index_quadruplet(quad);
    quadruplets_.push_back(std::move(quad));
}

std::vector<std::string> KnowledgeGraph::neighbors(const std::string& node_id,
                                                   NodeKind kind) const {
    if (kind == NodeKind::Entity) {
        if (entities_.count(node_id) == 0)
            throw Error(ErrorKind::NotFound, "entity " + node_id);
        auto it = entity_adjacency_.find(node_id);
        if (it == entity_adjacency_.end()) return {};
        return {it->second.begin(), it->second.end()};
    }
    if (propositions_.count(node_id) == 0)
        throw Error(ErrorKind::NotFound, "proposition " + node_id);
    auto it = prop_adjacency_.find(node_id);
    if (it == prop_adjacency_.end()) return {};
    return {it->second.begin(), it->second.end()};
}

const std::set<std::string>& KnowledgeGraph::props_of_entity(const std::string& entity_id) const {
    static const std::set<std::string> empty;
    auto it = entity_adjacency_.find(entity_id);
    return it == entity_adjacency_.end() ? empty : it->second;
}

const std::set<std::string>& KnowledgeGraph::entities_of_prop(const std::string& prop_id) const {
    static const std::set<std::string> empty;
    auto it = prop_adjacency_.find(prop_id);
    return it == prop_adjacency_.end() ? empty : it->second;
}

const EntityNode* KnowledgeGraph::find_entity(const std::string& entity_id) const {
    auto it = entities_.find(entity_id);
    return it == entities_.end() ? nullptr : &it->second;
}

const Proposition* KnowledgeGraph::find_proposition(const std::string& prop_id) const {
    auto it = propositions_.find(prop_id);
    return it == propositions_.end() ? nullptr : &it->second;
}

const Chunk* KnowledgeGraph::find_chunk(const std::string& chunk_id) const {
    auto it = chunks_.find(chunk_id);
    return it == chunks_.end() ? nullptr : &it->second;
}

const EntityNode* KnowledgeGraph::find_entity_by_normalized_name(
    const std::string& normalized) const {
    auto it = by_normalized_name_.find(normalized);
    return it == by_normalized_name_.end() ? nullptr : find_entity(it->second);
}

void KnowledgeGraph::validate() const {
    std::map<std::string, std::set<std::string>> expect_entity_adj;
    std::map<std::string, std::set<std::string>> expect_prop_adj;
    std::set<std::string> referenced_props;

    for (const auto& quad : quadruplets_) {
        if (entities_.count(quad.source) == 0)
            throw Error(ErrorKind::CorruptStore,
                        "quadruplet " + quad.quad_id + " has dangling source " + quad.source);
        if (entities_.count(quad.target) == 0)
            throw Error(ErrorKind::CorruptStore,
                        "quadruplet " + quad.quad_id + " has dangling target " + quad.target);
        if (propositions_.count(quad.prop_id) == 0)
            throw Error(ErrorKind::CorruptStore,
                        "quadruplet " + quad.quad_id + " has dangling prop_id " + quad.prop_id);
        if (chunks_.count(quad.chunk_id) == 0)
            throw Error(ErrorKind::CorruptStore,
                        "quadruplet " + quad.quad_id + " has dangling chunk_id " + quad.chunk_id);
        if (quad.predicate.empty())
            throw Error(ErrorKind::CorruptStore, "quadruplet " + quad.quad_id + " has empty predicate");
        expect_entity_adj[quad.source].insert(quad.prop_id);
        expect_entity_adj[quad.target].insert(quad.prop_id);
        expect_prop_adj[quad.prop_id].insert(quad.source);
        expect_prop_adj[quad.prop_id].insert(quad.target);
        referenced_props.insert(quad.prop_id);
    }

    for (const auto& [prop_id, prop] : propositions_) {
        if (prop.text.empty())
            throw Error(ErrorKind::CorruptStore, "proposition " + prop_id + " has empty text");
        if (chunks_.count(prop.chunk_id) == 0)
            throw Error(ErrorKind::CorruptStore,
                        "proposition " + prop_id + " has dangling chunk_id " + prop.chunk_id);
        if (referenced_props.count(prop_id) == 0)
            throw Error(ErrorKind::CorruptStore,
                        "proposition " + prop_id + " is not referenced by any quadruplet");
    }

    std::map<std::string, std::string> seen_normalized;
    for (const auto& [entity_id, entity] : entities_) {
        if (entity.name.empty())
            throw Error(ErrorKind::CorruptStore, "entity " + entity_id + " has empty name");
        auto [it, inserted] = seen_normalized.emplace(entity.normalized_name, entity_id);
        if (!inserted)
            throw Error(ErrorKind::CorruptStore, "entity " + entity_id +
                                                     " duplicates normalized name of " + it->second);
    }

    auto prune_empty = [](std::map<std::string, std::set<std::string>> adj) {
        for (auto it = adj.begin(); it != adj.end();) {
            if (it->second.empty()) it = adj.erase(it);
            else ++it;
        }
        return adj;
    };
    if (prune_empty(entity_adjacency_) != expect_entity_adj ||
        prune_empty(prop_adjacency_) != expect_prop_adj)
        throw Error(ErrorKind::CorruptStore, "adjacency does not match quadruplet list");
}

void KnowledgeGraph::freeze() {
    require_mutable();
    std::sort(quadruplets_.begin(), quadruplets_.end(),
              [](const Quadruplet& a, const Quadruplet& b) { return a.quad_id < b.quad_id; });
    validate();
    frozen_ = true;
}

void KnowledgeGraph::cache_embedding(const std::string& prop_id, EmbeddingVector vec) {
    auto it = propositions_.find(prop_id);
    if (it == propositions_.end()) throw Error(ErrorKind::NotFound, "proposition " + prop_id);
    it->second.embedding = std::move(vec);
}

std::vector<const Quadruplet*> KnowledgeGraph::deduplicated_quadruplets() const {
    std::set<std::string> seen;
    std::vector<const Quadruplet*> out;
    for (const auto& quad : quadruplets_) {
        std::string key = quad.source + '\x1f' + quad.predicate + '\x1f' + quad.target;
        if (seen.insert(std::move(key)).second) out.push_back(&quad);
    }
    return out;
}

bool KnowledgeGraph::operator==(const KnowledgeGraph& other) const {
    return entities_ == other.entities_ && propositions_ == other.propositions_ &&
           quadruplets_ == other.quadruplets_ && chunks_ == other.chunks_;
}

void merge_graph_into(KnowledgeGraph& target, const KnowledgeGraph& source) {
    for (const auto& [id, entity] : source.entities()) target.merge_entity(entity);
    for (const auto& [id, chunk] : source.chunks()) target.add_chunk(chunk);
    for (const auto& [id, prop] : source.propositions()) target.add_proposition(prop);
    for (const auto& quad : source.quadruplets()) target.add_quadruplet(quad);
}

} // namespace kgsynth
