#pragma once

#include "kgsynth/client.hpp"

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace kgsynth {

/// One scripted reply: fires when the flattened prompt contains every
/// `contains` fragment. First matching rule wins.
struct MockRule {
    std::vector<std::string> contains;
    std::string response;
};

/// Deterministic chat client for offline tests: a rule registry keyed by
/// prompt content, loadable from a JSON fixture file. Replies are a pure
/// function of the prompt; unmatched prompts use the default reply or fail
/// loudly with the prompt fingerprint.
class MockChatClient : public ChatClient {
public:
    explicit MockChatClient(int max_concurrency = 4) : ChatClient(max_concurrency) {}

    void add_rule(MockRule rule);
    void set_default_response(std::string response);

    /// Fixture schema: {"default": "...", "rules": [{"contains": [...],
    /// "response": "..."}]}. "default" is optional.
    static MockChatClient from_fixture_file(const std::filesystem::path& path,
                                            int max_concurrency = 4);

    std::vector<std::string> transcript() const;

protected:
    std::string chat_impl(const ChatRequest& request) override;

private:
    std::vector<MockRule> rules_;
    std::optional<std::string> default_response_;
    mutable std::mutex mutex_;
    std::vector<std::string> transcript_;
};

/// Deterministic embedder: each casefolded word token hashes to a coordinate,
/// counts accumulate, and the vector is L2-normalized. Identical texts map to
/// identical vectors; disjoint token sets are orthogonal.
class HashedBowEmbedder : public EmbedClient {
public:
    explicit HashedBowEmbedder(int dim = 256, int max_concurrency = 4, int max_batch = 64)
        : EmbedClient(max_concurrency, max_batch), dim_(dim) {}

    int dim() const { return dim_; }

protected:
    std::vector<EmbeddingVector> embed_impl(const std::vector<std::string>& texts) override;

private:
    int dim_;
};

} // namespace kgsynth
