#pragma once

#include "kgsynth/types.hpp"

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <string>
#include <vector>

namespace kgsynth {

struct Message {
    std::string role; // system | user | assistant
    std::string content;
};

struct ChatRequest {
    std::vector<Message> messages;
    double temperature = 0.0;
    int max_output_tokens = 2048;
};

ChatRequest user_request(std::string content);

/// Bounds concurrent outbound requests and tracks observable counters.
class ConcurrencyGate {
public:
    explicit ConcurrencyGate(int max_concurrency);

    void acquire();
    void release();

    int max_concurrency() const { return max_concurrency_; }
    int in_flight() const { return in_flight_; }
    int max_in_flight_observed() const { return max_in_flight_; }

private:
    int max_concurrency_;
    int in_flight_ = 0;
    int max_in_flight_ = 0;
    std::mutex mutex_;
    std::condition_variable cv_;
};

/// Chat-completion service. chat() validates the request, respects the
/// concurrency cap, and counts calls; transports implement chat_impl().
class ChatClient {
public:
    explicit ChatClient(int max_concurrency = 4) : gate_(max_concurrency) {}
    virtual ~ChatClient() = default;

    std::string chat(const ChatRequest& request);

    std::size_t total_calls() const { return total_calls_; }
    const ConcurrencyGate& gate() const { return gate_; }

protected:
    virtual std::string chat_impl(const ChatRequest& request) = 0;

private:
    ConcurrencyGate gate_;
    std::atomic<std::size_t> total_calls_{0};
};

/// Embedding service. One vector per input, order-preserving, constant
/// dimension. Batches above max_batch() are the caller's responsibility.
class EmbedClient {
public:
    explicit EmbedClient(int max_concurrency = 4, int max_batch = 64)
        : gate_(max_concurrency), max_batch_(max_batch) {}
    virtual ~EmbedClient() = default;

    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts);

    /// Convenience wrapper that splits into max_batch()-sized requests.
    std::vector<EmbeddingVector> embed_all(const std::vector<std::string>& texts);

    EmbeddingVector embed_one(const std::string& text);

    int max_batch() const { return max_batch_; }
    std::size_t total_calls() const { return total_calls_; }
    std::size_t total_texts() const { return total_texts_; }
    const ConcurrencyGate& gate() const { return gate_; }

protected:
    virtual std::vector<EmbeddingVector> embed_impl(const std::vector<std::string>& texts) = 0;

private:
    ConcurrencyGate gate_;
    int max_batch_;
    std::atomic<std::size_t> total_calls_{0};
    std::atomic<std::size_t> total_texts_{0};
};

/// Cosine similarity; 0 for zero-norm inputs. Throws invalid-input on
/// dimension mismatch.
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

} // namespace kgsynth
