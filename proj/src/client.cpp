#include "kgsynth/client.hpp"

#include "kgsynth/error.hpp"

#include <cmath>

namespace kgsynth {

ChatRequest user_request(std::string content) {
    ChatRequest request;
    request.messages.push_back({"user", std::move(content)});
    return request;
}

ConcurrencyGate::ConcurrencyGate(int max_concurrency)
    : max_concurrency_(max_concurrency < 1 ? 1 : max_concurrency) {}

void ConcurrencyGate::acquire() {
    std::unique_lock lock(mutex_);
    cv_.wait(lock, [&] { return in_flight_ < max_concurrency_; });
    ++in_flight_;
    if (in_flight_ > max_in_flight_) max_in_flight_ = in_flight_;
}

void ConcurrencyGate::release() {
    {
        std::lock_guard lock(mutex_);
        --in_flight_;
    }
    cv_.notify_one();
}

namespace {

struct GateGuard {
    explicit GateGuard(ConcurrencyGate& gate) : gate_(gate) { gate_.acquire(); }
    ~GateGuard() { gate_.release(); }
    ConcurrencyGate& gate_;
};

void validate_chat_request(const ChatRequest& request) {
    if (request.messages.empty())
        throw Error(ErrorKind::InvalidInput, "chat request has no messages");
    for (const auto& message : request.messages) {
        if (message.role != "system" && message.role != "user" && message.role != "assistant")
            throw Error(ErrorKind::InvalidInput, "unknown message role '" + message.role + "'");
    }
    if (request.temperature < 0.0)
        throw Error(ErrorKind::InvalidInput, "temperature must be >= 0");
}

} // namespace

std::string ChatClient::chat(const ChatRequest& request) {
    validate_chat_request(request);
    GateGuard guard(const_cast<ConcurrencyGate&>(gate_));
    ++total_calls_;
    return chat_impl(request);
}

std::vector<EmbeddingVector> EmbedClient::embed(const std::vector<std::string>& texts) {
    if (texts.empty()) return {};
    if (static_cast<int>(texts.size()) > max_batch_)
        throw Error(ErrorKind::InvalidInput,
                    "batch of " + std::to_string(texts.size()) + " exceeds max batch " +
                        std::to_string(max_batch_));
    for (std::size_t i = 0; i < texts.size(); ++i) {
        if (texts[i].empty())
            throw Error(ErrorKind::InvalidInput, "empty text at index " + std::to_string(i));
    }
    GateGuard guard(const_cast<ConcurrencyGate&>(gate_));
    ++total_calls_;
    total_texts_ += texts.size();
    auto vectors = embed_impl(texts);
    if (vectors.size() != texts.size())
        throw Error(ErrorKind::Service, "embedding count does not match input count");
    for (std::size_t i = 1; i < vectors.size(); ++i) {
        if (vectors[i].dim() != vectors[0].dim())
            throw Error(ErrorKind::Service, "embedding dimensions are not constant");
    }
    return vectors;
}

std::vector<EmbeddingVector> EmbedClient::embed_all(const std::vector<std::string>& texts) {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (std::size_t start = 0; start < texts.size(); start += static_cast<std::size_t>(max_batch_)) {
        std::size_t end = std::min(texts.size(), start + static_cast<std::size_t>(max_batch_));
        std::vector<std::string> batch(texts.begin() + static_cast<long>(start),
                                       texts.begin() + static_cast<long>(end));
        auto vectors = embed(batch);
        for (auto& v : vectors) out.push_back(std::move(v));
    }
    return out;
}

EmbeddingVector EmbedClient::embed_one(const std::string& text) {
    return embed({text}).front();
}

double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.dim() != b.dim())
        throw Error(ErrorKind::InvalidInput, "cosine of vectors with different dimensions");
    double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        dot += static_cast<double>(a.values[static_cast<size_t>(i)]) * b.values[static_cast<size_t>(i)];
        norm_a += static_cast<double>(a.values[static_cast<size_t>(i)]) * a.values[static_cast<size_t>(i)];
        norm_b += static_cast<double>(b.values[static_cast<size_t>(i)]) * b.values[static_cast<size_t>(i)];
    }
    if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
    return dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
}

} // namespace kgsynth
