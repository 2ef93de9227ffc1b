#include "kgsynth/mock_client.hpp"

#include "kgsynth/error.hpp"
#include "kgsynth/ids.hpp"
#include "kgsynth/text.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>

namespace kgsynth {

void MockChatClient::add_rule(MockRule rule) {
    std::lock_guard lock(mutex_);
    rules_.push_back(std::move(rule));
}

void MockChatClient::set_default_response(std::string response) {
    std::lock_guard lock(mutex_);
    default_response_ = std::move(response);
}

MockChatClient MockChatClient::from_fixture_file(const std::filesystem::path& path,
                                                 int max_concurrency) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open mock fixture " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidInput,
                    "mock fixture " + path.string() + " is not valid JSON: " + e.what());
    }

    MockChatClient client(max_concurrency);
    if (doc.contains("default")) client.set_default_response(doc.at("default").get<std::string>());
    for (const auto& entry : doc.value("rules", nlohmann::json::array())) {
        MockRule rule;
        for (const auto& fragment : entry.at("contains")) {
            rule.contains.push_back(fragment.get<std::string>());
        }
        rule.response = entry.at("response").get<std::string>();
        client.add_rule(std::move(rule));
    }
    return client;
}

std::vector<std::string> MockChatClient::transcript() const {
    std::lock_guard lock(mutex_);
    return transcript_;
}

std::string MockChatClient::chat_impl(const ChatRequest& request) {
    std::string prompt;
    for (const auto& message : request.messages) {
        if (!prompt.empty()) prompt.push_back('\n');
        prompt += message.content;
    }

    std::lock_guard lock(mutex_);
    transcript_.push_back(prompt);
    for (const auto& rule : rules_) {
        bool all = true;
        for (const auto& fragment : rule.contains) {
            if (prompt.find(fragment) == std::string::npos) {
                all = false;
                break;
            }
        }
        if (all) return rule.response;
    }
    if (default_response_) return *default_response_;
    throw Error(ErrorKind::Service,
                "no mock rule matches prompt (fingerprint " + hex64(fnv1a64(prompt)) + ")");
}

std::vector<EmbeddingVector> HashedBowEmbedder::embed_impl(const std::vector<std::string>& texts) {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        EmbeddingVector vec;
        vec.values.assign(static_cast<std::size_t>(dim_), 0.0f);
        for (const auto& token : tokenize_words(text)) {
            const auto coord = static_cast<std::size_t>(fnv1a64(token) % static_cast<std::uint64_t>(dim_));
            vec.values[coord] += 1.0f;
        }
        double norm = 0.0;
        for (float v : vec.values) norm += static_cast<double>(v) * v;
        if (norm > 0.0) {
            const double inv = 1.0 / std::sqrt(norm);
            for (float& v : vec.values) v = static_cast<float>(v * inv);
        }
        out.push_back(std::move(vec));
    }
    return out;
}

} // namespace kgsynth
