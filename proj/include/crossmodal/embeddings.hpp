#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace crossmodal {

class EmbeddingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Static word-vector store. Vectors are kept in single precision; all
/// distance arithmetic runs in double precision. Immutable once filled,
/// so queries are safe under concurrent access.
class EmbeddingTable {
public:
    EmbeddingTable() = default;
    explicit EmbeddingTable(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return index_.size(); }

    /// Throws on dimension mismatch, duplicate word or zero-norm vector.
    void insert(const std::string& word, std::span<const float> vec);

    std::optional<std::size_t> lookup(std::string_view word) const;
    bool contains(std::string_view word) const { return lookup(word).has_value(); }
    std::span<const float> row(std::size_t idx) const;
    double norm(std::size_t idx) const { return norms_[idx]; }

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const noexcept {
            return std::hash<std::string_view>{}(s);
        }
    };

    std::size_t dim_ = 0;
    std::unordered_map<std::string, std::size_t, Hash, std::equal_to<>> index_;
    std::vector<float> data_;
    std::vector<double> norms_;
};

/// Reads the standard text embedding format: a "count dim" header line
/// followed by one "word v1 ... v_dim" row per line. Transparently
/// decompresses gzip input. Zero-norm rows are skipped with a warning;
/// dimension mismatches and unreadable floats raise EmbeddingError with
/// the offending line number.
EmbeddingTable load_embeddings(const std::string& path);

/// Cosine distance in [0, 2]. Identical surface strings give 0 regardless
/// of vocabulary; pairs with at least one out-of-vocabulary word give 1.
double cos_distance(std::string_view a, std::string_view b, const EmbeddingTable& table);

/// Arithmetic mean of the in-vocabulary token vectors. Throws
/// EmbeddingError when every token is out of vocabulary.
std::vector<double> sentence_vector(std::span<const std::string> tokens,
                                    const EmbeddingTable& table);

}  // namespace crossmodal
