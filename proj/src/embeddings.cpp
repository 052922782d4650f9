#include "crossmodal/embeddings.hpp"

#include <zlib.h>

#include <charconv>
#include <cmath>
#include <cstring>
#include <iostream>
#include <string_view>

namespace crossmodal {

void EmbeddingTable::insert(const std::string& word, std::span<const float> vec) {
    if (dim_ == 0) dim_ = vec.size();
    if (vec.size() != dim_) {
        throw EmbeddingError("vector for '" + word + "' has dimension " +
                             std::to_string(vec.size()) + ", expected " + std::to_string(dim_));
    }
    if (index_.contains(word)) throw EmbeddingError("duplicate word '" + word + "'");
    double sq = 0.0;
    for (float v : vec) sq += double(v) * double(v);
    if (sq == 0.0) throw EmbeddingError("zero-norm vector for '" + word + "'");
    index_.emplace(word, norms_.size());
    data_.insert(data_.end(), vec.begin(), vec.end());
    norms_.push_back(std::sqrt(sq));
}

std::optional<std::size_t> EmbeddingTable::lookup(std::string_view word) const {
    auto it = index_.find(word);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::span<const float> EmbeddingTable::row(std::size_t idx) const {
    return {data_.data() + idx * dim_, dim_};
}

namespace {

// gzread handles both gzip and plain files.
std::string slurp(const std::string& path) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (!f) throw EmbeddingError("cannot open embeddings file: " + path);
    std::string out;
    char buf[1 << 16];
    int n;
    while ((n = gzread(f, buf, sizeof(buf))) > 0) out.append(buf, std::size_t(n));
    bool ok = n == 0;
    gzclose(f);
    if (!ok) throw EmbeddingError("read error in embeddings file: " + path);
    return out;
}

std::string_view next_line(std::string_view& rest) {
    std::size_t nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

bool parse_size(std::string_view s, std::size_t& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

}  // namespace

EmbeddingTable load_embeddings(const std::string& path) {
    std::string content = slurp(path);
    std::string_view rest = content;

    std::string_view header = next_line(rest);
    std::size_t space = header.find(' ');
    std::size_t count = 0, dim = 0;
    if (space == std::string_view::npos || !parse_size(header.substr(0, space), count) ||
        !parse_size(header.substr(space + 1), dim) || dim == 0) {
        throw EmbeddingError(path + ":1: malformed header, expected \"count dim\"");
    }

    EmbeddingTable table(dim);
    std::vector<float> vec(dim);
    std::size_t line_no = 1;
    for (std::size_t row = 0; row < count; ++row) {
        ++line_no;
        std::string_view line = next_line(rest);
        std::size_t ws = line.find(' ');
        if (line.empty() || ws == std::string_view::npos) {
            throw EmbeddingError(path + ":" + std::to_string(line_no) +
                                 ": expected \"word v1 ... v" + std::to_string(dim) + "\"");
        }
        std::string word(line.substr(0, ws));
        const char* p = line.data() + ws;
        const char* end = line.data() + line.size();
        std::size_t got = 0;
        while (p < end) {
            while (p < end && *p == ' ') ++p;
            if (p == end) break;
            if (got == dim) {
                throw EmbeddingError(path + ":" + std::to_string(line_no) + ": more than " +
                                     std::to_string(dim) + " values");
            }
            float v;
            auto [q, ec] = std::from_chars(p, end, v);
            if (ec != std::errc{}) {
                throw EmbeddingError(path + ":" + std::to_string(line_no) + ": unreadable float");
            }
            vec[got++] = v;
            p = q;
        }
        if (got != dim) {
            throw EmbeddingError(path + ":" + std::to_string(line_no) + ": expected " +
                                 std::to_string(dim) + " values, got " + std::to_string(got));
        }
        double sq = 0.0;
        for (float v : vec) sq += double(v) * double(v);
        if (sq == 0.0) {
            std::cerr << "warning: " << path << ":" << line_no << ": skipping zero-norm vector '"
                      << word << "'\n";
            continue;
        }
        table.insert(word, vec);
    }
    // anything but trailing whitespace after `count` rows is a count mismatch
    while (!rest.empty()) {
        std::string_view line = next_line(rest);
        ++line_no;
        if (!line.empty()) {
            throw EmbeddingError(path + ":" + std::to_string(line_no) +
                                 ": more rows than the header count " + std::to_string(count));
        }
    }
    return table;
}

double cos_distance(std::string_view a, std::string_view b, const EmbeddingTable& table) {
    if (a == b) return 0.0;
    auto ia = table.lookup(a);
    auto ib = table.lookup(b);
    if (!ia || !ib) return 1.0;
    std::span<const float> ra = table.row(*ia);
    std::span<const float> rb = table.row(*ib);
    double dot = 0.0;
    for (std::size_t k = 0; k < ra.size(); ++k) dot += double(ra[k]) * double(rb[k]);
    return 1.0 - dot / (table.norm(*ia) * table.norm(*ib));
}

std::vector<double> sentence_vector(std::span<const std::string> tokens,
                                    const EmbeddingTable& table) {
    std::vector<double> acc(table.dim(), 0.0);
    std::size_t n_in_vocab = 0;
    for (const std::string& tok : tokens) {
        auto idx = table.lookup(tok);
        if (!idx) continue;
        std::span<const float> r = table.row(*idx);
        for (std::size_t k = 0; k < r.size(); ++k) acc[k] += double(r[k]);
        ++n_in_vocab;
    }
    if (n_in_vocab == 0) {
        throw EmbeddingError("sentence has no in-vocabulary token; cannot build a vector");
    }
    for (double& v : acc) v /= double(n_in_vocab);
    return acc;
}

}  // namespace crossmodal
