#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "deskbert/common.hpp"
#include "deskbert/unicode.hpp"

namespace deskbert::tok {

struct WordPieceConfig {
    size_t max_vocab = 30000;
    int64_t min_pair_frequency = 2;
    std::string continuation_prefix = "##";
    std::vector<std::string> special_tokens = {"[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"};
    bool lowercase = false;
    bool strip_accents = true;

    nlohmann::json to_json() const {
        return {{"max_vocab", max_vocab},
                {"min_pair_frequency", min_pair_frequency},
                {"continuation_prefix", continuation_prefix},
                {"special_tokens", special_tokens},
                {"lowercase", lowercase},
                {"strip_accents", strip_accents}};
    }

    static WordPieceConfig from_json(const nlohmann::json& j) {
        WordPieceConfig c;
        c.max_vocab = j.at("max_vocab").get<size_t>();
        c.min_pair_frequency = j.at("min_pair_frequency").get<int64_t>();
        c.continuation_prefix = j.at("continuation_prefix").get<std::string>();
        c.special_tokens = j.at("special_tokens").get<std::vector<std::string>>();
        c.lowercase = j.at("lowercase").get<bool>();
        c.strip_accents = j.at("strip_accents").get<bool>();
        if (c.continuation_prefix.empty()) throw DataError("continuation_prefix must be non-empty");
        return c;
    }
};

class Vocabulary {
public:
    Vocabulary() = default;
    Vocabulary(std::vector<std::string> tokens, WordPieceConfig config)
        : tokens_(std::move(tokens)), config_(std::move(config)) {
        for (size_t i = 0; i < tokens_.size(); ++i) {
            auto [it, inserted] = token_to_id_.emplace(tokens_[i], static_cast<int32_t>(i));
            if (!inserted) throw DataError("duplicate token in vocabulary: " + tokens_[i]);
        }
        // Foreign vocab files may lack some specials; ops that need one fail
        // at the point of use instead.
        for (const auto& s : config_.special_tokens) {
            auto it = token_to_id_.find(s);
            if (it != token_to_id_.end()) special_ids_.insert(it->second);
        }
    }

    size_t size() const { return tokens_.size(); }
    const std::vector<std::string>& tokens() const { return tokens_; }
    const WordPieceConfig& config() const { return config_; }

    int32_t id(std::string_view token) const {
        auto it = token_to_id_.find(std::string(token));
        return it == token_to_id_.end() ? -1 : it->second;
    }

    const std::string& token(int32_t id) const {
        if (id < 0 || static_cast<size_t>(id) >= tokens_.size())
            throw DataError("token id out of range: " + std::to_string(id));
        return tokens_[static_cast<size_t>(id)];
    }

    bool contains(std::string_view token) const { return id(token) >= 0; }
    bool is_special(int32_t id) const { return special_ids_.count(id) > 0; }
    size_t num_specials() const { return special_ids_.size(); }

    int32_t pad_id() const { return required_id(config_.special_tokens.at(0)); }
    int32_t unk_id() const { return required_id("[UNK]"); }
    int32_t cls_id() const { return required_id("[CLS]"); }
    int32_t sep_id() const { return required_id("[SEP]"); }
    int32_t mask_id() const { return required_id("[MASK]"); }

    // One token per line, line number = id. Every line ends with '\n'; no
    // trailing blank line.
    void save(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw DataError("cannot write vocabulary file: " + path);
        for (const auto& t : tokens_) out << t << '\n';
    }

    static Vocabulary load(const std::string& path, WordPieceConfig config = {}) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw DataError("cannot open vocabulary file: " + path);
        std::vector<std::string> tokens;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            tokens.push_back(line);
        }
        return Vocabulary(std::move(tokens), std::move(config));
    }

private:
    int32_t required_id(std::string_view token) const {
        int32_t i = id(token);
        if (i < 0) throw DataError("vocabulary lacks special token " + std::string(token));
        return i;
    }

    std::vector<std::string> tokens_;
    std::unordered_map<std::string, int32_t> token_to_id_;
    std::unordered_set<int32_t> special_ids_;
    WordPieceConfig config_;
};

struct Encoding {
    std::vector<int32_t> ids;
    std::vector<std::string> tokens;
    // word_boundaries[w] = position of word w's first subword in `tokens`.
    std::vector<size_t> word_boundaries;
};

struct OverlapReport {
    double jaccard = 0.0;
    double intersection_over_min = 0.0;
    size_t shared_count = 0;

    nlohmann::json to_json() const {
        return {{"jaccard", jaccard},
                {"intersection_over_min", intersection_over_min},
                {"shared_count", shared_count}};
    }
};

// Whitespace splits; punctuation and symbol code points become standalone
// words; everything else accumulates.
inline std::vector<std::string> pretokenize(std::string_view text) {
    std::vector<std::string> words;
    std::string current;
    for (uint32_t cp : unicode::decode_utf8(text)) {
        if (unicode::is_whitespace(cp)) {
            if (!current.empty()) {
                words.push_back(std::move(current));
                current.clear();
            }
        } else if (unicode::is_punct_or_symbol(cp)) {
            if (!current.empty()) {
                words.push_back(std::move(current));
                current.clear();
            }
            std::string punct;
            unicode::append_utf8(punct, cp);
            words.push_back(std::move(punct));
        } else {
            unicode::append_utf8(current, cp);
        }
    }
    if (!current.empty()) words.push_back(std::move(current));
    return words;
}

namespace detail {

inline std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

inline std::string normalize(std::string_view text, const WordPieceConfig& cfg) {
    std::string t = cfg.strip_accents ? unicode::fold_accents(text) : std::string(text);
    if (cfg.lowercase) t = ascii_lower(t);
    return t;
}

}  // namespace detail

// Words longer than this many code points map straight to [UNK].
constexpr size_t kMaxWordChars = 100;

namespace detail {

struct Pair {
    int32_t a;
    int32_t b;
    bool operator<(const Pair& o) const { return a != o.a ? a < o.a : b < o.b; }
    bool operator==(const Pair& o) const { return a == o.a && b == o.b; }
};

struct TrainerWord {
    std::vector<int32_t> symbols;
    int64_t freq = 0;
};

}  // namespace detail

// WordPiece trainer. Pair (a,b) is scored count(ab) / (count(a) * count(b));
// the best-scoring pair is merged until the vocabulary is full or no pair
// reaches min_pair_frequency. Ties break on the lexicographically smallest
// merged token, then on the pair's token strings.
template <typename TextRange>
Vocabulary train_wordpiece(const TextRange& corpus_texts, const WordPieceConfig& config) {
    using detail::Pair;

    // Word frequency counting over the normalized, pretokenized corpus.
    std::map<std::string, int64_t> word_freq;
    for (const auto& text : corpus_texts) {
        std::string norm = detail::normalize(text, config);
        for (auto& w : pretokenize(norm)) ++word_freq[w];
    }
    if (word_freq.empty()) throw DataError("cannot train tokenizer on an empty corpus");

    // Alphabet: every code point seen, in both word-initial and continuation form.
    std::set<uint32_t> alphabet;
    for (const auto& [word, freq] : word_freq)
        for (uint32_t cp : unicode::decode_utf8(word)) alphabet.insert(cp);

    size_t required = config.special_tokens.size() + 2 * alphabet.size();
    if (config.max_vocab < required)
        throw DataError("max_vocab " + std::to_string(config.max_vocab) +
                        " too small; alphabet plus special tokens require at least " +
                        std::to_string(required));

    std::vector<std::string> vocab_tokens(config.special_tokens.begin(), config.special_tokens.end());
    for (uint32_t cp : alphabet) {
        std::string s;
        unicode::append_utf8(s, cp);
        vocab_tokens.push_back(s);
    }
    for (uint32_t cp : alphabet) {
        std::string s = config.continuation_prefix;
        unicode::append_utf8(s, cp);
        vocab_tokens.push_back(s);
    }

    // Symbol interning: training-time symbol ids are independent of vocab ids.
    std::vector<std::string> sym_str;
    std::map<std::string, int32_t> sym_id;
    auto intern = [&](const std::string& s) {
        auto it = sym_id.find(s);
        if (it != sym_id.end()) return it->second;
        int32_t id = static_cast<int32_t>(sym_str.size());
        sym_str.push_back(s);
        sym_id.emplace(s, id);
        return id;
    };

    std::vector<detail::TrainerWord> words;
    words.reserve(word_freq.size());
    for (const auto& [word, freq] : word_freq) {
        detail::TrainerWord tw;
        tw.freq = freq;
        auto cps = unicode::decode_utf8(word);
        for (size_t i = 0; i < cps.size(); ++i) {
            std::string s = i == 0 ? "" : config.continuation_prefix;
            unicode::append_utf8(s, cps[i]);
            tw.symbols.push_back(intern(s));
        }
        words.push_back(std::move(tw));
    }

    auto strip_continuation = [&](const std::string& s) {
        return s.starts_with(config.continuation_prefix) ? s.substr(config.continuation_prefix.size())
                                                         : s;
    };

    std::unordered_set<std::string> in_vocab(vocab_tokens.begin(), vocab_tokens.end());

    while (vocab_tokens.size() < config.max_vocab) {
        std::map<Pair, int64_t> pair_count;
        std::map<int32_t, int64_t> symbol_count;
        for (const auto& w : words) {
            for (size_t i = 0; i < w.symbols.size(); ++i) {
                symbol_count[w.symbols[i]] += w.freq;
                if (i + 1 < w.symbols.size())
                    pair_count[{w.symbols[i], w.symbols[i + 1]}] += w.freq;
            }
        }

        bool found = false;
        Pair best{};
        long double best_score = 0.0L;
        std::string best_merged;
        for (const auto& [pair, cnt] : pair_count) {
            if (cnt < config.min_pair_frequency) continue;
            long double denom = static_cast<long double>(symbol_count[pair.a]) *
                                static_cast<long double>(symbol_count[pair.b]);
            long double score = static_cast<long double>(cnt) / denom;
            std::string merged = sym_str[pair.a] + strip_continuation(sym_str[pair.b]);
            bool better = false;
            if (!found || score > best_score) {
                better = true;
            } else if (score == best_score) {
                if (merged < best_merged) {
                    better = true;
                } else if (merged == best_merged) {
                    better = std::make_pair(sym_str[pair.a], sym_str[pair.b]) <
                             std::make_pair(sym_str[best.a], sym_str[best.b]);
                }
            }
            if (better) {
                found = true;
                best = pair;
                best_score = score;
                best_merged = merged;
            }
        }
        if (!found) break;

        int32_t merged_id = intern(best_merged);
        for (auto& w : words) {
            auto& syms = w.symbols;
            std::vector<int32_t> rebuilt;
            rebuilt.reserve(syms.size());
            for (size_t i = 0; i < syms.size();) {
                if (i + 1 < syms.size() && syms[i] == best.a && syms[i + 1] == best.b) {
                    rebuilt.push_back(merged_id);
                    i += 2;
                } else {
                    rebuilt.push_back(syms[i]);
                    ++i;
                }
            }
            syms = std::move(rebuilt);
        }
        if (in_vocab.insert(best_merged).second) vocab_tokens.push_back(best_merged);
    }

    return Vocabulary(std::move(vocab_tokens), config);
}

// Greedy longest-prefix-first segmentation of one pre-tokenized word.
// Any unsegmentable remainder collapses the whole word to [UNK].
inline std::vector<std::string> wordpiece_word(const Vocabulary& vocab, std::string_view word) {
    const auto& prefix = vocab.config().continuation_prefix;
    auto cps = unicode::decode_utf8(word);
    if (cps.empty()) return {};
    if (cps.size() > kMaxWordChars) return {"[UNK]"};

    std::vector<std::string> pieces;
    size_t start = 0;
    while (start < cps.size()) {
        size_t len = cps.size() - start;
        std::string match;
        while (len > 0) {
            std::string cand = start > 0 ? prefix : "";
            for (size_t i = start; i < start + len; ++i) unicode::append_utf8(cand, cps[i]);
            if (vocab.contains(cand)) {
                match = std::move(cand);
                break;
            }
            --len;
        }
        if (len == 0) return {"[UNK]"};
        pieces.push_back(std::move(match));
        start += len;
    }
    return pieces;
}

inline Encoding encode(const Vocabulary& vocab, std::string_view text) {
    Encoding enc;
    std::string norm = detail::normalize(text, vocab.config());
    for (const auto& word : pretokenize(norm)) {
        enc.word_boundaries.push_back(enc.tokens.size());
        for (auto& piece : wordpiece_word(vocab, word)) {
            int32_t id = vocab.id(piece);
            if (id < 0) throw DataError("vocabulary lacks token " + piece);
            enc.ids.push_back(id);
            enc.tokens.push_back(std::move(piece));
        }
    }
    return enc;
}

inline std::string decode(const Vocabulary& vocab, std::span<const int32_t> ids) {
    const auto& prefix = vocab.config().continuation_prefix;
    std::string out;
    for (int32_t id : ids) {
        const std::string& t = vocab.token(id);  // throws on out-of-range
        if (vocab.is_special(id)) continue;
        if (t.starts_with(prefix) && !out.empty()) {
            out += t.substr(prefix.size());
        } else {
            if (!out.empty()) out += ' ';
            out += t;
        }
    }
    return out;
}

// Set similarity over non-special tokens, exact case-sensitive strings.
inline OverlapReport vocab_overlap(const Vocabulary& a, const Vocabulary& b) {
    std::unordered_set<std::string> sa, sb;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a.is_special(static_cast<int32_t>(i))) sa.insert(a.tokens()[i]);
    for (size_t i = 0; i < b.size(); ++i)
        if (!b.is_special(static_cast<int32_t>(i))) sb.insert(b.tokens()[i]);

    OverlapReport r;
    for (const auto& t : sa)
        if (sb.count(t)) ++r.shared_count;
    size_t uni = sa.size() + sb.size() - r.shared_count;
    size_t mn = std::min(sa.size(), sb.size());
    r.jaccard = uni == 0 ? 0.0 : static_cast<double>(r.shared_count) / static_cast<double>(uni);
    r.intersection_over_min =
        mn == 0 ? 0.0 : static_cast<double>(r.shared_count) / static_cast<double>(mn);
    return r;
}

}  // namespace deskbert::tok
