#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "deskbert/common.hpp"
#include "deskbert/rng.hpp"
#include "deskbert/tokenizer.hpp"
#include "deskbert/unicode.hpp"

namespace deskbert::corpus {

struct RawDocument {
    std::string id;
    std::string text;
};

// Occurrence count per Unicode scalar value across the whole corpus.
struct CharFrequencyTable {
    std::map<uint32_t, int64_t> counts;

    int64_t count(uint32_t cp) const {
        auto it = counts.find(cp);
        return it == counts.end() ? 0 : it->second;
    }

    void merge(const CharFrequencyTable& other) {
        for (const auto& [cp, n] : other.counts) counts[cp] += n;
    }
};

struct CleanDocument {
    std::string id;
    std::string text;
    int64_t removed_chars = 0;
    int64_t folded_chars = 0;
};

struct CorpusSplit {
    std::vector<std::string> train;
    std::vector<std::string> eval;
    std::vector<std::string> test;
    uint64_t seed = 0;

    nlohmann::json to_json() const {
        return {{"seed", seed}, {"train", train}, {"eval", eval}, {"test", test}};
    }

    static CorpusSplit from_json(const nlohmann::json& j) {
        CorpusSplit s;
        s.seed = j.at("seed").get<uint64_t>();
        s.train = j.at("train").get<std::vector<std::string>>();
        s.eval = j.at("eval").get<std::vector<std::string>>();
        s.test = j.at("test").get<std::vector<std::string>>();
        return s;
    }
};

struct CorpusStats {
    int64_t documents = 0;
    int64_t sentences = 0;
    int64_t words = 0;
    std::optional<int64_t> subword_tokens;

    nlohmann::json to_json() const {
        nlohmann::json j{{"documents", documents}, {"sentences", sentences}, {"words", words}};
        j["subword_tokens"] = subword_tokens ? nlohmann::json(*subword_tokens) : nlohmann::json();
        return j;
    }
};

// ---------------------------------------------------------------------------
// JSONL corpus files: one {"id": ..., "text": ...} object per line.

inline std::vector<RawDocument> read_jsonl(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open corpus file: " + path);
    std::vector<RawDocument> docs;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("id") || !j.contains("text"))
            throw DataError(path + ":" + std::to_string(line_no) + ": malformed corpus line");
        docs.push_back({j["id"].get<std::string>(), j["text"].get<std::string>()});
    }
    return docs;
}

template <typename DocRange>
void write_jsonl(const std::string& path, const DocRange& docs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write corpus file: " + path);
    for (const auto& d : docs) {
        nlohmann::json j{{"id", d.id}, {"text", d.text}};
        out << j.dump() << '\n';
    }
}

// Streaming order everywhere is ascending document id.
template <typename Doc>
void sort_by_id(std::vector<Doc>& docs) {
    std::sort(docs.begin(), docs.end(), [](const Doc& a, const Doc& b) { return a.id < b.id; });
}

// ---------------------------------------------------------------------------
// Character frequencies

template <typename DocRange>
CharFrequencyTable scan_char_frequencies(const DocRange& docs, unsigned jobs = 1) {
    std::vector<const std::string*> texts;
    for (const auto& d : docs) texts.push_back(&d.text);

    auto scan_range = [&](size_t lo, size_t hi) {
        CharFrequencyTable t;
        for (size_t i = lo; i < hi; ++i)
            for (uint32_t cp : unicode::decode_utf8(*texts[i])) ++t.counts[cp];
        return t;
    };

    if (jobs <= 1 || texts.size() < 2) return scan_range(0, texts.size());

    // Integer-count merge is associative, so the chunked result is identical
    // to the sequential one.
    unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(texts.size()));
    std::vector<CharFrequencyTable> parts(n);
    std::vector<std::thread> threads;
    size_t chunk = (texts.size() + n - 1) / n;
    for (unsigned t = 0; t < n; ++t) {
        size_t lo = t * chunk;
        size_t hi = std::min(texts.size(), lo + chunk);
        threads.emplace_back([&, t, lo, hi] { parts[t] = scan_range(lo, hi); });
    }
    for (auto& th : threads) th.join();
    CharFrequencyTable total;
    for (const auto& p : parts) total.merge(p);
    return total;
}

// ---------------------------------------------------------------------------
// Cleaning

constexpr int64_t kDefaultRareThreshold = 50;

inline std::string fold_accents(std::string_view text) { return unicode::fold_accents(text); }

// Removal first (unprintable, then corpus-rare), accent folding last. Folded
// output code points are re-checked against the same rules so that cleaning is
// a fixpoint: cleaning a CleanDocument changes nothing.
inline CleanDocument clean_document(const RawDocument& doc, const CharFrequencyTable& freq,
                                    int64_t rare_threshold = kDefaultRareThreshold) {
    CleanDocument out;
    out.id = doc.id;
    auto drop = [&](uint32_t cp) {
        return unicode::is_unprintable(cp) || freq.count(cp) <= rare_threshold;
    };
    std::vector<uint32_t> kept;
    std::vector<uint32_t> folded;
    for (uint32_t cp : unicode::decode_utf8(doc.text)) {
        if (drop(cp)) {
            ++out.removed_chars;
            continue;
        }
        folded.clear();
        bool changed = unicode::fold_codepoint(cp, folded);
        if (changed) ++out.folded_chars;
        for (uint32_t f : folded) {
            if (changed && drop(f)) {
                ++out.removed_chars;
                continue;
            }
            kept.push_back(f);
        }
    }
    out.text = unicode::encode_utf8(kept);
    return out;
}

template <typename DocRange>
std::vector<CleanDocument> clean_corpus(const DocRange& docs, const CharFrequencyTable& freq,
                                        int64_t rare_threshold = kDefaultRareThreshold,
                                        unsigned jobs = 1) {
    std::vector<const RawDocument*> ptrs;
    for (const auto& d : docs) ptrs.push_back(&d);
    std::vector<CleanDocument> out(ptrs.size());
    auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) out[i] = clean_document(*ptrs[i], freq, rare_threshold);
    };
    if (jobs <= 1 || ptrs.size() < 2) {
        work(0, ptrs.size());
        return out;
    }
    unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(ptrs.size()));
    size_t chunk = (ptrs.size() + n - 1) / n;
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < n; ++t) {
        size_t lo = t * chunk;
        size_t hi = std::min(ptrs.size(), lo + chunk);
        threads.emplace_back([&, lo, hi] { work(lo, hi); });
    }
    for (auto& th : threads) th.join();
    return out;
}

// ---------------------------------------------------------------------------
// Splitting

inline CorpusSplit split_corpus(std::vector<std::string> ids, uint64_t seed) {
    if (ids.empty()) throw DataError("cannot split an empty corpus");
    std::sort(ids.begin(), ids.end());
    rng::Counter prng(seed, /*key1=*/0x5EEDu, /*key2=*/0);
    rng::shuffle(ids, prng);

    size_t n = ids.size();
    size_t q = n / 3, r = n % 3;
    size_t n_train = q + (r > 0 ? 1 : 0);
    size_t n_eval = q + (r > 1 ? 1 : 0);
    CorpusSplit s;
    s.seed = seed;
    s.train.assign(ids.begin(), ids.begin() + n_train);
    s.eval.assign(ids.begin() + n_train, ids.begin() + n_train + n_eval);
    s.test.assign(ids.begin() + n_train + n_eval, ids.end());
    return s;
}

// ---------------------------------------------------------------------------
// Sentence segmentation

namespace detail {

// Tokens that suppress a sentence break at a following period. Single letters
// (initials, "e.g." style fragments) are guarded separately.
inline const std::set<std::string>& abbreviations() {
    static const std::set<std::string> abbrevs = {
        "al",  "cf",  "Dr",  "Eq",  "Eqs", "etc", "Fig", "Figs", "Mr", "Mrs",
        "Ms",  "No",  "Nos", "pp",  "Prof", "Ref", "Refs", "Sec", "Secs",
        "Tab", "Vol", "vs"};
    return abbrevs;
}

}  // namespace detail

// Rule-based splitter: a sentence ends at '.', '!' or '?' when followed by
// whitespace and then an uppercase letter or digit. For '.', the preceding
// word must not be a known abbreviation or a single letter.
inline std::vector<std::string> split_sentences(std::string_view text) {
    auto cps = unicode::decode_utf8(text);
    std::vector<std::string> sentences;
    std::string current;
    std::vector<uint32_t> word;  // letters of the token preceding the cursor

    auto flush = [&]() {
        // Trim surrounding whitespace; keep only non-empty sentences.
        size_t b = 0, e = current.size();
        while (b < e && (current[b] == ' ' || current[b] == '\t' || current[b] == '\n' ||
                         current[b] == '\r'))
            ++b;
        while (e > b && (current[e - 1] == ' ' || current[e - 1] == '\t' ||
                         current[e - 1] == '\n' || current[e - 1] == '\r'))
            --e;
        if (e > b) sentences.push_back(current.substr(b, e - b));
        current.clear();
    };

    for (size_t i = 0; i < cps.size(); ++i) {
        uint32_t cp = cps[i];
        unicode::append_utf8(current, cp);
        bool terminator = cp == '.' || cp == '!' || cp == '?';
        if (!terminator) {
            if (unicode::is_whitespace(cp) || unicode::is_punct_or_symbol(cp))
                word.clear();
            else
                word.push_back(cp);
            continue;
        }
        bool guarded = false;
        if (cp == '.') {
            std::string prev = unicode::encode_utf8(word);
            guarded = word.size() == 1 || detail::abbreviations().count(prev) > 0;
        }
        word.clear();
        if (guarded) continue;
        // Look ahead: whitespace then uppercase/digit.
        size_t j = i + 1;
        if (j >= cps.size() || !unicode::is_whitespace(cps[j])) continue;
        while (j < cps.size() && unicode::is_whitespace(cps[j])) ++j;
        if (j < cps.size() && (unicode::is_uppercase(cps[j]) || unicode::is_digit(cps[j]))) flush();
    }
    flush();
    return sentences;
}

// ---------------------------------------------------------------------------
// Statistics

template <typename DocRange>
CorpusStats corpus_stats(const DocRange& docs, const tok::Vocabulary* vocab = nullptr) {
    CorpusStats stats;
    if (vocab) stats.subword_tokens = 0;
    for (const auto& doc : docs) {
        ++stats.documents;
        stats.sentences += static_cast<int64_t>(split_sentences(doc.text).size());
        for (const auto& w : tok::pretokenize(doc.text)) {
            auto cps = unicode::decode_utf8(w);
            bool punct = cps.size() == 1 && unicode::is_punct_or_symbol(cps[0]);
            if (!punct) ++stats.words;
            if (vocab)
                *stats.subword_tokens +=
                    static_cast<int64_t>(tok::wordpiece_word(*vocab, w).size());
        }
    }
    return stats;
}

}  // namespace deskbert::corpus
