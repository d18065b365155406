#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "deskbert/common.hpp"
#include "deskbert/corpus.hpp"
#include "deskbert/rng.hpp"
#include "deskbert/tokenizer.hpp"

namespace deskbert::pretrain {

constexpr int32_t kIgnoreLabel = -100;
constexpr size_t kDefaultMaxSeq = 128;

enum class NspLabel : int32_t { IsNext = 0, NotNext = 1 };

struct MaskingConfig {
    double select_prob = 0.15;
    double mask_prob = 0.8;
    double random_prob = 0.1;
    double keep_prob = 0.1;
    uint64_t seed = 0;

    void validate() const {
        if (select_prob < 0.0 || select_prob > 1.0)
            throw DataError("select_prob must lie in [0, 1]");
        if (std::abs(mask_prob + random_prob + keep_prob - 1.0) > 1e-12)
            throw DataError("mask_prob + random_prob + keep_prob must equal 1");
    }

    nlohmann::json to_json() const {
        return {{"select_prob", select_prob},
                {"mask_prob", mask_prob},
                {"random_prob", random_prob},
                {"keep_prob", keep_prob},
                {"seed", seed}};
    }

    static MaskingConfig from_json(const nlohmann::json& j) {
        MaskingConfig c;
        c.select_prob = j.at("select_prob").get<double>();
        c.mask_prob = j.at("mask_prob").get<double>();
        c.random_prob = j.at("random_prob").get<double>();
        c.keep_prob = j.at("keep_prob").get<double>();
        c.seed = j.at("seed").get<uint64_t>();
        c.validate();
        return c;
    }
};

struct PretrainExample {
    std::vector<int32_t> input_ids;
    std::vector<int32_t> segment_ids;
    std::vector<int32_t> attention_mask;
    std::vector<int32_t> mlm_labels;
    std::optional<NspLabel> nsp_label;

    size_t seq_len() const { return input_ids.size(); }

    nlohmann::json to_json() const {
        nlohmann::json j{{"input_ids", input_ids},
                         {"segment_ids", segment_ids},
                         {"attention_mask", attention_mask},
                         {"mlm_labels", mlm_labels}};
        if (nsp_label)
            j["nsp_label"] = *nsp_label == NspLabel::IsNext ? "IsNext" : "NotNext";
        else
            j["nsp_label"] = nullptr;
        return j;
    }

    static PretrainExample from_json(const nlohmann::json& j) {
        PretrainExample e;
        e.input_ids = j.at("input_ids").get<std::vector<int32_t>>();
        e.segment_ids = j.at("segment_ids").get<std::vector<int32_t>>();
        e.attention_mask = j.at("attention_mask").get<std::vector<int32_t>>();
        e.mlm_labels = j.at("mlm_labels").get<std::vector<int32_t>>();
        const auto& n = j.at("nsp_label");
        if (!n.is_null()) {
            std::string s = n.get<std::string>();
            if (s == "IsNext")
                e.nsp_label = NspLabel::IsNext;
            else if (s == "NotNext")
                e.nsp_label = NspLabel::NotNext;
            else
                throw DataError("unknown nsp_label: " + s);
        }
        return e;
    }
};

inline std::vector<PretrainExample> read_examples(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open example file: " + path);
    std::vector<PretrainExample> out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw DataError(path + ":" + std::to_string(line_no) + ": malformed example line");
        out.push_back(PretrainExample::from_json(j));
    }
    return out;
}

inline void write_examples(const std::string& path, const std::vector<PretrainExample>& examples) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write example file: " + path);
    for (const auto& e : examples) out << e.to_json().dump() << '\n';
}

// ---------------------------------------------------------------------------
// Sentence index

// Per-document sentence lists plus a flat index for uniform sampling.
struct SentenceIndex {
    struct Entry {
        size_t doc;       // index into doc_ids
        size_t position;  // sentence position within the document
    };

    std::vector<std::string> doc_ids;
    std::vector<std::vector<std::string>> sentences;  // per document, in order
    std::vector<Entry> flat;

    size_t total_sentences() const { return flat.size(); }

    template <typename DocRange>
    static SentenceIndex build(const DocRange& docs) {
        SentenceIndex idx;
        for (const auto& d : docs) {
            idx.doc_ids.push_back(d.id);
            idx.sentences.push_back(corpus::split_sentences(d.text));
        }
        for (size_t d = 0; d < idx.sentences.size(); ++d)
            for (size_t s = 0; s < idx.sentences[d].size(); ++s) idx.flat.push_back({d, s});
        return idx;
    }
};

struct NspPair {
    std::string sent_a;
    std::string sent_b;
    NspLabel label;
    size_t doc;       // document of sentence A
    size_t position;  // position of A within its document
};

// For each adjacent sentence pair: a fair coin keeps the true successor
// (IsNext) or swaps in a uniformly random sentence from a different document
// (NotNext). Documents with fewer than two sentences contribute no pairs.
inline std::vector<NspPair> build_nsp_pairs(const SentenceIndex& index, uint64_t seed) {
    size_t docs_with_sentences = 0;
    for (const auto& s : index.sentences)
        if (!s.empty()) ++docs_with_sentences;
    if (docs_with_sentences < 2)
        throw DataError("NSP pair construction needs at least 2 documents with sentences");

    std::vector<NspPair> pairs;
    for (size_t d = 0; d < index.sentences.size(); ++d) {
        const auto& sents = index.sentences[d];
        if (sents.size() < 2) continue;
        for (size_t s = 0; s + 1 < sents.size(); ++s) {
            rng::Counter prng(seed, d, s);
            NspPair p;
            p.doc = d;
            p.position = s;
            p.sent_a = sents[s];
            if (prng.next_double() < 0.5) {
                p.label = NspLabel::IsNext;
                p.sent_b = sents[s + 1];
            } else {
                p.label = NspLabel::NotNext;
                for (;;) {
                    size_t k = static_cast<size_t>(prng.next_below(index.flat.size()));
                    if (index.flat[k].doc == d) continue;
                    p.sent_b = index.sentences[index.flat[k].doc][index.flat[k].position];
                    break;
                }
            }
            pairs.push_back(std::move(p));
        }
    }
    return pairs;
}

// ---------------------------------------------------------------------------
// Packing

// [CLS] A [SEP] (B [SEP]) layout, padded to max_seq. When the pair exceeds
// max_seq, the longer segment loses tokens from its end until it fits.
inline PretrainExample pack_sequence(const std::string& sent_a,
                                     const std::optional<std::string>& sent_b,
                                     const tok::Vocabulary& vocab, size_t max_seq) {
    if (max_seq < 8) throw DataError("max_seq must be at least 8");
    std::vector<int32_t> a = tok::encode(vocab, sent_a).ids;
    if (a.empty()) throw DataError("cannot pack an empty first sentence");
    std::vector<int32_t> b;
    if (sent_b) {
        b = tok::encode(vocab, *sent_b).ids;
        if (b.empty()) throw DataError("cannot pack an empty second sentence");
    }

    size_t specials = sent_b ? 3 : 2;
    while (a.size() + b.size() + specials > max_seq) {
        if (a.size() >= b.size())
            a.pop_back();
        else
            b.pop_back();
    }

    PretrainExample e;
    e.input_ids.reserve(max_seq);
    e.input_ids.push_back(vocab.cls_id());
    e.input_ids.insert(e.input_ids.end(), a.begin(), a.end());
    e.input_ids.push_back(vocab.sep_id());
    size_t first_segment = e.input_ids.size();
    if (sent_b) {
        e.input_ids.insert(e.input_ids.end(), b.begin(), b.end());
        e.input_ids.push_back(vocab.sep_id());
    }
    size_t real = e.input_ids.size();
    e.input_ids.resize(max_seq, vocab.pad_id());

    e.segment_ids.assign(max_seq, 0);
    for (size_t i = first_segment; i < real; ++i) e.segment_ids[i] = 1;
    e.attention_mask.assign(max_seq, 0);
    for (size_t i = 0; i < real; ++i) e.attention_mask[i] = 1;
    e.mlm_labels.assign(max_seq, kIgnoreLabel);
    return e;
}

// ---------------------------------------------------------------------------
// Masking

// Each non-special real position is independently selected with select_prob;
// selected positions become [MASK] with mask_prob, a uniform random
// non-special id with random_prob, or stay unchanged with keep_prob. Labels
// carry the original id at selected positions, kIgnoreLabel elsewhere.
// stream_index keys the RNG so a corpus builder can mask many examples from
// one seed; position keys make the draw order irrelevant.
inline PretrainExample apply_mlm_mask(const PretrainExample& example, const MaskingConfig& cfg,
                                      const tok::Vocabulary& vocab, uint64_t stream_index = 0) {
    cfg.validate();
    for (int32_t label : example.mlm_labels)
        if (label != kIgnoreLabel)
            throw DataError("apply_mlm_mask requires an unmasked example");

    const int32_t mask_id = vocab.mask_id();
    const size_t num_specials = vocab.num_specials();
    if (vocab.size() <= num_specials)
        throw DataError("vocabulary has no maskable tokens");

    PretrainExample out = example;
    for (size_t pos = 0; pos < out.input_ids.size(); ++pos) {
        if (out.attention_mask[pos] == 0) continue;
        if (vocab.is_special(out.input_ids[pos])) continue;
        rng::Counter prng(cfg.seed, stream_index, pos);
        if (prng.next_double() >= cfg.select_prob) continue;
        out.mlm_labels[pos] = out.input_ids[pos];
        double r = prng.next_double();
        if (r < cfg.mask_prob) {
            out.input_ids[pos] = mask_id;
        } else if (r < cfg.mask_prob + cfg.random_prob) {
            out.input_ids[pos] = static_cast<int32_t>(
                num_specials + prng.next_below(vocab.size() - num_specials));
        }
        // else: keep original token, label still set
    }
    return out;
}

// ---------------------------------------------------------------------------
// Corpus builders

// Single-segment MLM examples: sentences are packed greedily up to max_seq
// with boundaries respected; a sentence that alone exceeds the budget is
// truncated. Packing never crosses document boundaries.
template <typename DocRange>
std::vector<PretrainExample> build_mlm_corpus(const DocRange& docs, const tok::Vocabulary& vocab,
                                              size_t max_seq, const MaskingConfig& cfg) {
    cfg.validate();
    if (max_seq < 8) throw DataError("max_seq must be at least 8");
    const size_t budget = max_seq - 2;

    std::vector<PretrainExample> out;
    std::vector<int32_t> pending;

    auto flush = [&](std::vector<int32_t>& toks) {
        if (toks.empty()) return;
        PretrainExample e;
        e.input_ids.push_back(vocab.cls_id());
        e.input_ids.insert(e.input_ids.end(), toks.begin(), toks.end());
        e.input_ids.push_back(vocab.sep_id());
        size_t real = e.input_ids.size();
        e.input_ids.resize(max_seq, vocab.pad_id());
        e.segment_ids.assign(max_seq, 0);
        e.attention_mask.assign(max_seq, 0);
        for (size_t i = 0; i < real; ++i) e.attention_mask[i] = 1;
        e.mlm_labels.assign(max_seq, kIgnoreLabel);
        out.push_back(std::move(e));
        toks.clear();
    };

    for (const auto& doc : docs) {
        for (const auto& sent : corpus::split_sentences(doc.text)) {
            std::vector<int32_t> ids = tok::encode(vocab, sent).ids;
            if (ids.empty()) continue;
            if (ids.size() > budget) ids.resize(budget);
            if (pending.size() + ids.size() > budget) flush(pending);
            pending.insert(pending.end(), ids.begin(), ids.end());
        }
        flush(pending);  // examples never span documents
    }

    std::vector<PretrainExample> masked;
    masked.reserve(out.size());
    for (size_t i = 0; i < out.size(); ++i)
        masked.push_back(apply_mlm_mask(out[i], cfg, vocab, /*stream_index=*/i));
    return masked;
}

// Joint-stage examples: NSP pairs packed as [CLS] A [SEP] B [SEP], then masked.
inline std::vector<PretrainExample> build_nsp_mlm_corpus(const SentenceIndex& index,
                                                         const tok::Vocabulary& vocab,
                                                         size_t max_seq, const MaskingConfig& cfg,
                                                         uint64_t pair_seed) {
    cfg.validate();
    auto pairs = build_nsp_pairs(index, pair_seed);
    std::vector<PretrainExample> out;
    out.reserve(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        PretrainExample e = pack_sequence(pairs[i].sent_a, pairs[i].sent_b, vocab, max_seq);
        e.nsp_label = pairs[i].label;
        out.push_back(apply_mlm_mask(e, cfg, vocab, /*stream_index=*/i));
    }
    return out;
}

}  // namespace deskbert::pretrain
