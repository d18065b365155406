#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "deskbert/common.hpp"
#include "deskbert/pretrain.hpp"
#include "deskbert/rng.hpp"

namespace deskbert::model {

template <typename T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class Head { Mlm, NspMlm, Ner };

inline std::string head_name(Head h) {
    switch (h) {
        case Head::Mlm: return "mlm";
        case Head::NspMlm: return "nsp_mlm";
        case Head::Ner: return "ner";
    }
    throw DataError("unknown head");
}

inline Head head_from_name(const std::string& s) {
    if (s == "mlm") return Head::Mlm;
    if (s == "nsp_mlm") return Head::NspMlm;
    if (s == "ner") return Head::Ner;
    throw DataError("unknown training stage: " + s);
}

struct ModelConfig {
    int32_t vocab_size = 0;
    int32_t hidden = 128;
    int32_t layers = 4;
    int32_t heads = 4;
    int32_t ff_dim = 512;
    int32_t max_seq = 128;
    double dropout = 0.1;
    int32_t num_ner_labels = 3;  // O, B-ORG, I-ORG

    void validate() const {
        if (vocab_size < 1 || hidden < 1 || layers < 1 || heads < 1 || ff_dim < 1 || max_seq < 1 ||
            num_ner_labels < 1)
            throw DataError("all model dimensions must be at least 1");
        if (hidden % heads != 0) throw DataError("hidden must be divisible by heads");
        if (dropout < 0.0 || dropout >= 1.0) throw DataError("dropout must lie in [0, 1)");
    }

    bool operator==(const ModelConfig&) const = default;

    nlohmann::json to_json() const {
        return {{"vocab_size", vocab_size}, {"hidden", hidden},
                {"layers", layers},         {"heads", heads},
                {"ff_dim", ff_dim},         {"max_seq", max_seq},
                {"dropout", dropout},       {"num_ner_labels", num_ner_labels}};
    }

    static ModelConfig from_json(const nlohmann::json& j) {
        ModelConfig c;
        c.vocab_size = j.at("vocab_size").get<int32_t>();
        c.hidden = j.at("hidden").get<int32_t>();
        c.layers = j.at("layers").get<int32_t>();
        c.heads = j.at("heads").get<int32_t>();
        c.ff_dim = j.at("ff_dim").get<int32_t>();
        c.max_seq = j.at("max_seq").get<int32_t>();
        c.dropout = j.at("dropout").get<double>();
        c.num_ner_labels = j.at("num_ner_labels").get<int32_t>();
        c.validate();
        return c;
    }
};

template <typename T>
struct LayerParams {
    Mat<T> wq, wk, wv, wo;      // (H, H)
    Mat<T> bq, bk, bv, bo;      // (1, H)
    Mat<T> ln1_gain, ln1_bias;  // (1, H)
    Mat<T> ffn_w1;              // (H, F)
    Mat<T> ffn_b1;              // (1, F)
    Mat<T> ffn_w2;              // (F, H)
    Mat<T> ffn_b2;              // (1, H)
    Mat<T> ln2_gain, ln2_bias;  // (1, H)
};

// All learnable tensors. The MLM output projection is the token embedding
// table itself (tied storage); only its bias is separate.
template <typename T>
struct Parameters {
    ModelConfig config;
    Mat<T> tok_emb;                  // (V, H), also the MLM output projection
    Mat<T> pos_emb;                  // (max_seq, H)
    Mat<T> seg_emb;                  // (2, H)
    Mat<T> emb_ln_gain, emb_ln_bias; // (1, H)
    std::vector<LayerParams<T>> layers;
    Mat<T> mlm_w;                    // (H, H)
    Mat<T> mlm_b;                    // (1, H)
    Mat<T> mlm_ln_gain, mlm_ln_bias; // (1, H)
    Mat<T> mlm_out_bias;             // (1, V)
    Mat<T> nsp_w;                    // (H, 2)
    Mat<T> nsp_b;                    // (1, 2)
    Mat<T> ner_w;                    // (H, K)
    Mat<T> ner_b;                    // (1, K)
};

struct TensorRef {
    std::string name;
    void* mat;  // Mat<T>*
};

// Fixed tensor order; checkpoint files and Adam state both follow it.
template <typename T>
std::vector<std::pair<std::string, Mat<T>*>> tensor_list(Parameters<T>& p) {
    std::vector<std::pair<std::string, Mat<T>*>> out;
    out.emplace_back("embeddings.token", &p.tok_emb);
    out.emplace_back("embeddings.position", &p.pos_emb);
    out.emplace_back("embeddings.segment", &p.seg_emb);
    out.emplace_back("embeddings.ln_gain", &p.emb_ln_gain);
    out.emplace_back("embeddings.ln_bias", &p.emb_ln_bias);
    for (size_t i = 0; i < p.layers.size(); ++i) {
        auto& l = p.layers[i];
        std::string prefix = "layer" + std::to_string(i) + ".";
        out.emplace_back(prefix + "attn.wq", &l.wq);
        out.emplace_back(prefix + "attn.bq", &l.bq);
        out.emplace_back(prefix + "attn.wk", &l.wk);
        out.emplace_back(prefix + "attn.bk", &l.bk);
        out.emplace_back(prefix + "attn.wv", &l.wv);
        out.emplace_back(prefix + "attn.bv", &l.bv);
        out.emplace_back(prefix + "attn.wo", &l.wo);
        out.emplace_back(prefix + "attn.bo", &l.bo);
        out.emplace_back(prefix + "ln1.gain", &l.ln1_gain);
        out.emplace_back(prefix + "ln1.bias", &l.ln1_bias);
        out.emplace_back(prefix + "ffn.w1", &l.ffn_w1);
        out.emplace_back(prefix + "ffn.b1", &l.ffn_b1);
        out.emplace_back(prefix + "ffn.w2", &l.ffn_w2);
        out.emplace_back(prefix + "ffn.b2", &l.ffn_b2);
        out.emplace_back(prefix + "ln2.gain", &l.ln2_gain);
        out.emplace_back(prefix + "ln2.bias", &l.ln2_bias);
    }
    out.emplace_back("mlm.transform.w", &p.mlm_w);
    out.emplace_back("mlm.transform.b", &p.mlm_b);
    out.emplace_back("mlm.ln_gain", &p.mlm_ln_gain);
    out.emplace_back("mlm.ln_bias", &p.mlm_ln_bias);
    out.emplace_back("mlm.output_bias", &p.mlm_out_bias);
    out.emplace_back("nsp.w", &p.nsp_w);
    out.emplace_back("nsp.b", &p.nsp_b);
    out.emplace_back("ner.w", &p.ner_w);
    out.emplace_back("ner.b", &p.ner_b);
    return out;
}

template <typename T>
void allocate(Parameters<T>& p, const ModelConfig& c) {
    p.config = c;
    const int32_t H = c.hidden, F = c.ff_dim, V = c.vocab_size, K = c.num_ner_labels;
    p.tok_emb.setZero(V, H);
    p.pos_emb.setZero(c.max_seq, H);
    p.seg_emb.setZero(2, H);
    p.emb_ln_gain.setZero(1, H);
    p.emb_ln_bias.setZero(1, H);
    p.layers.resize(static_cast<size_t>(c.layers));
    for (auto& l : p.layers) {
        l.wq.setZero(H, H);
        l.wk.setZero(H, H);
        l.wv.setZero(H, H);
        l.wo.setZero(H, H);
        l.bq.setZero(1, H);
        l.bk.setZero(1, H);
        l.bv.setZero(1, H);
        l.bo.setZero(1, H);
        l.ln1_gain.setZero(1, H);
        l.ln1_bias.setZero(1, H);
        l.ffn_w1.setZero(H, F);
        l.ffn_b1.setZero(1, F);
        l.ffn_w2.setZero(F, H);
        l.ffn_b2.setZero(1, H);
        l.ln2_gain.setZero(1, H);
        l.ln2_bias.setZero(1, H);
    }
    p.mlm_w.setZero(H, H);
    p.mlm_b.setZero(1, H);
    p.mlm_ln_gain.setZero(1, H);
    p.mlm_ln_bias.setZero(1, H);
    p.mlm_out_bias.setZero(1, V);
    p.nsp_w.setZero(H, 2);
    p.nsp_b.setZero(1, 2);
    p.ner_w.setZero(H, K);
    p.ner_b.setZero(1, K);
}

constexpr double kInitStd = 0.02;

// Weights ~ Normal(0, 0.02^2); layer-norm gains 1; every bias 0. Each tensor
// draws from its own keyed stream so the layout stays reproducible.
template <typename T>
Parameters<T> init_params(const ModelConfig& config, uint64_t seed) {
    config.validate();
    Parameters<T> p;
    allocate(p, config);
    auto tensors = tensor_list(p);
    for (size_t t = 0; t < tensors.size(); ++t) {
        const auto& name = tensors[t].first;
        Mat<T>& m = *tensors[t].second;
        bool is_gain = name.ends_with("gain");
        bool is_bias = name.ends_with("bias") || name.ends_with(".bq") || name.ends_with(".bk") ||
                       name.ends_with(".bv") || name.ends_with(".bo") || name.ends_with(".b1") ||
                       name.ends_with(".b2") || name.ends_with(".b") || name.ends_with("ln_bias");
        if (is_gain) {
            m.setConstant(static_cast<T>(1));
            continue;
        }
        if (is_bias) continue;  // already zero
        rng::Counter prng(seed, /*key1=*/0x1417u, /*key2=*/t);
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c2 = 0; c2 < m.cols(); ++c2)
                m(r, c2) = static_cast<T>(kInitStd * prng.next_gaussian());
    }
    return p;
}

// ---------------------------------------------------------------------------
// Forward

constexpr double kLnEps = 1e-12;

template <typename T>
T gelu(T x) {
    return static_cast<T>(0.5) * x * (static_cast<T>(1) + std::erf(x / std::numbers::sqrt2_v<T>));
}

template <typename T>
T gelu_grad(T x) {
    const T phi = std::exp(static_cast<T>(-0.5) * x * x) /
                  std::sqrt(static_cast<T>(2) * std::numbers::pi_v<T>);
    return static_cast<T>(0.5) * (static_cast<T>(1) + std::erf(x / std::numbers::sqrt2_v<T>)) +
           x * phi;
}

template <typename T>
struct LnCache {
    Mat<T> xhat;   // (S, H)
    Mat<T> rstd;   // (S, 1)
};

template <typename T>
struct LayerCache {
    Mat<T> input;                    // (S, H)
    Mat<T> q, k, v;                  // (S, H)
    std::vector<Mat<T>> probs;       // per head (S, S), raw softmax
    std::vector<Mat<T>> probs_drop;  // per head, dropout multiplier (empty in eval)
    Mat<T> attn_cat;                 // (S, H) concatenated head contexts
    Mat<T> attn_drop;                // dropout multiplier on attention output
    Mat<T> res1;                     // (S, H)
    LnCache<T> ln1;
    Mat<T> x1;                       // (S, H) after ln1
    Mat<T> ffn_pre;                  // (S, F)
    Mat<T> ffn_act;                  // (S, F)
    Mat<T> ffn_drop;                 // dropout multiplier
    Mat<T> res2;                     // (S, H)
    LnCache<T> ln2;
    Mat<T> x2;                       // (S, H) layer output
};

template <typename T>
struct ExampleCache {
    Mat<T> emb_sum;   // (S, H) before embedding layer norm
    LnCache<T> emb_ln;
    Mat<T> emb_drop;  // dropout multiplier
    Mat<T> x0;        // (S, H) encoder input
    std::vector<LayerCache<T>> layers;
    Mat<T> final;     // (S, H)
    // MLM head internals
    Mat<T> mlm_pre;   // (S, H) before gelu
    Mat<T> mlm_act;   // (S, H) after gelu
    LnCache<T> mlm_ln;
    Mat<T> mlm_norm;  // (S, H) after head layer norm
};

template <typename T>
struct ForwardResult {
    Head head = Head::Mlm;
    std::vector<ExampleCache<T>> cache;
    std::vector<Mat<T>> mlm_logits;  // per example (S, V)
    Mat<T> nsp_logits;               // (B, 2)
    std::vector<Mat<T>> ner_logits;  // per example (S, K)
};

namespace detail {

template <typename T>
void layer_norm(const Mat<T>& x, const Mat<T>& gain, const Mat<T>& bias, Mat<T>& out,
                LnCache<T>& cache) {
    const Eigen::Index S = x.rows(), H = x.cols();
    cache.xhat.resize(S, H);
    cache.rstd.resize(S, 1);
    out.resize(S, H);
    for (Eigen::Index r = 0; r < S; ++r) {
        T mu = x.row(r).mean();
        T var = (x.row(r).array() - mu).square().mean();
        T rstd = static_cast<T>(1) / std::sqrt(var + static_cast<T>(kLnEps));
        cache.rstd(r, 0) = rstd;
        cache.xhat.row(r) = (x.row(r).array() - mu) * rstd;
        out.row(r) = cache.xhat.row(r).cwiseProduct(gain.row(0)) + bias.row(0);
    }
}

template <typename T>
void layer_norm_backward(const Mat<T>& dout, const Mat<T>& gain, const LnCache<T>& cache,
                         Mat<T>& dx, Mat<T>& dgain, Mat<T>& dbias) {
    const Eigen::Index S = dout.rows(), H = dout.cols();
    dx.resize(S, H);
    for (Eigen::Index r = 0; r < S; ++r) {
        Eigen::Array<T, 1, Eigen::Dynamic> dxhat =
            dout.row(r).array() * gain.row(0).array();
        T m1 = dxhat.mean();
        T m2 = (dxhat * cache.xhat.row(r).array()).mean();
        dx.row(r) =
            ((dxhat - m1 - cache.xhat.row(r).array() * m2) * cache.rstd(r, 0)).matrix();
        dgain.row(0) += dout.row(r).cwiseProduct(cache.xhat.row(r));
        dbias.row(0) += dout.row(r);
    }
}

// Multiplier matrix: 0 with probability p, 1/(1-p) otherwise.
template <typename T>
Mat<T> dropout_mask(Eigen::Index rows, Eigen::Index cols, double p, rng::Counter& prng) {
    Mat<T> m(rows, cols);
    const T scale = static_cast<T>(1.0 / (1.0 - p));
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
            m(r, c) = prng.next_double() < p ? static_cast<T>(0) : scale;
    return m;
}

}  // namespace detail

// Encoder + requested head(s), one example at a time, batched by loop. In
// training mode a dropout RNG must be supplied; eval mode is deterministic.
// Attention gives exactly zero weight to positions with attention_mask == 0.
template <typename T>
ForwardResult<T> forward(const Parameters<T>& params,
                         std::span<const pretrain::PretrainExample> batch, Head head,
                         bool train = false, rng::Counter* dropout_rng = nullptr) {
    const ModelConfig& cfg = params.config;
    const Eigen::Index H = cfg.hidden, nh = cfg.heads, dh = H / nh;
    const T inv_sqrt_dh = static_cast<T>(1) / std::sqrt(static_cast<T>(dh));
    const bool use_dropout = train && cfg.dropout > 0.0;
    if (use_dropout && dropout_rng == nullptr)
        throw DataError("training-mode forward requires a dropout RNG");

    ForwardResult<T> fr;
    fr.head = head;
    fr.cache.resize(batch.size());
    if (head == Head::NspMlm) fr.nsp_logits.setZero(static_cast<Eigen::Index>(batch.size()), 2);

    for (size_t b = 0; b < batch.size(); ++b) {
        const auto& ex = batch[b];
        const Eigen::Index S = static_cast<Eigen::Index>(ex.seq_len());
        if (S == 0) throw DataError("empty example");
        if (S > cfg.max_seq)
            throw DataError("example length " + std::to_string(S) + " exceeds max_seq " +
                            std::to_string(cfg.max_seq));
        if (ex.segment_ids.size() != ex.seq_len() || ex.attention_mask.size() != ex.seq_len())
            throw DataError("example field lengths disagree");
        ExampleCache<T>& c = fr.cache[b];

        c.emb_sum.resize(S, H);
        for (Eigen::Index i = 0; i < S; ++i) {
            int32_t id = ex.input_ids[static_cast<size_t>(i)];
            int32_t seg = ex.segment_ids[static_cast<size_t>(i)];
            if (id < 0 || id >= cfg.vocab_size)
                throw DataError("token id " + std::to_string(id) + " outside vocabulary");
            if (seg != 0 && seg != 1) throw DataError("segment ids must be 0 or 1");
            c.emb_sum.row(i) = params.tok_emb.row(id) + params.pos_emb.row(i) +
                               params.seg_emb.row(seg);
        }
        detail::layer_norm(c.emb_sum, params.emb_ln_gain, params.emb_ln_bias, c.x0, c.emb_ln);
        if (use_dropout) {
            c.emb_drop = detail::dropout_mask<T>(S, H, cfg.dropout, *dropout_rng);
            c.x0 = c.x0.cwiseProduct(c.emb_drop);
        }

        c.layers.resize(params.layers.size());
        Mat<T> x = c.x0;
        for (size_t li = 0; li < params.layers.size(); ++li) {
            const auto& lp = params.layers[li];
            LayerCache<T>& lc = c.layers[li];
            lc.input = x;
            lc.q = (x * lp.wq).rowwise() + lp.bq.row(0);
            lc.k = (x * lp.wk).rowwise() + lp.bk.row(0);
            lc.v = (x * lp.wv).rowwise() + lp.bv.row(0);

            lc.probs.resize(static_cast<size_t>(nh));
            if (use_dropout) lc.probs_drop.resize(static_cast<size_t>(nh));
            lc.attn_cat.resize(S, H);
            for (Eigen::Index h = 0; h < nh; ++h) {
                auto qh = lc.q.block(0, h * dh, S, dh);
                auto kh = lc.k.block(0, h * dh, S, dh);
                auto vh = lc.v.block(0, h * dh, S, dh);
                Mat<T> scores = qh * kh.transpose() * inv_sqrt_dh;  // (S, S)
                Mat<T>& probs = lc.probs[static_cast<size_t>(h)];
                probs.setZero(S, S);
                for (Eigen::Index i = 0; i < S; ++i) {
                    T mx = std::numeric_limits<T>::lowest();
                    for (Eigen::Index j = 0; j < S; ++j)
                        if (ex.attention_mask[static_cast<size_t>(j)] == 1)
                            mx = std::max(mx, scores(i, j));
                    T denom = 0;
                    for (Eigen::Index j = 0; j < S; ++j) {
                        if (ex.attention_mask[static_cast<size_t>(j)] != 1) continue;
                        T e = std::exp(scores(i, j) - mx);
                        probs(i, j) = e;
                        denom += e;
                    }
                    probs.row(i) /= denom;
                }
                Mat<T> used = probs;
                if (use_dropout) {
                    lc.probs_drop[static_cast<size_t>(h)] =
                        detail::dropout_mask<T>(S, S, cfg.dropout, *dropout_rng);
                    used = used.cwiseProduct(lc.probs_drop[static_cast<size_t>(h)]);
                }
                lc.attn_cat.block(0, h * dh, S, dh) = used * vh;
            }

            Mat<T> attn_out = (lc.attn_cat * lp.wo).rowwise() + lp.bo.row(0);
            if (use_dropout) {
                lc.attn_drop = detail::dropout_mask<T>(S, H, cfg.dropout, *dropout_rng);
                attn_out = attn_out.cwiseProduct(lc.attn_drop);
            }
            lc.res1 = lc.input + attn_out;
            detail::layer_norm(lc.res1, lp.ln1_gain, lp.ln1_bias, lc.x1, lc.ln1);

            lc.ffn_pre = (lc.x1 * lp.ffn_w1).rowwise() + lp.ffn_b1.row(0);
            lc.ffn_act = lc.ffn_pre.unaryExpr([](T v) { return gelu(v); });
            Mat<T> ffn_out = (lc.ffn_act * lp.ffn_w2).rowwise() + lp.ffn_b2.row(0);
            if (use_dropout) {
                lc.ffn_drop = detail::dropout_mask<T>(S, H, cfg.dropout, *dropout_rng);
                ffn_out = ffn_out.cwiseProduct(lc.ffn_drop);
            }
            lc.res2 = lc.x1 + ffn_out;
            detail::layer_norm(lc.res2, lp.ln2_gain, lp.ln2_bias, lc.x2, lc.ln2);
            x = lc.x2;
        }
        c.final = x;

        if (head == Head::Mlm || head == Head::NspMlm) {
            c.mlm_pre = (c.final * params.mlm_w).rowwise() + params.mlm_b.row(0);
            c.mlm_act = c.mlm_pre.unaryExpr([](T v) { return gelu(v); });
            detail::layer_norm(c.mlm_act, params.mlm_ln_gain, params.mlm_ln_bias, c.mlm_norm,
                               c.mlm_ln);
            Mat<T> logits = c.mlm_norm * params.tok_emb.transpose();
            logits.rowwise() += params.mlm_out_bias.row(0);
            fr.mlm_logits.push_back(std::move(logits));
        }
        if (head == Head::NspMlm) {
            fr.nsp_logits.row(static_cast<Eigen::Index>(b)) =
                c.final.row(0) * params.nsp_w + params.nsp_b.row(0);
        }
        if (head == Head::Ner) {
            Mat<T> logits = c.final * params.ner_w;
            logits.rowwise() += params.ner_b.row(0);
            fr.ner_logits.push_back(std::move(logits));
        }
    }
    return fr;
}

// ---------------------------------------------------------------------------
// Losses

struct Losses {
    double total = 0.0;
    double mlm = 0.0;
    double nsp = 0.0;
    double ner = 0.0;
    int64_t mlm_positions = 0;
    int64_t ner_positions = 0;
};

namespace detail {

// Mean cross-entropy over rows selected by labels != ignore. Gradient of the
// mean lands in dlogits when non-null.
template <typename T>
std::pair<double, int64_t> token_ce(const std::vector<Mat<T>>& logits,
                                    std::span<const pretrain::PretrainExample> batch,
                                    std::vector<Mat<T>>* dlogits) {
    double total = 0.0;
    int64_t count = 0;
    for (size_t b = 0; b < batch.size(); ++b)
        for (int32_t lb : batch[b].mlm_labels)
            if (lb != pretrain::kIgnoreLabel) ++count;
    if (count == 0) throw DataError("batch has no labeled positions");

    for (size_t b = 0; b < batch.size(); ++b) {
        const auto& labels = batch[b].mlm_labels;
        const Mat<T>& lg = logits[b];
        if (dlogits) (*dlogits)[b].setZero(lg.rows(), lg.cols());
        for (Eigen::Index r = 0; r < lg.rows(); ++r) {
            int32_t target = labels[static_cast<size_t>(r)];
            if (target == pretrain::kIgnoreLabel) continue;
            if (target < 0 || target >= lg.cols())
                throw DataError("label id outside logit range");
            T mx = lg.row(r).maxCoeff();
            T sum = (lg.row(r).array() - mx).exp().sum();
            T lse = mx + std::log(sum);
            total += static_cast<double>(lse - lg(r, target));
            if (dlogits) {
                auto drow = (*dlogits)[b].row(r);
                drow = ((lg.row(r).array() - lse).exp() / static_cast<T>(count)).matrix();
                drow(target) -= static_cast<T>(1) / static_cast<T>(count);
            }
        }
    }
    return {total / static_cast<double>(count), count};
}

}  // namespace detail

// MLM loss: mean CE at labeled positions. NSP loss: mean 2-way CE. Joint loss
// is their unweighted sum. NER loss: mean CE at labeled positions. The label
// vector of a PretrainExample carries MLM targets or NER tag ids depending on
// the stage.
template <typename T>
Losses compute_loss(const ForwardResult<T>& fr, std::span<const pretrain::PretrainExample> batch,
                    std::vector<Mat<T>>* dtoken_logits = nullptr, Mat<T>* dnsp_logits = nullptr) {
    Losses out;
    if (fr.head == Head::Mlm || fr.head == Head::NspMlm) {
        if (dtoken_logits) dtoken_logits->resize(batch.size());
        auto [mlm, count] = detail::token_ce(fr.mlm_logits, batch, dtoken_logits);
        out.mlm = mlm;
        out.mlm_positions = count;
        out.total = mlm;
    }
    if (fr.head == Head::NspMlm) {
        const Eigen::Index B = fr.nsp_logits.rows();
        if (dnsp_logits) dnsp_logits->setZero(B, 2);
        double nsp_total = 0.0;
        for (Eigen::Index b = 0; b < B; ++b) {
            if (!batch[static_cast<size_t>(b)].nsp_label)
                throw DataError("joint-stage example lacks an NSP label");
            int32_t target =
                static_cast<int32_t>(*batch[static_cast<size_t>(b)].nsp_label);
            T mx = fr.nsp_logits.row(b).maxCoeff();
            T lse = mx + std::log((fr.nsp_logits.row(b).array() - mx).exp().sum());
            nsp_total += static_cast<double>(lse - fr.nsp_logits(b, target));
            if (dnsp_logits) {
                auto drow = dnsp_logits->row(b);
                drow = ((fr.nsp_logits.row(b).array() - lse).exp() / static_cast<T>(B)).matrix();
                drow(target) -= static_cast<T>(1) / static_cast<T>(B);
            }
        }
        out.nsp = nsp_total / static_cast<double>(B);
        out.total = out.mlm + out.nsp;
    }
    if (fr.head == Head::Ner) {
        if (dtoken_logits) dtoken_logits->resize(batch.size());
        auto [ner, count] = detail::token_ce(fr.ner_logits, batch, dtoken_logits);
        out.ner = ner;
        out.ner_positions = count;
        out.total = ner;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Backward

// Accumulates parameter gradients for the batch that produced `fr`.
// dtoken_logits/dnsp_logits come from compute_loss.
template <typename T>
void backward(const Parameters<T>& params, const ForwardResult<T>& fr,
              std::span<const pretrain::PretrainExample> batch,
              const std::vector<Mat<T>>& dtoken_logits, const Mat<T>& dnsp_logits,
              Parameters<T>& grads) {
    const ModelConfig& cfg = params.config;
    const Eigen::Index H = cfg.hidden, nh = cfg.heads, dh = H / nh;
    const T inv_sqrt_dh = static_cast<T>(1) / std::sqrt(static_cast<T>(dh));

    for (size_t b = 0; b < batch.size(); ++b) {
        const auto& ex = batch[b];
        const ExampleCache<T>& c = fr.cache[b];
        const Eigen::Index S = c.final.rows();
        Mat<T> dfinal = Mat<T>::Zero(S, H);

        if (fr.head == Head::Mlm || fr.head == Head::NspMlm) {
            const Mat<T>& dlg = dtoken_logits[b];
            // logits = mlm_norm * tok_emb^T + out_bias (tied projection)
            Mat<T> dnorm = dlg * params.tok_emb;               // (S, H)
            grads.tok_emb += dlg.transpose() * c.mlm_norm;     // (V, H)
            grads.mlm_out_bias.row(0) += dlg.colwise().sum();
            Mat<T> dact;
            detail::layer_norm_backward(dnorm, params.mlm_ln_gain, c.mlm_ln, dact,
                                        grads.mlm_ln_gain, grads.mlm_ln_bias);
            Mat<T> dpre =
                dact.cwiseProduct(c.mlm_pre.unaryExpr([](T v) { return gelu_grad(v); }));
            grads.mlm_w += c.final.transpose() * dpre;
            grads.mlm_b.row(0) += dpre.colwise().sum();
            dfinal += dpre * params.mlm_w.transpose();
        }
        if (fr.head == Head::NspMlm) {
            auto drow = dnsp_logits.row(static_cast<Eigen::Index>(b));
            grads.nsp_w += c.final.row(0).transpose() * drow;
            grads.nsp_b.row(0) += drow;
            dfinal.row(0) += drow * params.nsp_w.transpose();
        }
        if (fr.head == Head::Ner) {
            const Mat<T>& dlg = dtoken_logits[b];
            grads.ner_w += c.final.transpose() * dlg;
            grads.ner_b.row(0) += dlg.colwise().sum();
            dfinal += dlg * params.ner_w.transpose();
        }

        // Encoder layers, in reverse.
        Mat<T> dx = dfinal;
        for (size_t li = params.layers.size(); li-- > 0;) {
            const auto& lp = params.layers[li];
            const LayerCache<T>& lc = c.layers[li];
            auto& gl = grads.layers[li];

            Mat<T> dres2;
            detail::layer_norm_backward(dx, lp.ln2_gain, lc.ln2, dres2, gl.ln2_gain, gl.ln2_bias);
            Mat<T> dffn_out = dres2;
            if (lc.ffn_drop.size() > 0) dffn_out = dffn_out.cwiseProduct(lc.ffn_drop);
            Mat<T> dact = dffn_out * lp.ffn_w2.transpose();
            gl.ffn_w2 += lc.ffn_act.transpose() * dffn_out;
            gl.ffn_b2.row(0) += dffn_out.colwise().sum();
            Mat<T> dpre =
                dact.cwiseProduct(lc.ffn_pre.unaryExpr([](T v) { return gelu_grad(v); }));
            gl.ffn_w1 += lc.x1.transpose() * dpre;
            gl.ffn_b1.row(0) += dpre.colwise().sum();
            Mat<T> dx1 = dres2 + dpre * lp.ffn_w1.transpose();

            Mat<T> dres1;
            detail::layer_norm_backward(dx1, lp.ln1_gain, lc.ln1, dres1, gl.ln1_gain, gl.ln1_bias);
            Mat<T> dattn_out = dres1;
            if (lc.attn_drop.size() > 0) dattn_out = dattn_out.cwiseProduct(lc.attn_drop);
            Mat<T> dcat = dattn_out * lp.wo.transpose();
            gl.wo += lc.attn_cat.transpose() * dattn_out;
            gl.bo.row(0) += dattn_out.colwise().sum();

            Mat<T> dq = Mat<T>::Zero(S, H), dk = Mat<T>::Zero(S, H), dv = Mat<T>::Zero(S, H);
            for (Eigen::Index h = 0; h < nh; ++h) {
                auto vh = lc.v.block(0, h * dh, S, dh);
                auto qh = lc.q.block(0, h * dh, S, dh);
                auto kh = lc.k.block(0, h * dh, S, dh);
                const Mat<T>& probs = lc.probs[static_cast<size_t>(h)];
                Mat<T> dctx = dcat.block(0, h * dh, S, dh);

                Mat<T> used = probs;
                if (!lc.probs_drop.empty())
                    used = used.cwiseProduct(lc.probs_drop[static_cast<size_t>(h)]);
                dv.block(0, h * dh, S, dh) += used.transpose() * dctx;
                Mat<T> dused = dctx * vh.transpose();  // (S, S)
                if (!lc.probs_drop.empty())
                    dused = dused.cwiseProduct(lc.probs_drop[static_cast<size_t>(h)]);
                // Softmax backward; masked entries have prob 0, so they
                // contribute nothing.
                Mat<T> dscores(S, S);
                for (Eigen::Index i = 0; i < S; ++i) {
                    T dot = probs.row(i).cwiseProduct(dused.row(i)).sum();
                    dscores.row(i) =
                        probs.row(i).cwiseProduct(dused.row(i).array().matrix() -
                                                  Mat<T>::Constant(1, S, dot));
                }
                dq.block(0, h * dh, S, dh) += dscores * kh * inv_sqrt_dh;
                dk.block(0, h * dh, S, dh) += dscores.transpose() * qh * inv_sqrt_dh;
            }

            gl.wq += lc.input.transpose() * dq;
            gl.bq.row(0) += dq.colwise().sum();
            gl.wk += lc.input.transpose() * dk;
            gl.bk.row(0) += dk.colwise().sum();
            gl.wv += lc.input.transpose() * dv;
            gl.bv.row(0) += dv.colwise().sum();

            dx = dres1 + dq * lp.wq.transpose() + dk * lp.wk.transpose() + dv * lp.wv.transpose();
        }

        if (c.emb_drop.size() > 0) dx = dx.cwiseProduct(c.emb_drop);
        Mat<T> demb;
        detail::layer_norm_backward(dx, params.emb_ln_gain, c.emb_ln, demb, grads.emb_ln_gain,
                                    grads.emb_ln_bias);
        for (Eigen::Index i = 0; i < S; ++i) {
            grads.tok_emb.row(ex.input_ids[static_cast<size_t>(i)]) += demb.row(i);
            grads.pos_emb.row(i) += demb.row(i);
            grads.seg_emb.row(ex.segment_ids[static_cast<size_t>(i)]) += demb.row(i);
        }
    }
}

// ---------------------------------------------------------------------------
// Gradient check

struct GradCheckReport {
    double max_rel_error = 0.0;
    std::string worst_tensor;
    Eigen::Index worst_row = 0;
    Eigen::Index worst_col = 0;
};

// Central-difference check of the full backward pass, double precision.
// Samples `samples` parameter coordinates across all tensors.
inline GradCheckReport gradient_check(const ModelConfig& config, Head head, uint64_t seed,
                                      int samples = 200, double step = 1e-5) {
    ModelConfig cfg = config;
    cfg.dropout = 0.0;
    cfg.validate();
    Parameters<double> params = init_params<double>(cfg, seed);

    // Synthetic labeled batch.
    rng::Counter prng(seed, 0xC0DE, 0);
    std::vector<pretrain::PretrainExample> batch;
    const size_t S = static_cast<size_t>(std::min<int32_t>(cfg.max_seq, 12));
    for (int b = 0; b < 2; ++b) {
        pretrain::PretrainExample ex;
        size_t real = S - 2 - static_cast<size_t>(b);  // leave some padding
        for (size_t i = 0; i < S; ++i) {
            bool pad = i >= real;
            ex.input_ids.push_back(
                pad ? 0 : static_cast<int32_t>(prng.next_below(static_cast<uint64_t>(cfg.vocab_size))));
            ex.segment_ids.push_back(i >= real / 2 && !pad ? 1 : 0);
            ex.attention_mask.push_back(pad ? 0 : 1);
            int32_t label = pretrain::kIgnoreLabel;
            if (!pad && prng.next_double() < 0.3) {
                int64_t range = head == Head::Ner ? cfg.num_ner_labels : cfg.vocab_size;
                label = static_cast<int32_t>(prng.next_below(static_cast<uint64_t>(range)));
            }
            ex.mlm_labels.push_back(label);
        }
        if (head != Head::Ner) {
            // ensure at least one labeled position
            ex.mlm_labels[1] = ex.input_ids[1];
        } else {
            ex.mlm_labels[1] = 1;
        }
        if (head == Head::NspMlm)
            ex.nsp_label = b % 2 == 0 ? pretrain::NspLabel::IsNext : pretrain::NspLabel::NotNext;
        batch.push_back(std::move(ex));
    }

    auto loss_of = [&](Parameters<double>& p) {
        auto fr = forward(p, std::span<const pretrain::PretrainExample>(batch), head);
        return compute_loss(fr, std::span<const pretrain::PretrainExample>(batch)).total;
    };

    Parameters<double> grads;
    allocate(grads, cfg);
    {
        auto fr = forward(params, std::span<const pretrain::PretrainExample>(batch), head);
        std::vector<Mat<double>> dtok;
        Mat<double> dnsp;
        compute_loss(fr, std::span<const pretrain::PretrainExample>(batch), &dtok, &dnsp);
        backward(params, fr, std::span<const pretrain::PretrainExample>(batch), dtok, dnsp, grads);
    }

    auto ptensors = tensor_list(params);
    auto gtensors = tensor_list(grads);
    GradCheckReport report;
    rng::Counter pick(seed, 0x91CC, 1);
    for (int s = 0; s < samples; ++s) {
        size_t t = static_cast<size_t>(pick.next_below(ptensors.size()));
        Mat<double>& pm = *ptensors[t].second;
        if (pm.size() == 0) {
            --s;
            continue;
        }
        Eigen::Index r = static_cast<Eigen::Index>(pick.next_below(static_cast<uint64_t>(pm.rows())));
        Eigen::Index cc = static_cast<Eigen::Index>(pick.next_below(static_cast<uint64_t>(pm.cols())));
        double original = pm(r, cc);
        pm(r, cc) = original + step;
        double up = loss_of(params);
        pm(r, cc) = original - step;
        double down = loss_of(params);
        pm(r, cc) = original;
        double numeric = (up - down) / (2.0 * step);
        double analytic = (*gtensors[t].second)(r, cc);
        double rel = std::abs(analytic - numeric) /
                     std::max({std::abs(analytic), std::abs(numeric), 1e-8});
        if (rel > report.max_rel_error) {
            report.max_rel_error = rel;
            report.worst_tensor = ptensors[t].first;
            report.worst_row = r;
            report.worst_col = cc;
        }
    }
    return report;
}

}  // namespace deskbert::model
