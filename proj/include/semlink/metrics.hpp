// =========================
// metrics.hpp
// =========================
//
// Quality and cost metrics: MS-SSIM, PSNR, CBR and the dB conversion
// -10*log10(1-d).
//
// MS-SSIM follows the standard multi-scale definition: 11x11 Gaussian
// window (sigma 1.5), k1 = 0.01, k2 = 0.03 on dynamic range 255, valid
// convolution, contrast-structure means at every scale, luminance applied
// at the coarsest scale only, default weights
// (0.0448, 0.2856, 0.3001, 0.2363, 0.1333). Between scales the image is
// low-passed with a 2x2 mean and subsampled by 2 (odd dimensions are
// edge-padded to even first). RGB input is converted to luma (ITU-R 601)
// before measurement. For small inputs the scale count is reduced to
// floor(log2(min_dim/11)) + 1 and the retained weights renormalized.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "frame.hpp"
#include "types.hpp"

namespace semlink {

struct MsSsimConfig {
    int scales = 5;
    std::vector<double> scale_weights = {0.0448, 0.2856, 0.3001, 0.2363, 0.1333};
    int window = 11;
    double sigma = 1.5;
    double k1 = 0.01;
    double k2 = 0.03;
    double dynamic_range = 255.0;

    void validate() const {
        if (scales < 1) throw std::invalid_argument("MsSsimConfig: scales < 1");
        if (static_cast<int>(scale_weights.size()) != scales)
            throw std::invalid_argument("MsSsimConfig: weights length != scales");
        for (double w : scale_weights)
            if (!(w > 0.0)) throw std::invalid_argument("MsSsimConfig: non-positive weight");
    }

    // Config adapted to the image size per the small-image rule above.
    static MsSsimConfig for_size(int width, int height) {
        MsSsimConfig cfg;
        const int mind = std::min(width, height);
        if (mind < cfg.window)
            throw std::invalid_argument("ms_ssim: image smaller than the 11x11 window");
        int s = static_cast<int>(std::floor(std::log2(static_cast<double>(mind) / cfg.window))) + 1;
        s = std::clamp(s, 1, 5);
        if (s < 5) {
            cfg.scales = s;
            cfg.scale_weights.resize(static_cast<size_t>(s));
            const double tot =
                std::accumulate(cfg.scale_weights.begin(), cfg.scale_weights.end(), 0.0);
            for (double& w : cfg.scale_weights) w /= tot;
        }
        return cfg;
    }
};

namespace detail {

struct Plane {
    int w = 0, h = 0;
    std::vector<double> v;
};

inline std::vector<double> gaussian_kernel(int size, double sigma) {
    std::vector<double> k(static_cast<size_t>(size));
    const double c = (size - 1) / 2.0;
    double sum = 0.0;
    for (int i = 0; i < size; ++i) {
        k[static_cast<size_t>(i)] = std::exp(-(i - c) * (i - c) / (2.0 * sigma * sigma));
        sum += k[static_cast<size_t>(i)];
    }
    for (double& x : k) x /= sum;
    return k;
}

// Valid separable convolution with a symmetric 1-D kernel.
inline Plane conv_valid(const Plane& p, const std::vector<double>& k) {
    const int ks = static_cast<int>(k.size());
    Plane rowp;  // horizontal pass
    rowp.w = p.w - ks + 1;
    rowp.h = p.h;
    rowp.v.resize(static_cast<size_t>(rowp.w) * rowp.h);
    for (int y = 0; y < p.h; ++y)
        for (int x = 0; x < rowp.w; ++x) {
            double acc = 0.0;
            const double* src = &p.v[static_cast<size_t>(y) * p.w + x];
            for (int i = 0; i < ks; ++i) acc += src[i] * k[static_cast<size_t>(i)];
            rowp.v[static_cast<size_t>(y) * rowp.w + x] = acc;
        }
    Plane out;  // vertical pass
    out.w = rowp.w;
    out.h = p.h - ks + 1;
    out.v.resize(static_cast<size_t>(out.w) * out.h);
    for (int y = 0; y < out.h; ++y)
        for (int x = 0; x < out.w; ++x) {
            double acc = 0.0;
            for (int i = 0; i < ks; ++i)
                acc += rowp.v[static_cast<size_t>(y + i) * rowp.w + x] * k[static_cast<size_t>(i)];
            out.v[static_cast<size_t>(y) * out.w + x] = acc;
        }
    return out;
}

// 2x2 mean downsample; odd dimensions are edge-padded to even first.
inline Plane downsample2(const Plane& p) {
    const int pw = p.w + (p.w & 1), ph = p.h + (p.h & 1);
    Plane out;
    out.w = pw / 2;
    out.h = ph / 2;
    out.v.resize(static_cast<size_t>(out.w) * out.h);
    auto at = [&](int y, int x) {
        y = std::min(y, p.h - 1);
        x = std::min(x, p.w - 1);
        return p.v[static_cast<size_t>(y) * p.w + x];
    };
    for (int y = 0; y < out.h; ++y)
        for (int x = 0; x < out.w; ++x)
            out.v[static_cast<size_t>(y) * out.w + x] =
                0.25 * (at(2 * y, 2 * x) + at(2 * y, 2 * x + 1) + at(2 * y + 1, 2 * x) +
                        at(2 * y + 1, 2 * x + 1));
    return out;
}

struct SsimScale {
    double mean_cs = 0.0;
    double mean_lcs = 0.0;  // luminance * cs, used at the coarsest scale
};

// One IEEE rounding, immune to FMA contraction across statements. Keeps
// ms_ssim(x,x) == 1 and ms_ssim symmetric bit-for-bit at any -O level.
inline double rounded_mul(double a, double b) {
    volatile double t = a * b;
    return t;
}

inline SsimScale ssim_scale(const Plane& a, const Plane& b, const std::vector<double>& k,
                            double c1, double c2) {
    const Plane mu1 = conv_valid(a, k);
    const Plane mu2 = conv_valid(b, k);
    Plane aa = a, bb = b, ab = a;
    for (size_t i = 0; i < a.v.size(); ++i) {
        aa.v[i] = a.v[i] * a.v[i];
        bb.v[i] = b.v[i] * b.v[i];
        ab.v[i] = a.v[i] * b.v[i];
    }
    const Plane eaa = conv_valid(aa, k);
    const Plane ebb = conv_valid(bb, k);
    const Plane eab = conv_valid(ab, k);

    double cs_acc = 0.0, lcs_acc = 0.0;
    const size_t n = mu1.v.size();
    for (size_t i = 0; i < n; ++i) {
        const double m1 = mu1.v[i], m2 = mu2.v[i];
        // Products go through an explicit rounding barrier so identical
        // inputs give bit-identical numerator and denominator and the
        // expression stays exactly symmetric.
        const double m11 = rounded_mul(m1, m1);
        const double m22 = rounded_mul(m2, m2);
        const double m12 = rounded_mul(m1, m2);
        const double va = eaa.v[i] - m11;
        const double vb = ebb.v[i] - m22;
        const double cov = eab.v[i] - m12;
        const double cov2 = 2.0 * cov;
        const double cs = (cov2 + c2) / ((va + vb) + c2);
        const double m12x2 = 2.0 * m12;
        const double lum = (m12x2 + c1) / ((m11 + m22) + c1);
        cs_acc += cs;
        lcs_acc += lum * cs;
    }
    SsimScale out;
    out.mean_cs = cs_acc / static_cast<double>(n);
    out.mean_lcs = lcs_acc / static_cast<double>(n);
    return out;
}

}  // namespace detail

inline double ms_ssim(const Frame& ref, const Frame& test, const MsSsimConfig& cfg) {
    cfg.validate();
    if (ref.width != test.width || ref.height != test.height ||
        ref.channels != test.channels)
        throw std::invalid_argument("ms_ssim: dimension mismatch");

    // Coarsest-scale size check (each downsample step takes ceil(d/2)).
    {
        int w = ref.width, h = ref.height;
        for (int s = 1; s < cfg.scales; ++s) {
            w = (w + 1) / 2;
            h = (h + 1) / 2;
        }
        if (w < cfg.window || h < cfg.window)
            throw std::invalid_argument("ms_ssim: image too small for requested scales");
    }

    detail::Plane a, b;
    a.w = b.w = ref.width;
    a.h = b.h = ref.height;
    a.v = ref.luma();
    b.v = test.luma();

    const auto kernel = detail::gaussian_kernel(cfg.window, cfg.sigma);
    const double c1 = (cfg.k1 * cfg.dynamic_range) * (cfg.k1 * cfg.dynamic_range);
    const double c2 = (cfg.k2 * cfg.dynamic_range) * (cfg.k2 * cfg.dynamic_range);

    double result = 1.0;
    for (int s = 0; s < cfg.scales; ++s) {
        if (s > 0) {
            a = detail::downsample2(a);
            b = detail::downsample2(b);
        }
        const auto sc = detail::ssim_scale(a, b, kernel, c1, c2);
        const double w = cfg.scale_weights[static_cast<size_t>(s)];
        const double term = (s == cfg.scales - 1) ? std::max(0.0, sc.mean_lcs)
                                                  : std::max(0.0, sc.mean_cs);
        result *= std::pow(term, w);
    }
    return result;
}

inline double ms_ssim(const Frame& ref, const Frame& test) {
    return ms_ssim(ref, test, MsSsimConfig::for_size(ref.width, ref.height));
}

// The dB view of MS-SSIM. d == 1 maps to the +inf sentinel.
inline double ms_ssim_db(double d) {
    if (d < 0.0 || d > 1.0) throw std::invalid_argument("ms_ssim_db: d outside [0,1]");
    if (d == 1.0) return kInf;
    return -10.0 * std::log10(1.0 - d);
}

// Channel bandwidth ratio n_c/n_s; n_s is width*height*channels of the source.
inline double cbr(size_t n_c, size_t n_s) {
    if (n_s == 0) throw std::invalid_argument("cbr: n_s must be positive");
    return static_cast<double>(n_c) / static_cast<double>(n_s);
}

inline double psnr(const Frame& ref, const Frame& test) {
    if (ref.width != test.width || ref.height != test.height ||
        ref.channels != test.channels)
        throw std::invalid_argument("psnr: dimension mismatch");
    double se = 0.0;
    for (size_t i = 0; i < ref.samples.size(); ++i) {
        const double d = static_cast<double>(ref.samples[i]) - test.samples[i];
        se += d * d;
    }
    if (se == 0.0) return kInf;
    const double mse = se / static_cast<double>(ref.samples.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

// Spearman rank correlation (average ranks on ties).
inline double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("spearman_rho: need two equal-length series");
    const size_t n = x.size();
    auto ranks = [](const std::vector<double>& v) {
        const size_t n = v.size();
        std::vector<size_t> idx(n);
        std::iota(idx.begin(), idx.end(), size_t{0});
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
        std::vector<double> r(n);
        size_t i = 0;
        while (i < n) {
            size_t j = i;
            while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
            const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
            for (size_t t = i; t <= j; ++t) r[idx[t]] = avg;
            i = j + 1;
        }
        return r;
    };
    const auto rx = ranks(x), ry = ranks(y);
    double mx = 0, my = 0;
    for (size_t i = 0; i < n; ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0, syy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace semlink
