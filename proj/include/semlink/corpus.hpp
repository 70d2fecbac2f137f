// =========================
// corpus.hpp
// =========================
//
// Deterministic synthetic frame generator for experiments and tests.
// Frames mix smooth shaded backgrounds, soft blobs, anti-aliased geometric
// shapes and mild texture so they carry natural-image-like statistics
// (dominant low frequencies plus sharp edges) without any external data.
#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "frame.hpp"
#include "rng.hpp"

namespace semlink {

namespace detail {

inline double smoothstep(double e0, double e1, double x) {
    double t = (x - e0) / (e1 - e0);
    t = std::clamp(t, 0.0, 1.0);
    return t * t * (3.0 - 2.0 * t);
}

struct ShapeParams {
    int kind;          // 0 = disc, 1 = rotated rectangle
    double cx, cy;     // center, fraction of image
    double r1, r2;     // radii / half-extents, fraction of min dim
    double angle;
    double color[3];
    double grad;       // fill gradient strength
    double soft;       // edge softness in pixels
};

}  // namespace detail

// Generates one frame. The rng is taken by value: a frame is a pure
// function of the substream it is given.
inline Frame synth_frame(Rng rng, int width, int height, int channels) {
    const size_t plane = static_cast<size_t>(width) * height;
    std::vector<double> img(plane * channels, 0.0);
    const double mind = std::min(width, height);

    // Base color and up to three low-frequency shading waves.
    double base[3];
    base[0] = rng.uniform(0.25, 0.7);
    base[1] = std::clamp(base[0] + rng.uniform(-0.15, 0.15), 0.05, 0.95);
    base[2] = std::clamp(base[0] + rng.uniform(-0.2, 0.2), 0.05, 0.95);
    struct Wave {
        double fx, fy, phase, amp, chroma[3];
    };
    std::vector<Wave> waves;
    const int nwaves = 2 + static_cast<int>(rng.below(2));
    for (int i = 0; i < nwaves; ++i) {
        Wave w;
        const double f = rng.uniform(0.4, 1.8);
        const double th = rng.uniform(0.0, 6.2831853);
        w.fx = f * std::cos(th) / width;
        w.fy = f * std::sin(th) / height;
        w.phase = rng.uniform(0.0, 6.2831853);
        w.amp = rng.uniform(0.04, 0.14);
        for (int c = 0; c < 3; ++c) w.chroma[c] = rng.uniform(0.6, 1.0);
        waves.push_back(w);
    }

    // Soft blobs.
    struct Blob {
        double cx, cy, sx, sy, amp, color[3];
    };
    std::vector<Blob> blobs;
    const int nblobs = 2 + static_cast<int>(rng.below(3));
    for (int i = 0; i < nblobs; ++i) {
        Blob b;
        b.cx = rng.uniform(0.1, 0.9) * width;
        b.cy = rng.uniform(0.1, 0.9) * height;
        b.sx = rng.uniform(0.08, 0.3) * mind;
        b.sy = rng.uniform(0.08, 0.3) * mind;
        b.amp = rng.uniform(-0.22, 0.28);
        for (int c = 0; c < 3; ++c) b.color[c] = rng.uniform(0.5, 1.0);
        blobs.push_back(b);
    }

    // Foreground shapes.
    std::vector<detail::ShapeParams> shapes;
    const int nshapes = 3 + static_cast<int>(rng.below(4));
    for (int i = 0; i < nshapes; ++i) {
        detail::ShapeParams s;
        s.kind = static_cast<int>(rng.below(2));
        s.cx = rng.uniform(0.12, 0.88) * width;
        s.cy = rng.uniform(0.12, 0.88) * height;
        s.r1 = rng.uniform(0.05, 0.22) * mind;
        s.r2 = rng.uniform(0.05, 0.22) * mind;
        s.angle = rng.uniform(0.0, 3.14159265);
        const double lum = rng.uniform(0.15, 0.9);
        for (int c = 0; c < 3; ++c)
            s.color[c] = std::clamp(lum + rng.uniform(-0.18, 0.18), 0.02, 0.98);
        s.grad = rng.uniform(-0.12, 0.12);
        s.soft = rng.uniform(0.8, 2.2);
        shapes.push_back(s);
    }

    // Mild sinusoidal texture and a touch of sensor-like noise.
    const double tex_amp = rng.uniform(0.01, 0.045);
    const double tex_fx = rng.uniform(3.0, 11.0) / width;
    const double tex_fy = rng.uniform(3.0, 11.0) / height;
    const double tex_phase = rng.uniform(0.0, 6.2831853);
    const bool vignette = rng.below(2) == 0;
    const double noise_sigma = rng.uniform(0.002, 0.006);

    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            double px[3];
            for (int c = 0; c < 3; ++c) px[c] = base[c];
            for (const auto& w : waves) {
                const double v =
                    w.amp * std::cos(6.2831853 * (w.fx * x + w.fy * y) + w.phase);
                for (int c = 0; c < 3; ++c) px[c] += v * w.chroma[c];
            }
            for (const auto& b : blobs) {
                const double dx = (x - b.cx) / b.sx, dy = (y - b.cy) / b.sy;
                const double g = b.amp * std::exp(-0.5 * (dx * dx + dy * dy));
                for (int c = 0; c < 3; ++c) px[c] += g * b.color[c];
            }
            for (const auto& s : shapes) {
                double d;  // signed distance to the shape edge, px
                const double rx = x - s.cx, ry = y - s.cy;
                if (s.kind == 0) {
                    const double u = rx / s.r1, v = ry / s.r2;
                    d = (std::sqrt(u * u + v * v) - 1.0) * std::min(s.r1, s.r2);
                } else {
                    const double ca = std::cos(s.angle), sa = std::sin(s.angle);
                    const double u = ca * rx + sa * ry, v = -sa * rx + ca * ry;
                    d = std::max(std::abs(u) - s.r1, std::abs(v) - s.r2);
                }
                const double alpha = 1.0 - detail::smoothstep(-s.soft, s.soft, d);
                if (alpha > 0.0) {
                    const double fill = s.grad * ((rx + ry) / mind);
                    for (int c = 0; c < 3; ++c)
                        px[c] = px[c] * (1.0 - alpha) + (s.color[c] + fill) * alpha;
                }
            }
            const double t =
                tex_amp * std::sin(6.2831853 * (tex_fx * x + tex_fy * y) + tex_phase);
            for (int c = 0; c < 3; ++c) px[c] += t;
            if (vignette) {
                const double dx = (x - width * 0.5) / width;
                const double dy = (y - height * 0.5) / height;
                const double v = 1.0 - 0.25 * (dx * dx + dy * dy);
                for (int c = 0; c < 3; ++c) px[c] *= v;
            }
            for (int c = 0; c < 3; ++c) px[c] += noise_sigma * rng.normal();

            const size_t idx = (static_cast<size_t>(y) * width + x);
            if (channels == 1) {
                const double lum = 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
                img[idx] = lum;
            } else {
                for (int c = 0; c < 3; ++c) img[c * plane + idx] = px[c];
            }
        }
    }

    return Frame::from_real01(width, height, channels, img);
}

inline std::vector<Frame> synth_corpus(uint64_t seed, int count, int width, int height,
                                       int channels) {
    Rng root(seed);
    std::vector<Frame> frames;
    frames.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        Rng sub = root.substream({"corpus", "frame=" + std::to_string(i)});
        frames.push_back(synth_frame(sub, width, height, channels));
    }
    return frames;
}

inline void write_corpus(const std::string& dir, uint64_t seed, int count, int width,
                         int height, int channels) {
    std::filesystem::create_directories(dir);
    Rng root(seed);
    for (int i = 0; i < count; ++i) {
        Rng sub = root.substream({"corpus", "frame=" + std::to_string(i)});
        const Frame f = synth_frame(sub, width, height, channels);
        char name[64];
        std::snprintf(name, sizeof(name), "frame_%04d.%s", i, channels == 1 ? "pgm" : "ppm");
        write_pnm(f, dir + "/" + name);
    }
}

// Loads every .pgm/.ppm in a directory, sorted by filename.
inline std::vector<Frame> load_corpus(const std::string& dir) {
    std::vector<std::string> names;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (!e.is_regular_file()) continue;
        const std::string ext = e.path().extension().string();
        if (ext == ".pgm" || ext == ".ppm") names.push_back(e.path().string());
    }
    std::sort(names.begin(), names.end());
    if (names.empty()) throw std::runtime_error("load_corpus: no frames in " + dir);
    std::vector<Frame> frames;
    frames.reserve(names.size());
    for (const auto& n : names) frames.push_back(read_pnm(n));
    return frames;
}

}  // namespace semlink
