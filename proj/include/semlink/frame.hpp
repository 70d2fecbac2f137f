// =========================
// frame.hpp
// =========================
//
// Frame: an 8-bit raster image (1 or 3 channels), the source payload of
// every experiment. Samples are stored interleaved, row-major:
// samples[(y*width + x)*channels + c]. File I/O is binary PGM (P5) for
// gray and PPM (P6) for RGB, maxval 255.
#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace semlink {

struct Frame {
    int width = 0;
    int height = 0;
    int channels = 0;  // 1 (gray) or 3 (RGB)
    std::vector<uint8_t> samples;

    Frame() = default;
    Frame(int w, int h, int c, uint8_t fill = 0) : width(w), height(h), channels(c) {
        validate_dims(w, h, c);
        samples.assign(static_cast<size_t>(w) * h * c, fill);
    }
    Frame(int w, int h, int c, std::vector<uint8_t> data)
        : width(w), height(h), channels(c), samples(std::move(data)) {
        validate_dims(w, h, c);
        if (samples.size() != static_cast<size_t>(w) * h * c)
            throw std::invalid_argument("Frame: sample count does not match dimensions");
    }

    size_t sample_count() const { return samples.size(); }

    uint8_t at(int x, int y, int c) const {
        return samples[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    uint8_t& at(int x, int y, int c) {
        return samples[(static_cast<size_t>(y) * width + x) * channels + c];
    }

    bool operator==(const Frame& o) const = default;

    // Planar (channel-major) real copy scaled to [0,1]: out[c][y][x] flattened.
    std::vector<double> to_real01() const {
        std::vector<double> out(samples.size());
        const size_t plane = static_cast<size_t>(width) * height;
        for (size_t i = 0; i < plane; ++i)
            for (int c = 0; c < channels; ++c)
                out[c * plane + i] = samples[i * channels + c] / 255.0;
        return out;
    }

    static Frame from_real01(int w, int h, int c, const std::vector<double>& planar) {
        validate_dims(w, h, c);
        const size_t plane = static_cast<size_t>(w) * h;
        if (planar.size() != plane * c)
            throw std::invalid_argument("Frame::from_real01: size mismatch");
        Frame f(w, h, c);
        for (size_t i = 0; i < plane; ++i)
            for (int ch = 0; ch < c; ++ch) {
                double v = planar[ch * plane + i] * 255.0;
                v = v < 0.0 ? 0.0 : (v > 255.0 ? 255.0 : v);
                f.samples[i * c + ch] = static_cast<uint8_t>(v + 0.5);
            }
        return f;
    }

    // Luma plane in [0,255] (ITU-R 601 weights for RGB; identity for gray).
    std::vector<double> luma() const {
        const size_t plane = static_cast<size_t>(width) * height;
        std::vector<double> y(plane);
        if (channels == 1) {
            for (size_t i = 0; i < plane; ++i) y[i] = samples[i];
        } else {
            for (size_t i = 0; i < plane; ++i) {
                const double r = samples[i * 3 + 0];
                const double g = samples[i * 3 + 1];
                const double b = samples[i * 3 + 2];
                y[i] = 0.299 * r + 0.587 * g + 0.114 * b;
            }
        }
        return y;
    }

private:
    static void validate_dims(int w, int h, int c) {
        if (w < 1 || h < 1) throw std::invalid_argument("Frame: non-positive dimensions");
        if (c != 1 && c != 3) throw std::invalid_argument("Frame: channels must be 1 or 3");
    }
};

// ---- PGM/PPM ----

inline void write_pnm(const Frame& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_pnm: cannot open " + path);
    os << (f.channels == 1 ? "P5" : "P6") << "\n"
       << f.width << " " << f.height << "\n255\n";
    os.write(reinterpret_cast<const char*>(f.samples.data()),
             static_cast<std::streamsize>(f.samples.size()));
    if (!os) throw std::runtime_error("write_pnm: short write to " + path);
}

namespace detail {
inline int pnm_token(std::istream& is) {
    // Skips whitespace and '#' comments, returns next non-negative integer.
    int c = is.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = is.get();
        } else if (std::isspace(c)) {
            c = is.get();
        } else {
            break;
        }
    }
    if (c == EOF || !std::isdigit(c)) throw std::runtime_error("pnm: malformed header");
    int v = 0;
    while (c != EOF && std::isdigit(c)) {
        v = v * 10 + (c - '0');
        c = is.get();
    }
    return v;
}
}  // namespace detail

inline Frame read_pnm(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_pnm: cannot open " + path);
    char m0 = 0, m1 = 0;
    is.get(m0);
    is.get(m1);
    if (m0 != 'P' || (m1 != '5' && m1 != '6'))
        throw std::runtime_error("read_pnm: not a binary PGM/PPM: " + path);
    const int channels = (m1 == '5') ? 1 : 3;
    const int w = detail::pnm_token(is);
    const int h = detail::pnm_token(is);
    const int maxval = detail::pnm_token(is);
    if (maxval != 255) throw std::runtime_error("read_pnm: only maxval 255 supported");
    Frame f(w, h, channels);
    is.read(reinterpret_cast<char*>(f.samples.data()),
            static_cast<std::streamsize>(f.samples.size()));
    if (is.gcount() != static_cast<std::streamsize>(f.samples.size()))
        throw std::runtime_error("read_pnm: truncated pixel data in " + path);
    return f;
}

}  // namespace semlink
