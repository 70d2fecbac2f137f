// =========================
// types.hpp
// =========================
//
// Shared domain types: channel symbols, channel specifications, and the
// per-experiment metrics record with its CSV serialization.
//
// SNR convention used across the whole project:
//   snr_db = 10*log10(E|x|^2 / E|n|^2) with E|x|^2 = 1 after power
//   normalization; the complex noise variance is 10^(-snr_db/10) total,
//   split evenly between I and Q. BPSK carries information on I only.
#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace semlink {

using cplx = std::complex<double>;

struct SymbolBlock {
    std::vector<cplx> symbols;

    SymbolBlock() = default;
    explicit SymbolBlock(std::vector<cplx> s) : symbols(std::move(s)) {}
    explicit SymbolBlock(size_t n) : symbols(n) {}

    size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
    cplx& operator[](size_t i) { return symbols[i]; }
    const cplx& operator[](size_t i) const { return symbols[i]; }

    double mean_power() const {
        if (symbols.empty()) return 0.0;
        double acc = 0.0;
        for (const cplx& s : symbols) acc += std::norm(s);
        return acc / static_cast<double>(symbols.size());
    }
};

enum class ChannelKind { awgn, rayleigh_block, geo };

inline const char* to_string(ChannelKind k) {
    switch (k) {
        case ChannelKind::awgn: return "awgn";
        case ChannelKind::rayleigh_block: return "rayleigh_block";
        case ChannelKind::geo: return "geo";
    }
    return "?";
}

inline ChannelKind channel_kind_from_string(const std::string& s) {
    if (s == "awgn") return ChannelKind::awgn;
    if (s == "rayleigh_block") return ChannelKind::rayleigh_block;
    if (s == "geo") return ChannelKind::geo;
    throw std::invalid_argument("unknown channel kind: " + s);
}

struct ChannelSpec {
    ChannelKind kind = ChannelKind::awgn;
    double snr_db = 10.0;              // awgn / rayleigh operating point
    int block_len = 1;                 // rayleigh only
    double snr_lo_db = 9.3;            // geo only: per-frame SNR range
    double snr_hi_db = 10.0;
    std::optional<double> secondary_target_snr_db;  // geo: degrade cascade to this

    void validate() const {
        if (kind == ChannelKind::rayleigh_block && block_len < 1)
            throw std::invalid_argument("ChannelSpec: block_len must be >= 1");
        if (kind == ChannelKind::geo && snr_lo_db > snr_hi_db)
            throw std::invalid_argument("ChannelSpec: geo snr range lo > hi");
    }

    static ChannelSpec awgn_at(double snr_db) {
        ChannelSpec c;
        c.kind = ChannelKind::awgn;
        c.snr_db = snr_db;
        return c;
    }
    static ChannelSpec geo_default() {
        ChannelSpec c;
        c.kind = ChannelKind::geo;
        return c;
    }
};

enum class Pipeline { classical, semantic };

inline const char* to_string(Pipeline p) {
    return p == Pipeline::classical ? "classical" : "semantic";
}

// One experiment point. ms_ssim_db = -10*log10(1 - ms_ssim) (inf when
// ms_ssim == 1; serialized as "inf").
struct MetricsRecord {
    Pipeline pipeline = Pipeline::classical;
    double cbr = 0.0;
    ChannelKind channel = ChannelKind::awgn;
    double snr_db = 0.0;  // realized SNR for geo, configured otherwise
    double ms_ssim = 0.0;
    double ms_ssim_db = 0.0;
    double psnr_db = 0.0;
    double wall_ms = 0.0;

    static std::string csv_header() {
        return "pipeline,cbr,channel,snr_db,ms_ssim,ms_ssim_db,psnr_db,wall_ms";
    }

    std::string to_csv_row() const {
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%s,%.10g,%s,%.10g,%.10g,%.10g,%.10g,%.10g",
                      to_string(pipeline), cbr, to_string(channel), snr_db, ms_ssim,
                      ms_ssim_db, psnr_db, wall_ms);
        return buf;
    }
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace semlink
