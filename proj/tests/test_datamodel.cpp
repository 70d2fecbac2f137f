#include <catch2/catch_amalgamated.hpp>
#include <filesystem>

#include "semlink/bitstream.hpp"
#include "semlink/corpus.hpp"
#include "semlink/frame.hpp"
#include "semlink/rng.hpp"
#include "semlink/types.hpp"

using namespace semlink;

namespace {
Frame random_frame(Rng& rng, int w, int h, int c) {
    Frame f(w, h, c);
    for (auto& s : f.samples) s = static_cast<uint8_t>(rng.below(256));
    return f;
}
std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}
}  // namespace

TEST_CASE("frame invariants are enforced") {
    REQUIRE_THROWS_AS(Frame(0, 4, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(Frame(4, 0, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(Frame(4, 4, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(Frame(2, 2, 1, std::vector<uint8_t>(3, 0)), std::invalid_argument);
}

TEST_CASE("pnm round trip is bit exact") {
    Rng rng(11);
    for (int iter = 0; iter < 10; ++iter) {
        const int c = (iter % 2) ? 1 : 3;
        const int w = 1 + static_cast<int>(rng.below(40));
        const int h = 1 + static_cast<int>(rng.below(40));
        const Frame f = random_frame(rng, w, h, c);
        const std::string path = tmp_path("semlink_pnm_test" + std::to_string(iter) +
                                          (c == 1 ? ".pgm" : ".ppm"));
        write_pnm(f, path);
        const Frame g = read_pnm(path);
        REQUIRE(f == g);
        std::filesystem::remove(path);
    }
}

TEST_CASE("pnm reader accepts comments") {
    const std::string path = tmp_path("semlink_comment.pgm");
    {
        std::ofstream os(path, std::ios::binary);
        os << "P5\n# a comment\n2 1\n255\n";
        os.put(char(7));
        os.put(char(250));
    }
    const Frame f = read_pnm(path);
    REQUIRE(f.width == 2);
    REQUIRE(f.samples[1] == 250);
    std::filesystem::remove(path);
}

TEST_CASE("real01 round trip and luma") {
    Rng rng(12);
    const Frame f = random_frame(rng, 9, 5, 3);
    const auto planar = f.to_real01();
    const Frame g = Frame::from_real01(9, 5, 3, planar);
    REQUIRE(f == g);

    Frame rgb(1, 1, 3);
    rgb.samples = {100, 200, 50};
    const auto y = rgb.luma();
    REQUIRE(y[0] == Catch::Approx(0.299 * 100 + 0.587 * 200 + 0.114 * 50));
}

TEST_CASE("bitstream packing is MSB first with zero padding") {
    BitStream b;
    b.push_bits(0b101, 3);
    REQUIRE(b.size() == 3);
    REQUIRE(b.bytes()[0] == 0b10100000);
    REQUIRE(b.get(0) == 1);
    REQUIRE(b.get(1) == 0);
    REQUIRE(b.get(2) == 1);
    const BitStream c = BitStream::from_bytes(b.bytes(), 3);
    REQUIRE(b == c);
    REQUIRE(b.read_bits(0, 3) == 0b101);
}

TEST_CASE("bitstream slice append and bounds") {
    BitStream b;
    b.push_bits(0xA5, 8);
    BitStream s = b.slice(4, 4);
    REQUIRE(s.read_bits(0, 4) == 0x5);
    s.append(b);
    REQUIRE(s.size() == 12);
    REQUIRE_THROWS_AS(b.slice(5, 4), std::out_of_range);
    REQUIRE_THROWS_AS(BitStream::from_bytes({0xFF}, 9), std::invalid_argument);
}

TEST_CASE("symbol block mean power") {
    SymbolBlock s(std::vector<cplx>{{2, 0}, {0, 0}, {0, 0}, {0, 0}});
    REQUIRE(s.mean_power() == Catch::Approx(1.0));
}

TEST_CASE("channel spec validation") {
    ChannelSpec bad = ChannelSpec::geo_default();
    bad.snr_lo_db = 10.5;
    REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
    ChannelSpec ray;
    ray.kind = ChannelKind::rayleigh_block;
    ray.block_len = 0;
    REQUIRE_THROWS_AS(ray.validate(), std::invalid_argument);
}

TEST_CASE("metrics record serializes with the documented header") {
    REQUIRE(MetricsRecord::csv_header() ==
            "pipeline,cbr,channel,snr_db,ms_ssim,ms_ssim_db,psnr_db,wall_ms");
    MetricsRecord r;
    r.pipeline = Pipeline::semantic;
    r.cbr = 0.001;
    r.channel = ChannelKind::geo;
    r.snr_db = 9.65;
    r.ms_ssim = 0.9;
    r.ms_ssim_db = 10.0;
    r.psnr_db = 30.0;
    r.wall_ms = 12.5;
    REQUIRE(r.to_csv_row() == "semantic,0.001,geo,9.65,0.9,10,30,12.5");
}

TEST_CASE("synthetic corpus is deterministic and diverse") {
    Rng root(2024);
    const Frame a = synth_frame(root.substream({"corpus", "frame=0"}), 64, 48, 3);
    const Frame b = synth_frame(root.substream({"corpus", "frame=0"}), 64, 48, 3);
    const Frame c = synth_frame(root.substream({"corpus", "frame=1"}), 64, 48, 3);
    REQUIRE(a == b);
    REQUIRE(a != c);
    REQUIRE(a.width == 64);
    REQUIRE(a.channels == 3);
}

TEST_CASE("corpus write and load round trip") {
    const std::string dir = tmp_path("semlink_corpus_test");
    std::filesystem::remove_all(dir);
    write_corpus(dir, 5, 4, 32, 24, 3);
    const auto frames = load_corpus(dir);
    REQUIRE(frames.size() == 4);
    const auto direct = synth_corpus(5, 4, 32, 24, 3);
    for (size_t i = 0; i < 4; ++i) REQUIRE(frames[i] == direct[i]);
    std::filesystem::remove_all(dir);
}
