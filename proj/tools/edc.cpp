// Command-line front end: encode, decode, metrics and a bench sweep that
// writes Table-style CSV rows for an image corpus.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edc/edc.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitBitstream = 3;

struct CommonFlags {
    int block_size = 8;
    std::string scheme = "m3";
    int quality = 50;
    double sigma = 1.4;
    double canny_low = 0.1;
    double canny_high = 0.3;
    int min_edge_pixels = 1;
    std::string force = "auto";

    edc::EncodeConfig to_config() const {
        edc::EncodeConfig cfg;
        cfg.block_size = block_size;
        cfg.scheme = edc::scheme_from_name(scheme);
        cfg.quality = quality;
        cfg.canny.sigma = sigma;
        cfg.canny.low = canny_low;
        cfg.canny.high = canny_high;
        cfg.min_edge_pixels = min_edge_pixels;
        if (force == "auto")
            cfg.force = edc::ForceClassification::Auto;
        else if (force == "all-edge")
            cfg.force = edc::ForceClassification::AllEdge;
        else
            cfg.force = edc::ForceClassification::AllNonEdge;
        return cfg;
    }
};

void add_shared_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--quality", f.quality, "quantizer quality 1..100")
        ->check(CLI::Range(1, 100))
        ->capture_default_str();
    cmd->add_option("--sigma", f.sigma, "Gaussian sigma for edge detection")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--canny-low", f.canny_low, "low hysteresis threshold (fraction of max)")
        ->capture_default_str();
    cmd->add_option("--canny-high", f.canny_high, "high hysteresis threshold (fraction of max)")
        ->capture_default_str();
    cmd->add_option("--min-edge-pixels", f.min_edge_pixels,
                    "edge pixels required to mark a block as edge")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--force-classification", f.force, "override block classification")
        ->check(CLI::IsMember({"auto", "all-edge", "all-nonedge"}))
        ->capture_default_str();
}

void add_knob_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--block-size", f.block_size, "DCT block size")
        ->check(CLI::IsMember({8, 16, 32}))
        ->capture_default_str();
    cmd->add_option("--scheme", f.scheme, "AC retention scheme")
        ->check(CLI::IsMember({"m1", "m2", "m3"}))
        ->capture_default_str();
    add_shared_flags(cmd, f);
}

std::string format_double(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

int run_encode(const std::string& input, const std::string& output, const CommonFlags& flags) {
    const edc::RgbImage img = edc::load_ppm(input);
    const edc::EncodeResult res = edc::encode_image(img, flags.to_config());
    edc::write_file(output, res.stream.bytes);
    std::cout << "bpp=" << format_double(res.bpp, 6) << " cr=" << format_double(res.cr, 6)
              << " edge_block_pct=" << format_double(res.edge_block_pct, 2) << "\n";
    return kExitOk;
}

int run_decode(const std::string& input, const std::string& output) {
    const edc::CompressedImage cs{edc::read_file(input)};
    const edc::RgbImage img = edc::decode_image(cs);
    edc::save_ppm(output, img);
    return kExitOk;
}

int run_metrics(const std::string& orig_path, const std::string& recon_path) {
    const edc::RgbImage orig = edc::load_ppm(orig_path);
    const edc::RgbImage recon = edc::load_ppm(recon_path);
    if (orig.width != recon.width || orig.height != recon.height)
        throw std::invalid_argument("metrics: image dimensions differ");

    const edc::colorspace::ChannelMeans m = edc::colorspace::channel_means(orig);
    const edc::YcbcrImage a = edc::colorspace::forward_with_means(orig, m);
    const edc::YcbcrImage b = edc::colorspace::forward_with_means(recon, m);
    const double mse_y = edc::metrics::mse(a.y, b.y);
    const double mse_cb = edc::metrics::mse(a.cb, b.cb);
    const double mse_cr = edc::metrics::mse(a.cr, b.cr);
    std::cout << "psnr_db=" << format_double(edc::metrics::psnr(a, b), 4)
              << " mse_y=" << format_double(mse_y, 6) << " mse_cb=" << format_double(mse_cb, 6)
              << " mse_cr=" << format_double(mse_cr, 6)
              << " psnr_rgb_db=" << format_double(edc::metrics::psnr_rgb(orig, recon), 4) << "\n";
    return kExitOk;
}

struct BenchRow {
    std::string image;
    int block_size;
    std::string scheme;
    double bpp, psnr_db, cr, edge_block_pct, psnr_rgb_db;
};

std::string csv_row(const BenchRow& r) {
    std::ostringstream os;
    os << r.image << "," << r.block_size << "," << r.scheme << "," << format_double(r.bpp, 6)
       << "," << format_double(r.psnr_db, 4) << "," << format_double(r.cr, 6) << ","
       << format_double(r.edge_block_pct, 2) << "," << format_double(r.psnr_rgb_db, 4);
    return os.str();
}

int run_bench(const std::string& images_dir, const std::string& out_csv,
              std::vector<int> block_sizes, std::vector<std::string> schemes,
              const CommonFlags& flags) {
    std::vector<fs::path> inputs;
    for (const auto& entry : fs::directory_iterator(images_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".ppm")
            inputs.push_back(entry.path());
    std::sort(inputs.begin(), inputs.end());
    if (inputs.empty())
        throw std::ios_base::failure("bench: no .ppm files in " + images_dir);

    std::sort(block_sizes.begin(), block_sizes.end());
    std::sort(schemes.begin(), schemes.end());

    std::vector<BenchRow> rows;
    for (const fs::path& path : inputs) {
        edc::RgbImage img;
        try {
            img = edc::load_ppm(path.string());
        } catch (const std::exception& e) {
            std::cerr << "bench: skipping " << path.string() << ": " << e.what() << "\n";
            continue;
        }
        for (int n : block_sizes) {
            for (const std::string& scheme : schemes) {
                try {
                    CommonFlags f = flags;
                    f.block_size = n;
                    f.scheme = scheme;
                    const edc::EncodeResult enc = edc::encode_image(img, f.to_config());
                    const edc::RgbImage recon = edc::decode_image(enc.stream);
                    const edc::metrics::QualityReport q =
                        edc::metrics::compare(img, recon, enc.stream);
                    rows.push_back({path.stem().string(), n, scheme, q.bpp, q.psnr_db, q.cr,
                                    enc.edge_block_pct,
                                    edc::metrics::psnr_rgb(img, recon)});
                } catch (const std::exception& e) {
                    std::cerr << "bench: " << path.stem().string() << " n=" << n << " " << scheme
                              << ": " << e.what() << "\n";
                }
            }
        }
    }

    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.image, a.block_size, a.scheme) <
               std::tie(b.image, b.block_size, b.scheme);
    });

    // per-(block size, scheme) averages over the images that succeeded
    std::map<std::pair<int, std::string>, std::vector<const BenchRow*>> groups;
    for (const BenchRow& r : rows) groups[{r.block_size, r.scheme}].push_back(&r);

    std::ostringstream csv;
    csv << "image,N,scheme,bpp,psnr_db,cr,edge_block_pct,psnr_rgb_db\n";
    for (const BenchRow& r : rows) csv << csv_row(r) << "\n";
    for (const auto& [key, members] : groups) {
        BenchRow avg{"average", key.first, key.second, 0, 0, 0, 0, 0};
        for (const BenchRow* r : members) {
            avg.bpp += r->bpp;
            avg.psnr_db += r->psnr_db;
            avg.cr += r->cr;
            avg.edge_block_pct += r->edge_block_pct;
            avg.psnr_rgb_db += r->psnr_rgb_db;
        }
        const double n = static_cast<double>(members.size());
        avg.bpp /= n;
        avg.psnr_db /= n;
        avg.cr /= n;
        avg.edge_block_pct /= n;
        avg.psnr_rgb_db /= n;
        csv << csv_row(avg) << "\n";
    }

    const std::string text = csv.str();
    edc::write_file(out_csv, std::vector<std::uint8_t>(text.begin(), text.end()));
    std::cout << "wrote " << rows.size() << " rows + " << groups.size() << " averages to "
              << out_csv << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-adaptive block-DCT color image codec"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string input, output;

    CLI::App* enc = app.add_subcommand("encode", "compress a PPM image");
    enc->add_option("input", input, "input .ppm")->required();
    enc->add_option("output", output, "output bitstream")->required();
    add_knob_flags(enc, flags);

    CLI::App* dec = app.add_subcommand("decode", "decompress a bitstream to PPM");
    dec->add_option("input", input, "input bitstream")->required();
    dec->add_option("output", output, "output .ppm")->required();

    CLI::App* met = app.add_subcommand("metrics", "compare two PPM images");
    met->add_option("original", input, "original .ppm")->required();
    met->add_option("reconstruction", output, "reconstructed .ppm")->required();

    CLI::App* bench = app.add_subcommand("bench", "rate/quality sweep over an image directory");
    std::string images_dir, out_csv;
    std::vector<int> bench_sizes{8, 16, 32};
    std::vector<std::string> bench_schemes{"m1", "m2", "m3"};
    bench->add_option("--images", images_dir, "directory of .ppm test images")->required();
    bench->add_option("--out", out_csv, "output CSV path")->required();
    bench->add_option("--block-sizes", bench_sizes, "block sizes to sweep")
        ->check(CLI::IsMember({8, 16, 32}))
        ->capture_default_str();
    bench->add_option("--schemes", bench_schemes, "schemes to sweep")
        ->check(CLI::IsMember({"m1", "m2", "m3"}))
        ->capture_default_str();
    add_shared_flags(bench, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*enc) return run_encode(input, output, flags);
        if (*dec) return run_decode(input, output);
        if (*met) return run_metrics(input, output);
        if (*bench) return run_bench(images_dir, out_csv, bench_sizes, bench_schemes, flags);
    } catch (const edc::BitstreamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBitstream;
    } catch (const edc::PpmError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
