#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "steg/image_io.hpp"
#include "steg/metrics.hpp"
#include "steg/stego.hpp"

namespace steg::cli {
namespace {

using nlohmann::json;

constexpr std::array<const char*, 3> kPlaneNames = {"R", "G", "B"};
constexpr std::array<const char*, 3> kPlaneSuffix = {"r", "g", "b"};

const char* const kJsonKeysHelp = R"(JSON output (--json), one object per invocation:
  embed    {"command","output","alpha","planes":[{"plane","bits","capacity"}],"psnr_db","mse"}
  extract  {"command","filter","planes":[{"plane","rows","cols","output"}]}
  capacity {"command","rows","cols","capacity_per_plane","max_square_side"}
  psnr     {"command","psnr_db","mse"}
  ber      {"command","ber","rows","cols"}
psnr_db is the string "inf" for identical images.
Exit codes: 0 success, 1 I/O or format error, 2 capacity or parameter violation.)";

struct KeyOptions {
  std::optional<std::string> text;
  std::string file;
};

SessionKey resolve_key(const KeyOptions& opts) {
  if (!opts.file.empty()) {
    std::ifstream in(opts.file, std::ios::binary);
    if (!in) throw Error(Errc::FileNotFound, "cannot read key file " + opts.file);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return SessionKey(std::move(bytes));
  }
  if (!opts.text) throw Error(Errc::InvalidArgument, "a session key is required (--key or --key-file)");
  return SessionKey(*opts.text);
}

// "WxH" -> rows = H, cols = W
SecretSize parse_size(const std::string& text) {
  const auto x = text.find_first_of("xX");
  auto parse = [&](std::string_view s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
      throw Error(Errc::InvalidArgument, "size '" + text + "' must be WxH with positive integers");
    }
    return v;
  };
  if (x == std::string::npos) {
    throw Error(Errc::InvalidArgument, "size '" + text + "' must be WxH with positive integers");
  }
  const std::string_view sv(text);
  const std::size_t w = parse(sv.substr(0, x));
  const std::size_t h = parse(sv.substr(x + 1));
  return {h, w};
}

std::string format_psnr(double db) {
  if (std::isinf(db)) return "inf";
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << db;
  return s.str();
}

json psnr_json(double db) { return std::isinf(db) ? json("inf") : json(db); }

std::string format_fraction(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::CapacityExceeded:
    case Errc::InvalidArgument:
      return kExitParam;
    default:
      return kExitIo;
  }
}

struct EmbedArgs {
  std::string cover;
  std::array<std::string, 3> secrets;
  KeyOptions key;
  double alpha = kDefaultAlpha;
  int threshold = 128;
  std::string out;
};

int cmd_embed(const EmbedArgs& a, bool as_json, std::ostream& out) {
  const SessionKey key = resolve_key(a.key);
  const RgbImage cover = io::load_rgb(a.cover);
  const std::size_t cap = plane_capacity(cover.rows(), cover.cols());

  std::array<BitImage, 3> secrets;
  for (int p = 0; p < 3; ++p) {
    if (!a.secrets[p].empty()) secrets[p] = io::load_secret(a.secrets[p], a.threshold);
    if (secrets[p].size() > cap) {
      throw Error(Errc::CapacityExceeded,
                  std::string("plane ") + kPlaneNames[p] + ": secret " + a.secrets[p] + " needs " +
                      std::to_string(secrets[p].size()) + " bits but capacity is " +
                      std::to_string(cap));
    }
  }

  const RgbImage stego = embed(cover, secrets, EmbedParams{a.alpha, key});
  io::save_rgb(stego, a.out);
  const QualityReport q = psnr(cover, stego);

  if (as_json) {
    json planes = json::array();
    for (int p = 0; p < 3; ++p) {
      planes.push_back({{"plane", kPlaneNames[p]}, {"bits", secrets[p].size()}, {"capacity", cap}});
    }
    out << json{{"command", "embed"}, {"output", a.out}, {"alpha", a.alpha},
                {"planes", planes},   {"psnr_db", psnr_json(q.psnr_db)}, {"mse", q.mse}}
               .dump()
        << '\n';
  } else {
    for (int p = 0; p < 3; ++p) {
      out << "plane " << kPlaneNames[p] << ": " << secrets[p].size() << " bits embedded, capacity "
          << cap << '\n';
    }
    out << "stego written to " << a.out << '\n';
    out << "PSNR: " << format_psnr(q.psnr_db) << " dB\n";
  }
  return kExitOk;
}

struct ExtractArgs {
  std::string stego;
  KeyOptions key;
  std::array<std::string, 3> sizes;
  std::string out_prefix;
  bool filter = false;
};

int cmd_extract(const ExtractArgs& a, bool as_json, std::ostream& out) {
  const SessionKey key = resolve_key(a.key);
  std::array<SecretSize, 3> sizes{};
  for (int p = 0; p < 3; ++p) {
    if (!a.sizes[p].empty()) sizes[p] = parse_size(a.sizes[p]);
  }
  const RgbImage stego = io::load_rgb(a.stego);
  const std::array<BitImage, 3> secrets = extract(stego, key, sizes);

  json planes = json::array();
  for (int p = 0; p < 3; ++p) {
    if (sizes[p].bits() == 0) continue;
    const BitImage bits = a.filter ? majority_filter_3x3(secrets[p]) : secrets[p];
    const std::string path = a.out_prefix + "_" + kPlaneSuffix[p] + ".png";
    io::save_secret(bits, path);
    planes.push_back({{"plane", kPlaneNames[p]}, {"rows", bits.rows()}, {"cols", bits.cols()},
                      {"output", path}});
    if (!as_json) {
      out << "plane " << kPlaneNames[p] << ": " << bits.cols() << "x" << bits.rows()
          << " secret written to " << path << (a.filter ? " (majority filtered)" : "") << '\n';
    }
  }
  if (as_json) {
    out << json{{"command", "extract"}, {"filter", a.filter}, {"planes", planes}}.dump() << '\n';
  }
  return kExitOk;
}

int cmd_capacity(const std::string& cover_path, bool as_json, std::ostream& out) {
  const RgbImage cover = io::load_rgb(cover_path);
  const std::size_t cap = plane_capacity(cover.rows(), cover.cols());
  const auto side = static_cast<std::size_t>(std::sqrt(static_cast<double>(cap)));
  std::size_t max_side = side;
  while (max_side * max_side > cap) --max_side;
  while ((max_side + 1) * (max_side + 1) <= cap) ++max_side;

  if (as_json) {
    out << json{{"command", "capacity"}, {"rows", cover.rows()}, {"cols", cover.cols()},
                {"capacity_per_plane", cap}, {"max_square_side", max_side}}
               .dump()
        << '\n';
  } else {
    out << "capacity per plane: " << cap << " bits\n";
    out << "largest square secret: " << max_side << "x" << max_side << '\n';
  }
  return kExitOk;
}

int cmd_psnr(const std::string& a, const std::string& b, bool as_json, std::ostream& out) {
  const QualityReport q = psnr(io::load_rgb(a), io::load_rgb(b));
  if (as_json) {
    out << json{{"command", "psnr"}, {"psnr_db", psnr_json(q.psnr_db)}, {"mse", q.mse}}.dump()
        << '\n';
  } else {
    out << format_psnr(q.psnr_db) << '\n';
  }
  return kExitOk;
}

int cmd_ber(const std::string& a, const std::string& b, int threshold, bool as_json,
            std::ostream& out) {
  const BitImage x = io::load_secret(a, threshold);
  const BitImage y = io::load_secret(b, threshold);
  const double rate = ber(x, y);
  if (as_json) {
    out << json{{"command", "ber"}, {"ber", rate}, {"rows", x.rows()}, {"cols", x.cols()}}.dump()
        << '\n';
  } else {
    out << format_fraction(rate) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hide three binary images in the DWT/DCT domain of a colour image"};
  app.footer(kJsonKeysHelp);
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one JSON object on stdout");

  EmbedArgs embed_args;
  auto* embed_cmd = app.add_subcommand("embed", "Hide up to three secret images in a cover");
  embed_cmd->add_option("--cover", embed_args.cover, "Cover image (PNG or BMP)")->required();
  embed_cmd->add_option("--secret-r", embed_args.secrets[0], "Secret image for the R plane");
  embed_cmd->add_option("--secret-g", embed_args.secrets[1], "Secret image for the G plane");
  embed_cmd->add_option("--secret-b", embed_args.secrets[2], "Secret image for the B plane");
  auto* embed_key = embed_cmd->add_option("--key", embed_args.key.text, "Session key (UTF-8 text)");
  embed_cmd->add_option("--key-file", embed_args.key.file, "Read the session key as raw bytes")
      ->excludes(embed_key);
  embed_cmd->add_option("--alpha", embed_args.alpha, "Embedding strength")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  embed_cmd->add_option("--threshold", embed_args.threshold, "Binarization threshold")
      ->check(CLI::Range(0, 256))
      ->capture_default_str();
  embed_cmd->add_option("--out", embed_args.out, "Stego output (.png or .bmp)")->required();
  embed_cmd->add_flag("--json", as_json, "Emit one JSON object on stdout");

  ExtractArgs extract_args;
  auto* extract_cmd = app.add_subcommand("extract", "Recover secret images from a stego image");
  extract_cmd->add_option("--stego", extract_args.stego, "Stego image")->required();
  auto* extract_key = extract_cmd->add_option("--key", extract_args.key.text, "Session key");
  extract_cmd->add_option("--key-file", extract_args.key.file, "Read the session key as raw bytes")
      ->excludes(extract_key);
  extract_cmd->add_option("--size-r", extract_args.sizes[0], "R secret size as WxH");
  extract_cmd->add_option("--size-g", extract_args.sizes[1], "G secret size as WxH");
  extract_cmd->add_option("--size-b", extract_args.sizes[2], "B secret size as WxH");
  extract_cmd->add_option("--out-prefix", extract_args.out_prefix,
                          "Writes <prefix>_r.png, <prefix>_g.png, <prefix>_b.png")
      ->required();
  extract_cmd->add_flag("--filter", extract_args.filter, "Apply a 3x3 majority filter");
  extract_cmd->add_flag("--json", as_json, "Emit one JSON object on stdout");

  std::string capacity_cover;
  auto* capacity_cmd = app.add_subcommand("capacity", "Report per-plane capacity of a cover");
  capacity_cmd->add_option("cover,--cover", capacity_cover, "Cover image")->required();
  capacity_cmd->add_flag("--json", as_json, "Emit one JSON object on stdout");

  std::string image_a, image_b;
  auto* psnr_cmd = app.add_subcommand("psnr", "PSNR in dB between two RGB images");
  psnr_cmd->add_option("image_a", image_a)->required();
  psnr_cmd->add_option("image_b", image_b)->required();
  psnr_cmd->add_flag("--json", as_json, "Emit one JSON object on stdout");

  std::string bits_a, bits_b;
  int ber_threshold = 128;
  auto* ber_cmd = app.add_subcommand("ber", "Bit error rate between two binary images");
  ber_cmd->add_option("bits_a", bits_a)->required();
  ber_cmd->add_option("bits_b", bits_b)->required();
  ber_cmd->add_option("--threshold", ber_threshold, "Binarization threshold")
      ->check(CLI::Range(0, 256))
      ->capture_default_str();
  ber_cmd->add_flag("--json", as_json, "Emit one JSON object on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParam;
  }

  try {
    if (*embed_cmd) return cmd_embed(embed_args, as_json, out);
    if (*extract_cmd) return cmd_extract(extract_args, as_json, out);
    if (*capacity_cmd) return cmd_capacity(capacity_cover, as_json, out);
    if (*psnr_cmd) return cmd_psnr(image_a, image_b, as_json, out);
    if (*ber_cmd) return cmd_ber(bits_a, bits_b, ber_threshold, as_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitParam;
}

}  // namespace steg::cli
