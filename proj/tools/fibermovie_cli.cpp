#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fibermovie/error.hpp"
#include "fibermovie/report.hpp"
#include "fibermovie/serialize.hpp"
#include "fibermovie/svg.hpp"

using namespace fibermovie;

namespace {

struct Options {
  std::vector<std::string> word;
  std::optional<int> strands;
  int samples = 8;
  std::string out;
  std::string frames = "frames";
  int per_segment = 1;
  std::string format = "text";
};

BraidWord read_word(const Options& o) {
  std::string text;
  for (const auto& t : o.word) text += t + ' ';
  return parse_braid_word(text, o.strands);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.out, text);
  }
}

std::string signature_text(const HomogeneitySignature& sig) {
  std::string s = "(";
  for (std::size_t i = 0; i < sig.signs.size(); ++i) s += (i ? "," : "") + std::string(sig.signs[i] > 0 ? "+1" : "-1");
  return s + ")";
}

int cmd_validate(const Options& o) {
  const BraidWord w = read_word(o);
  const HomogeneitySignature sig = homogeneity_signature(w);
  if (o.format == "json") {
    nlohmann::ordered_json j{{"word", format_braid_word(w)}, {"strands", w.strands}, {"homogeneous", true},
                             {"signature", sig.signs}};
    emit(o, j.dump(2) + "\n");
  } else {
    emit(o, "homogeneous, " + std::to_string(w.strands) + " strands, signature " + signature_text(sig) + "\n");
  }
  return 0;
}

int cmd_build(const Options& o) {
  emit(o, serialize_movie(build_movie(read_word(o))));
  return 0;
}

int cmd_report(const Options& o) {
  const Movie m = build_movie(read_word(o));
  const FiberReport fibers = fiber_report(m, o.samples);
  const MovieValidation validation = validate_movie(m);
  const ReportDocument doc{m, fibers, validation};
  emit(o, o.format == "json" ? report_json(doc).dump(2) + "\n" : report_text(doc));
  return report_checks_pass(doc) ? 0 : 3;
}

int cmd_render(const Options& o) {
  const Movie m = build_movie(read_word(o));
  const std::filesystem::path dir = o.frames;
  const auto frames = movie_frames(m, o.per_segment);
  for (std::size_t k = 0; k < frames.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%03zu.svg", k);
    write_text_file(dir / name, render_slice_svg(frames[k].slice));
  }
  write_text_file(dir / "frames.txt", frame_summary(frames));
  const auto angles = sample_regular_angles(m, 3);
  for (std::size_t k = 0; k < angles.size(); ++k) {
    const FiberSurface fs = extract_fiber(m, angles[k]);
    const FiberSample s = sample_fiber(m, angles[k]);
    write_text_file(dir / ("fiber_" + std::to_string(k) + ".svg"), render_fiber_svg(fs, s));
  }
  std::cout << frames.size() << " frames and " << angles.size() << " fiber schematics written to " << dir.string()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Movies of singular fibrations for homogeneous braid closures"};
  app.require_subcommand(1);
  Options o;

  auto add_word = [&o](CLI::App* sub) {
    sub->add_option("word", o.word, "braid word, e.g. \"1 1 1\" or \"-1 -1 -2 3\"")->allow_extra_args();
    sub->add_option("--strands", o.strands, "number of strands (default: largest generator + 1)");
    sub->add_option("--out", o.out, "output file (default: stdout)");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  auto* validate = app.add_subcommand("validate", "check homogeneity and print the signature");
  add_word(validate);
  auto* build = app.add_subcommand("build", "construct the movie and write it in the movie file format");
  add_word(build);
  auto* report = app.add_subcommand("report", "extract fibers and compare against the braid invariants");
  add_word(report);
  report->add_option("--samples", o.samples, "number of regular angles to sample")->check(CLI::PositiveNumber);
  auto* render = app.add_subcommand("render", "write SVG frames and fiber schematics");
  add_word(render);
  render->add_option("--frames", o.frames, "output directory");
  render->add_option("--frames-per-segment", o.per_segment, "frames per movie segment")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(o);
    if (*build) return cmd_build(o);
    if (*report) return cmd_report(o);
    if (*render) return cmd_render(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool user_error = e.code() == ErrorCode::MalformedToken || e.code() == ErrorCode::IndexOutOfRange ||
                            e.code() == ErrorCode::MixedSign || e.code() == ErrorCode::MissingGenerator ||
                            e.code() == ErrorCode::NotHomogeneous || e.code() == ErrorCode::Io;
    return user_error ? 1 : 2;
  }
  return 0;
}
