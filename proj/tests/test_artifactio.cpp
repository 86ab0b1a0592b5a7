#include <doctest.h>

#include <filesystem>

#include "fibermovie/error.hpp"
#include "fibermovie/report.hpp"
#include "fibermovie/serialize.hpp"
#include "fibermovie/svg.hpp"

using namespace fibermovie;

namespace {

Movie movie_of(const char* word) { return build_movie(parse_braid_word(word)); }

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("slice text round trips") {
  const Movie m = movie_of("-1 -1 -2 3 -1 3 -2");
  for (const auto& s : m.slices) CHECK(parse_slice(serialize_slice(s)) == s);
}

TEST_CASE("movie text round trips byte for byte") {
  for (const char* word : {"", "1 1 1", "-1 -1 -2 3 -1 3 -2"}) {
    CAPTURE(word);
    const Movie m = movie_of(word);
    const std::string text = serialize_movie(m);
    const Movie back = parse_movie(text);
    CHECK(back == m);
    CHECK(serialize_movie(back) == text);
  }
  CHECK(occurrences(serialize_movie(movie_of("1 1 1")), "\nrecord ") == 8);
}

TEST_CASE("movie parser reports malformed input") {
  const std::string good = serialize_movie(movie_of("1 1"));
  CHECK_THROWS_AS(parse_movie(""), Error);
  CHECK_THROWS_AS(parse_movie("fibermovie-movie 99\n"), Error);
  std::string bad = good;
  bad.replace(bad.find("CrossingMove"), 12, "CrossingMeme");
  CHECK_THROWS_AS(parse_movie(bad), Error);
  CHECK_THROWS_AS(parse_movie(good + "junk\n"), Error);
  CHECK_THROWS_AS(parse_movie(good.substr(0, good.size() / 2)), Error);
}

TEST_CASE("json report follows the schema") {
  const Movie m = movie_of("1 1 1");
  const FiberReport f = fiber_report(m, 8);
  const MovieValidation v = validate_movie(m);
  const auto j = report_json({m, f, v});
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema_version", "braid", "timeline", "records", "fibers", "oracle", "checks"});
  CHECK(j["braid"]["signature"] == nlohmann::json::array({1}));
  CHECK(j["records"].size() == 8);
  CHECK(j["fibers"]["samples"].size() == 8);
  CHECK(j["fibers"]["samples"][0]["chi"] == -1);
  CHECK(j["oracle"]["genus"] == 1);
  for (const auto& [k, value] : j["checks"].items()) {
    CAPTURE(k);
    CHECK(value == true);
  }
  CHECK(report_checks_pass({m, f, v}));
  CHECK(report_text({m, f, v}).find("chi -1") != std::string::npos);
}

TEST_CASE("seven-letter word and Hopf reports") {
  const Movie fig = movie_of("-1 -1 -2 3 -1 3 -2");
  const FiberReport f = fiber_report(fig, 8);
  const auto j = report_json({fig, f, validate_movie(fig)});
  CHECK(j["oracle"]["chi"] == -3);
  CHECK(j["oracle"]["components"] == 3);
  CHECK(j["oracle"]["genus"] == 1);
  const Movie hopf = movie_of("1 1");
  CHECK(report_json({hopf, fiber_report(hopf, 8), validate_movie(hopf)})["oracle"]["genus"] == 0);
}

TEST_CASE("slice svg draws circles, leaves and arrows deterministically") {
  const std::string annulus = render_slice_svg(initial_annulus_fibration());
  CHECK(occurrences(annulus, "<circle ") == 2);
  CHECK(occurrences(annulus, "class=\"arrow\"") == 0);
  CHECK(annulus.rfind("</svg>\n") == annulus.size() - 7);

  const Movie m = movie_of("-1 -1 -2 3 -1 3 -2");
  const SliceFibration& f1 = middle_slice(m);
  const std::string svg = render_slice_svg(f1);
  CHECK(occurrences(svg, "<circle ") == 8);
  CHECK(occurrences(svg, "class=\"arrow\"") == 12);
  CHECK(render_slice_svg(f1) == svg);

  SliceFibration broken = f1;
  broken.xsings.front().germs.pop_back();
  CHECK_THROWS_AS(render_slice_svg(broken), Error);
}

TEST_CASE("frames follow segment boundaries") {
  const Movie m = movie_of("1 1 1");
  const auto frames = movie_frames(m, 1);
  CHECK(frames.size() == m.records.size() + 1);
  const auto doubled = movie_frames(m, 2);
  CHECK(doubled.size() == 2 * m.records.size() + 1);
  for (std::size_t k = 1; k < doubled.size(); ++k) CHECK(doubled[k - 1].t < doubled[k].t);
  for (const auto& f : doubled) CHECK(validate_slice(f.slice).valid());
  const std::string summary = frame_summary(frames);
  CHECK(summary.rfind("frame 000 t -1 record 0 circles 0 xsings 0 leaf_components 0", 0) == 0);
  CHECK_THROWS_AS(movie_frames(m, 0), Error);
}

TEST_CASE("fiber schematic carries the invariants") {
  const Movie m = movie_of("1 1 1");
  const Angle theta = sample_regular_angles(m, 1).front();
  const std::string svg = render_fiber_svg(extract_fiber(m, theta), sample_fiber(m, theta));
  CHECK(svg.find("chi -1  boundary 1  genus 1") != std::string::npos);
}

TEST_CASE("text files round trip") {
  const auto path = std::filesystem::temp_directory_path() / "fibermovie_io_test" / "x.txt";
  write_text_file(path, "abc\n");
  CHECK(read_text_file(path) == "abc\n");
  std::filesystem::remove_all(path.parent_path());
  CHECK_THROWS_AS(read_text_file(path), Error);
}
