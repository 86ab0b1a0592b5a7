#include "fibermovie/construction.hpp"

#include "fibermovie/error.hpp"

namespace fibermovie {

std::vector<Rational> Timeline::boundaries() const {
  std::vector<Rational> out{cap_begin, step1_begin};
  out.insert(out.end(), crossing_times.begin(), crossing_times.end());
  out.push_back(step3_end);
  out.push_back(cap_end);
  return out;
}

Timeline build_timeline(const BraidWord& w) {
  Timeline t;
  const int n = w.length();
  t.letters = n;
  t.crossing_times.clear();
  if (n == 0) {
    t.crossing_times = {Rational(1), Rational(2)};
    return t;
  }
  for (int i = 1; i <= n + 1; ++i) t.crossing_times.push_back(Rational(1) + Rational(i - 1, n));
  return t;
}

namespace {

template <typename Fn>
void append(Movie& m, Rational t0, Rational t1, Fn&& move) {
  const int index = static_cast<int>(m.records.size());
  MoveResult result;
  try {
    result = move(m.slices.back());
  } catch (const Error& e) {
    throw Error(e.code(), "construction record " + std::to_string(index) + ": " + e.what());
  }
  auto& [after, rec] = result;
  rec.t_begin = t0;
  rec.t_end = t1;
  rec.before = index;
  rec.after = index + 1;
  m.records.push_back(rec);
  m.slices.push_back(after);
}

Rational lerp(const Rational& a, const Rational& b, int k, int n) {
  return a + (b - a) * Rational(k, n);
}

}  // namespace

Movie run_step1(const BraidWord& w) {
  Movie m;
  m.braid = w;
  m.signature = homogeneity_signature(w);
  m.timeline = build_timeline(w);
  m.slices.push_back(empty_slice());
  const Timeline& tl = m.timeline;
  append(m, tl.cap_begin, tl.step1_begin, [](const SliceFibration& s) { return meridional_start(s); });
  const int steps = 2 * (w.strands - 1);
  int k = 0;
  for (int i = 2; i <= w.strands; ++i) {
    const int sign = m.signature.sign(i - 1);
    const Rational a = lerp(tl.step1_begin, tl.crossing_times.front(), k, steps);
    const Rational b = lerp(tl.step1_begin, tl.crossing_times.front(), k + 1, steps);
    const Rational c = lerp(tl.step1_begin, tl.crossing_times.front(), k + 2, steps);
    k += 2;
    append(m, a, b, [&](const SliceFibration& s) { return rotation_record(s, i, sign); });
    append(m, b, c, [&](const SliceFibration& s) { return min_movie(s, i); });
  }
  return m;
}

Movie run_step2(Movie partial, const BraidWord& w) {
  const auto first = first_occurrences(w);
  const auto& times = partial.timeline.crossing_times;
  for (int i = 0; i < w.length(); ++i) {
    const Letter l = w.letters[i];
    append(partial, times[i], times[i + 1], [&](const SliceFibration& s) {
      return crossing_move(s, l.index, l.sign, first[i]);
    });
  }
  return partial;
}

Movie run_step3(Movie partial) {
  const Timeline& tl = partial.timeline;
  const int maxima = partial.slices.back().rows - 1;
  for (int k = 0; k < maxima; ++k) {
    const int row = partial.slices.back().rows;
    append(partial, lerp(tl.crossing_times.back(), tl.step3_end, k, maxima),
           lerp(tl.crossing_times.back(), tl.step3_end, k + 1, maxima),
           [&](const SliceFibration& s) { return max_movie(s, row); });
  }
  append(partial, tl.step3_end, tl.cap_end, [](const SliceFibration& s) { return cap_off(s); });
  return partial;
}

Movie build_movie(const BraidWord& w) {
  try {
    homogeneity_signature(w);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotHomogeneous, e.what());
  }
  return run_step3(run_step2(run_step1(w), w));
}

const SliceFibration& middle_slice(const Movie& m) {
  const std::size_t step1_records = 1 + 2 * static_cast<std::size_t>(std::max(0, m.braid.strands - 1));
  return m.slices.at(std::min(step1_records, m.slices.size() - 1));
}

}  // namespace fibermovie
