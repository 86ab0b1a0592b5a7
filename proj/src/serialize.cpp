#include "fibermovie/serialize.hpp"

#include <fstream>
#include <sstream>

#include "fibermovie/error.hpp"

namespace fibermovie {

namespace {

const char* mark_name(MarkKind k) {
  switch (k) {
    case MarkKind::LeafEndpoint: return "endpoint";
    case MarkKind::BoundaryMin: return "min";
    case MarkKind::BoundaryMax: return "max";
  }
  return "endpoint";
}

MarkKind mark_from(const std::string& s) {
  if (s == "endpoint") return MarkKind::LeafEndpoint;
  if (s == "min") return MarkKind::BoundaryMin;
  if (s == "max") return MarkKind::BoundaryMax;
  throw Error(ErrorCode::ParseError, "unknown mark kind '" + s + "'");
}

template <typename T>
std::string joined(const std::vector<T>& xs) {
  std::ostringstream out;
  for (const auto& x : xs) out << ' ' << x;
  return out.str();
}

void write_slice(std::ostream& out, const SliceFibration& sf) {
  out << "slice rows " << sf.rows << " next_id " << sf.next_id << '\n';
  out << "twist" << joined(sf.twist) << '\n';
  out << "pair_sign" << joined(sf.pair_sign) << '\n';
  for (const auto& c : sf.circles) out << "circle " << c.label.str() << ' ' << c.degree << ' ' << c.phase << '\n';
  for (const auto& m : sf.critical_marks) {
    out << "mark " << m.circle.str() << ' ' << m.rank << ' ' << m.theta << ' ' << mark_name(m.kind) << '\n';
  }
  for (const auto& x : sf.xsings) {
    out << "xsing " << x.id << ' ' << x.theta << ' ' << (x.outward_axis == OutwardAxis::Germs02 ? "02" : "13");
    for (const auto& g : x.germs) out << ' ' << g.str();
    out << '\n';
  }
  for (const auto& c : sf.chambers) {
    out << "chamber " << c.span.lo << ' ' << c.span.hi << ' ' << c.closed_leaves << joined(c.targets) << '\n';
  }
  out << "end\n";
}

class Reader {
 public:
  explicit Reader(const std::string& text) : in_(text) {}

  /// Next non-empty line split into tokens; empty vector at end of input.
  std::vector<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::istringstream ls(line);
      std::vector<std::string> tokens;
      for (std::string t; ls >> t;) tokens.push_back(t);
      if (!tokens.empty()) return tokens;
    }
    return {};
  }

  std::vector<std::string> expect(const std::string& keyword, std::size_t min_tokens = 1) {
    auto t = next();
    if (t.empty() || t[0] != keyword || t.size() < min_tokens) fail("expected '" + keyword + "'");
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no_) + ": " + msg);
  }

  int integer(const std::string& s) const {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    fail("'" + s + "' is not an integer");
  }

  Rational rational(const std::string& s) const {
    try {
      return Rational::parse(s);
    } catch (const std::exception&) {
      fail("'" + s + "' is not a rational");
    }
  }

 private:
  std::istringstream in_;
  int line_no_ = 0;
};

SliceFibration read_slice(Reader& r, std::vector<std::string> head) {
  if (head.size() != 5 || head[0] != "slice" || head[1] != "rows" || head[3] != "next_id") {
    r.fail("malformed slice header");
  }
  SliceFibration sf;
  sf.rows = r.integer(head[2]);
  sf.next_id = r.integer(head[4]);
  for (auto t = r.next();; t = r.next()) {
    if (t.empty()) r.fail("unterminated slice");
    const std::string& key = t[0];
    if (key == "end") break;
    if (key == "twist") {
      for (std::size_t i = 1; i < t.size(); ++i) sf.twist.push_back(r.integer(t[i]));
    } else if (key == "pair_sign") {
      for (std::size_t i = 1; i < t.size(); ++i) sf.pair_sign.push_back(r.integer(t[i]));
    } else if (key == "circle" && t.size() == 4) {
      sf.circles.push_back({CircleLabel::parse(t[1]), r.integer(t[2]), r.rational(t[3])});
    } else if (key == "mark" && t.size() == 5) {
      sf.critical_marks.push_back({CircleLabel::parse(t[1]), r.integer(t[2]), Angle(r.rational(t[3])), mark_from(t[4])});
    } else if (key == "xsing" && t.size() >= 4) {
      XSingularity x;
      x.id = r.integer(t[1]);
      x.theta = Angle(r.rational(t[2]));
      if (t[3] != "02" && t[3] != "13") r.fail("outward axis must be 02 or 13");
      x.outward_axis = t[3] == "02" ? OutwardAxis::Germs02 : OutwardAxis::Germs13;
      for (std::size_t i = 4; i < t.size(); ++i) x.germs.push_back(CircleLabel::parse(t[i]));
      sf.xsings.push_back(x);
    } else if (key == "chamber" && t.size() >= 4) {
      Chamber c;
      c.span = {Angle(r.rational(t[1])), Angle(r.rational(t[2]))};
      c.closed_leaves = r.integer(t[3]);
      for (std::size_t i = 4; i < t.size(); ++i) c.targets.push_back(r.integer(t[i]));
      sf.chambers.push_back(c);
    } else {
      r.fail("unexpected '" + key + "' in slice");
    }
  }
  return sf;
}

}  // namespace

std::string serialize_slice(const SliceFibration& sf) {
  std::ostringstream out;
  write_slice(out, sf);
  return out.str();
}

SliceFibration parse_slice(const std::string& text) {
  Reader r(text);
  return read_slice(r, r.next());
}

std::string serialize_movie(const Movie& m) {
  std::ostringstream out;
  out << "fibermovie-movie " << kMovieFormatVersion << '\n';
  out << "braid " << m.braid.strands << " :" << (m.braid.letters.empty() ? "" : " ")
      << format_braid_word(m.braid) << '\n';
  out << "signature" << joined(m.signature.signs) << '\n';
  out << "timeline" << joined(m.timeline.boundaries()) << '\n';
  out << "records " << m.records.size() << '\n';
  for (const auto& rec : m.records) {
    out << "record " << to_string(rec.kind) << " index " << rec.index << " sign " << rec.sign << " first "
        << (rec.first_occurrence ? 1 : 0) << '\n';
    out << "interval " << rec.t_begin << ' ' << rec.t_end << " slices " << rec.before << ' ' << rec.after << '\n';
    if (rec.eta) {
      const EtaSpec& e = *rec.eta;
      out << "eta " << e.singularity << ' ' << e.endpoint << ' ' << e.first_half << ' ' << e.second_half << ' '
          << e.crossings_first << ' ' << e.crossings_second << '\n';
    }
    out << "effects" << joined(rec.effects.cuts) << " |";
    for (auto k : rec.effects.kinds) out << ' ' << to_string(k);
    out << '\n';
  }
  out << "slices " << m.slices.size() << '\n';
  for (const auto& s : m.slices) write_slice(out, s);
  return out.str();
}

Movie parse_movie(const std::string& text) {
  Reader r(text);
  auto head = r.expect("fibermovie-movie", 2);
  if (r.integer(head[1]) != kMovieFormatVersion) r.fail("unsupported movie format version " + head[1]);
  Movie m;

  auto braid = r.expect("braid", 3);
  if (braid[2] != ":") r.fail("malformed braid line");
  std::string word;
  for (std::size_t i = 3; i < braid.size(); ++i) word += braid[i] + ' ';
  m.braid = parse_braid_word(word, r.integer(braid[1]));

  const auto sig = r.expect("signature");
  for (std::size_t i = 1; i < sig.size(); ++i) m.signature.signs.push_back(r.integer(sig[i]));

  const auto tl = r.expect("timeline");
  if (tl.size() < 7) r.fail("timeline needs at least six boundaries");
  std::vector<Rational> times;
  for (std::size_t i = 1; i < tl.size(); ++i) times.push_back(r.rational(tl[i]));
  m.timeline.cap_begin = times[0];
  m.timeline.step1_begin = times[1];
  m.timeline.crossing_times.assign(times.begin() + 2, times.end() - 2);
  m.timeline.step3_end = times[times.size() - 2];
  m.timeline.cap_end = times.back();
  m.timeline.letters = m.braid.length();

  const int records = r.integer(r.expect("records", 2)[1]);
  auto t = r.next();
  for (int k = 0; k < records; ++k) {
    if (t.size() != 8 || t[0] != "record" || t[2] != "index" || t[4] != "sign" || t[6] != "first") {
      r.fail("malformed record header");
    }
    MoveRecord rec;
    try {
      rec.kind = move_kind_from_string(t[1]);
    } catch (const Error& e) {
      r.fail(e.what());
    }
    rec.index = r.integer(t[3]);
    rec.sign = r.integer(t[5]);
    rec.first_occurrence = r.integer(t[7]) != 0;
    const auto iv = r.expect("interval", 6);
    rec.t_begin = r.rational(iv[1]);
    rec.t_end = r.rational(iv[2]);
    rec.before = r.integer(iv[4]);
    rec.after = r.integer(iv[5]);
    t = r.next();
    if (!t.empty() && t[0] == "eta") {
      if (t.size() != 7) r.fail("malformed eta line");
      rec.eta = EtaSpec{r.integer(t[1]), Angle(r.rational(t[2])), r.rational(t[3]), r.rational(t[4]),
                        r.integer(t[5]), r.integer(t[6])};
      t = r.next();
    }
    if (t.empty() || t[0] != "effects") r.fail("expected 'effects'");
    rec.effects = FiberEffect{{}, {}};
    std::size_t i = 1;
    for (; i < t.size() && t[i] != "|"; ++i) rec.effects.cuts.emplace_back(r.rational(t[i]));
    if (i == t.size()) r.fail("effects line lacks '|'");
    for (++i; i < t.size(); ++i) {
      try {
        rec.effects.kinds.push_back(effect_kind_from_string(t[i]));
      } catch (const Error& e) {
        r.fail(e.what());
      }
    }
    if (!rec.effects.is_partition()) r.fail("effects do not partition the circle");
    m.records.push_back(rec);
    t = r.next();
  }

  if (t.size() != 2 || t[0] != "slices") r.fail("expected 'slices'");
  const int slices = r.integer(t[1]);
  for (int k = 0; k < slices; ++k) m.slices.push_back(read_slice(r, r.next()));
  if (!r.next().empty()) r.fail("trailing content after the last slice");
  return m;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace fibermovie
