#include "grouptype/grp_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "grouptype/errors.hpp"

namespace grouptype {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && is_space(s[pos])) ++pos;
    const auto start = pos;
    while (pos < s.size() && !is_space(s[pos])) ++pos;
    if (pos > start) words.push_back(s.substr(start, pos - start));
  }
  return words;
}

class LineParser {
 public:
  LineParser(const std::string& source, int line) : source_(source), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, what); }

  std::uint64_t positive(std::string_view word, const char* what) const {
    std::uint64_t value = 0;
    const auto* end = word.data() + word.size();
    const auto [ptr, ec] = std::from_chars(word.data(), end, value);
    if (ec != std::errc() || ptr != end || value == 0) {
      fail(std::string("expected a positive integer for ") + what + ", got '" + std::string(word) + "'");
    }
    return value;
  }

  // "(1 2 3)(5 6)" -> cycles; "()" -> empty list.
  std::vector<std::vector<std::uint32_t>> cycles(std::string_view body, std::uint32_t degree) const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<char> used(degree + 1, 0);
    std::size_t pos = 0;
    bool saw_empty = false;
    auto skip = [&] {
      while (pos < body.size() && is_space(body[pos])) ++pos;
    };
    skip();
    if (pos == body.size()) fail("gen line has no cycles");
    while (pos < body.size()) {
      if (body[pos] != '(') fail("expected '(' in cycle list");
      const auto close = body.find(')', pos);
      if (close == std::string_view::npos) fail("unterminated cycle");
      const auto inner = body.substr(pos + 1, close - pos - 1);
      if (inner.find('(') != std::string_view::npos) fail("nested '(' in cycle");
      std::vector<std::uint32_t> cycle;
      for (auto word : split_words(inner)) {
        const auto point = positive(word, "a point");
        if (point > degree) {
          fail("point " + std::to_string(point) + " exceeds degree " + std::to_string(degree));
        }
        if (used[point]) fail("point " + std::to_string(point) + " repeated");
        used[point] = 1;
        cycle.push_back(static_cast<std::uint32_t>(point));
      }
      if (cycle.empty()) {
        saw_empty = true;
      } else if (cycle.size() == 1) {
        fail("cycle of length 1; fixed points are omitted");
      } else {
        out.push_back(std::move(cycle));
      }
      pos = close + 1;
      skip();
    }
    if (saw_empty && !out.empty()) fail("'()' mixed with nontrivial cycles");
    return out;
  }

 private:
  const std::string& source_;
  int line_;
};

}  // namespace

GrpFile parse_grp(std::string_view text, const std::string& source) {
  GrpFile file;
  bool have_degree = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }

    LineParser p(source, line_no);
    const auto space = line.find_first_of(" \t");
    const auto keyword = line.substr(0, space);
    const auto rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));

    if (keyword == "smallgroup") {
      if (file.id) p.fail("duplicate smallgroup header");
      if (have_degree || !file.generators.empty()) p.fail("smallgroup header must precede degree and gen lines");
      const auto words = split_words(rest);
      if (words.size() != 2) p.fail("smallgroup expects two integers");
      file.id = GroupId{p.positive(words[0], "the group order"), p.positive(words[1], "the group index")};
    } else if (keyword == "degree") {
      if (have_degree) p.fail("duplicate degree line");
      const auto words = split_words(rest);
      if (words.size() != 1) p.fail("degree expects one integer");
      const auto d = p.positive(words[0], "the degree");
      if (d > 1'000'000) p.fail("degree " + std::to_string(d) + " is unreasonably large");
      file.degree = static_cast<std::uint32_t>(d);
      have_degree = true;
    } else if (keyword == "gen") {
      if (!have_degree) p.fail("gen line before degree line");
      auto cycles = p.cycles(rest, file.degree);
      if (cycles.empty()) {
        file.warnings.push_back(source + ":" + std::to_string(line_no) +
                                ": identity generator 'gen ()' ignored");
        continue;
      }
      file.generators.push_back(Permutation::from_cycles(file.degree, cycles));
    } else {
      p.fail("unknown keyword '" + std::string(keyword) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_degree) throw ParseError(source, line_no, "missing degree line");
  if (file.generators.empty() && file.warnings.empty()) {
    throw ParseError(source, line_no, "no gen lines");
  }
  return file;
}

GrpFile read_grp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_grp(buffer.str(), path.string());
}

std::string format_grp(const GrpFile& file) {
  std::ostringstream out;
  if (file.id) out << "smallgroup " << file.id->order << ' ' << file.id->index << '\n';
  out << "degree " << file.degree << '\n';
  for (const auto& g : file.generators) out << "gen " << g.to_string() << '\n';
  return out.str();
}

FiniteGroup group_from_grp(const GrpFile& file, std::string label, std::uint64_t cap) {
  std::vector<Element> gens;
  gens.reserve(file.generators.size());
  for (const auto& g : file.generators) gens.emplace_back(g);
  if (gens.empty()) gens.emplace_back(Permutation::identity(file.degree));
  return enumerate_closure(gens, cap, std::move(label)).with_provenance(file.id);
}

FiniteGroup from_generator_file(const std::filesystem::path& path, std::uint64_t cap) {
  return group_from_grp(read_grp(path), path.stem().string(), cap);
}

}  // namespace grouptype
