#include "divlab/io.hpp"

#include <fstream>
#include <sstream>

namespace divlab {

namespace {

struct Token {
  std::string text;
  int line, column;
};

struct Line {
  std::vector<Token> tokens;
  int number;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  int number = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    Line line{{}, number};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (raw[i] == '#') break;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({raw.substr(start, i - start), number, static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

Rat parse_rational(const Token& t) {
  auto r = Rat::parse(t.text);
  if (!r) throw ParseError("malformed rational '" + t.text + "'", t.line, t.column);
  return *r;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}
  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const {
    if (done()) throw ParseError("unexpected end of file", last_line_ + 1, 1);
    return lines_[pos_];
  }
  Line next() {
    Line l = peek();
    last_line_ = l.number;
    ++pos_;
    return l;
  }
  int last_line() const { return last_line_; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  int last_line_ = 0;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(msg, t.line, t.column);
}

GroundSet parse_ground_line(const Line& line) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) labels.push_back(line.tokens[i].text);
  if (labels.empty()) fail(line.tokens[0], "GROUND needs at least one label");
  try {
    return GroundSet(std::move(labels));
  } catch (const std::invalid_argument& e) {
    fail(line.tokens[0], e.what());
  }
}

// Parses one diversity body. Stops before END tokens (inside glue blocks).
FiniteDiversity parse_body(Cursor& cur) {
  std::optional<GroundSet> ground;
  while (!cur.done()) {
    const Line& line = cur.peek();
    const std::string& head = line.tokens[0].text;
    if (head == "END") break;

    if (head == "GROUND") {
      if (ground) fail(line.tokens[0], "duplicate GROUND");
      ground = parse_ground_line(cur.next());
      continue;
    }

    if (head == "SET") {
      if (!ground) fail(line.tokens[0], "GROUND must precede SET lines");
      SetFunction table(*ground);
      std::vector<bool> given(table.table_size(), false);
      while (!cur.done() && cur.peek().tokens[0].text == "SET") {
        Line l = cur.next();
        if (l.tokens.size() != 4 || l.tokens[2].text != "=")
          fail(l.tokens[0], "expected: SET {a,b} = p/q");
        Mask m;
        try {
          m = ground->parse_subset(l.tokens[1].text);
        } catch (const std::invalid_argument& e) {
          fail(l.tokens[1], e.what());
        }
        if (m == 0) fail(l.tokens[1], "the empty set has no table entry");
        if (given[m]) fail(l.tokens[1], "duplicate entry for " + ground->format_subset(m));
        given[m] = true;
        Rat v = parse_rational(l.tokens[3]);
        try {
          table.set(m, std::move(v));
        } catch (const std::invalid_argument& e) {
          fail(l.tokens[3], e.what());
        }
      }
      const Mask all = ground->all();
      for (Mask m = 1; m <= all && all != 0; ++m) {
        if (popcount(m) >= 2 && !given[m])
          throw ParseError("table is not total: " + ground->format_subset(m) + " unspecified",
                           cur.last_line(), 1);
        if (m == all) break;
      }
      return FiniteDiversity::from_table(std::move(table));
    }

    if (head == "DIAMETER_OF_METRIC") {
      if (!ground) fail(line.tokens[0], "GROUND must precede DIAMETER_OF_METRIC");
      Line directive = cur.next();
      const int n = ground->size();
      std::vector<Rat> dist(static_cast<std::size_t>(n) * n);
      std::vector<bool> given(static_cast<std::size_t>(n) * n, false);
      while (!cur.done() && cur.peek().tokens[0].text == "DIST") {
        Line l = cur.next();
        if (l.tokens.size() != 4) fail(l.tokens[0], "expected: DIST a b p/q");
        int i = ground->index(l.tokens[1].text);
        int j = ground->index(l.tokens[2].text);
        if (i < 0) fail(l.tokens[1], "unknown point '" + l.tokens[1].text + "'");
        if (j < 0) fail(l.tokens[2], "unknown point '" + l.tokens[2].text + "'");
        if (i == j) fail(l.tokens[2], "distance line needs two distinct points");
        if (given[static_cast<std::size_t>(i) * n + j])
          fail(l.tokens[1], "duplicate distance for this pair");
        Rat v = parse_rational(l.tokens[3]);
        dist[static_cast<std::size_t>(i) * n + j] = v;
        dist[static_cast<std::size_t>(j) * n + i] = v;
        given[static_cast<std::size_t>(i) * n + j] = true;
        given[static_cast<std::size_t>(j) * n + i] = true;
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (!given[static_cast<std::size_t>(i) * n + j])
            throw ParseError("distance table is not total: " + ground->label(i) + "," +
                                 ground->label(j) + " unspecified",
                             cur.last_line(), 1);
      try {
        return diameter_diversity(FiniteMetric(*ground, std::move(dist)));
      } catch (const std::invalid_argument& e) {
        fail(directive.tokens[0], e.what());
      }
    }

    if (head == "TREE") {
      Line directive = cur.next();
      std::vector<std::string> nodes;
      std::vector<MetricTree::Edge> edges;
      std::vector<std::pair<std::string, TreePoint>> marks;
      auto node_id = [&](const std::string& label) {
        for (std::size_t i = 0; i < nodes.size(); ++i)
          if (nodes[i] == label) return static_cast<int>(i);
        nodes.push_back(label);
        return static_cast<int>(nodes.size()) - 1;
      };
      while (!cur.done()) {
        const std::string& h = cur.peek().tokens[0].text;
        if (h != "EDGE" && h != "MARK") break;
        Line l = cur.next();
        if (h == "EDGE") {
          if (l.tokens.size() != 4) fail(l.tokens[0], "expected: EDGE u v p/q");
          int u = node_id(l.tokens[1].text), v = node_id(l.tokens[2].text);
          edges.push_back({u, v, parse_rational(l.tokens[3])});
        } else {
          if (l.tokens.size() != 4) fail(l.tokens[0], "expected: MARK label edge offset");
          int e = -1;
          try {
            e = std::stoi(l.tokens[2].text);
          } catch (...) {
            fail(l.tokens[2], "edge id must be an integer index");
          }
          marks.push_back({l.tokens[1].text, TreePoint{e, parse_rational(l.tokens[3])}});
        }
      }
      try {
        MetricTree tree(std::move(nodes), std::move(edges));
        return tree_diversity(tree, marks);
      } catch (const std::invalid_argument& e) {
        fail(directive.tokens[0], e.what());
      }
    }

    if (head == "GLUE") {
      Line directive = cur.next();
      if (directive.tokens.size() != 2) fail(directive.tokens[0], "expected: GLUE hub");
      const std::string hub = directive.tokens[1].text;
      auto sub_block = [&](const char* name) {
        Line begin = cur.next();
        if (begin.tokens.size() != 2 || begin.tokens[0].text != "BEGIN" ||
            begin.tokens[1].text != name)
          fail(begin.tokens[0], std::string("expected: BEGIN ") + name);
        FiniteDiversity d = parse_body(cur);
        Line end = cur.next();
        if (end.tokens.size() != 2 || end.tokens[0].text != "END" || end.tokens[1].text != name)
          fail(end.tokens[0], std::string("expected: END ") + name);
        return d;
      };
      FiniteDiversity left = sub_block("LEFT");
      FiniteDiversity right = sub_block("RIGHT");
      try {
        return glue_diversities(left, right, hub);
      } catch (const std::invalid_argument& e) {
        fail(directive.tokens[0], e.what());
      }
    }

    if (head == "COUNTING") {
      Line l = cur.next();
      if (l.tokens.size() != 2) fail(l.tokens[0], "expected: COUNTING n");
      int n = 0;
      try {
        n = std::stoi(l.tokens[1].text);
      } catch (...) {
        fail(l.tokens[1], "point count must be an integer");
      }
      try {
        return counting_diversity(n, ground ? ground->labels() : std::vector<std::string>{});
      } catch (const std::invalid_argument& e) {
        fail(l.tokens[0], e.what());
      }
    }

    fail(line.tokens[0], "unknown directive '" + head + "'");
  }
  // A bare GROUND is a total explicit table only when nothing needs a value.
  if (ground && ground->size() <= 1) return FiniteDiversity::from_table(SetFunction(*ground));
  if (ground) throw ParseError("table is not total: SET lines missing", cur.last_line() + 1, 1);
  throw ParseError("file has no diversity body", cur.last_line() + 1, 1);
}

}  // namespace

FiniteDiversity parse_diversity(const std::string& text) {
  Cursor cur(tokenize(text));
  if (cur.done()) throw ParseError("empty file", 1, 1);
  Line header = cur.next();
  if (header.tokens.size() != 2 || header.tokens[0].text != "DIVLAB" ||
      header.tokens[1].text != "1")
    fail(header.tokens[0], "expected header: DIVLAB 1");
  FiniteDiversity d = parse_body(cur);
  if (!cur.done()) fail(cur.peek().tokens[0], "trailing content after the diversity body");
  return d;
}

FiniteDiversity load_diversity_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_diversity(buf.str());
}

SelfMap parse_map(const std::string& text, const GroundSet& ground) {
  Cursor cur(tokenize(text));
  std::vector<int> image(ground.size(), -1);
  while (!cur.done()) {
    Line l = cur.next();
    if (l.tokens[0].text != "MAP") fail(l.tokens[0], "expected: MAP a -> b");
    if (l.tokens.size() != 4 || l.tokens[2].text != "->")
      fail(l.tokens[0], "expected: MAP a -> b");
    int from = ground.index(l.tokens[1].text);
    int to = ground.index(l.tokens[3].text);
    if (from < 0) fail(l.tokens[1], "unknown point '" + l.tokens[1].text + "'");
    if (to < 0) fail(l.tokens[3], "unknown point '" + l.tokens[3].text + "'");
    if (image[from] >= 0) fail(l.tokens[1], "duplicate image for '" + l.tokens[1].text + "'");
    image[from] = to;
  }
  for (int i = 0; i < ground.size(); ++i)
    if (image[i] < 0)
      throw ParseError("map is not total: no image for '" + ground.label(i) + "'",
                       cur.last_line() + 1, 1);
  return SelfMap(ground, std::move(image));
}

SelfMap load_map_file(const std::string& path, const GroundSet& ground) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_map(buf.str(), ground);
}

std::string serialize_explicit(const FiniteDiversity& div) {
  std::ostringstream out;
  out << "DIVLAB 1\nGROUND";
  for (const auto& l : div.ground().labels()) out << " " << l;
  out << "\n";
  SetFunction table = div.to_table();
  const int n = div.size();
  for (int card = 2; card <= n; ++card) {
    const Mask all = div.ground().all();
    for (Mask m = 1; m <= all; ++m) {
      if (popcount(m) == card)
        out << "SET " << div.ground().format_subset(m) << " = " << table.value(m).str() << "\n";
      if (m == all) break;
    }
  }
  return out.str();
}

}  // namespace divlab
