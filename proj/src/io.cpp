#include "ngpoly/io.hpp"

#include <fstream>
#include <sstream>

namespace ngpoly {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

class Reader {
 public:
  Reader(std::istream& in, std::string source) : source_(std::move(source)) {
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
      ++number;
      if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
      std::istringstream words(text);
      Line line{number, {}};
      for (std::string w; words >> w;) line.tokens.push_back(w);
      if (!line.tokens.empty()) lines_.push_back(std::move(line));
    }
    last_line_ = number;
  }

  bool done() const { return next_ == lines_.size(); }
  const Line& peek() const { return lines_.at(next_); }
  const Line& take() {
    if (done()) fail(last_line_, "unexpected end of file");
    return lines_[next_++];
  }

  [[noreturn]] void fail(std::size_t line, const std::string& message) const {
    throw Error(source_ + ":" + std::to_string(line) + ": " + message);
  }
  [[noreturn]] void fail(const Line& line, const std::string& message) const {
    fail(line.number, message);
  }

  std::size_t to_count(const Line& line, const std::string& token, const std::string& what) const {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      if (token.empty() || token[0] == '-' || token[0] == '+') throw std::invalid_argument(token);
      value = std::stoull(token, &used);
    } catch (const std::exception&) {
      fail(line, "malformed " + what + " '" + token + "'");
    }
    if (used != token.size()) fail(line, "malformed " + what + " '" + token + "'");
    return static_cast<std::size_t>(value);
  }

  Rational to_rational(const Line& line, const std::string& token) const {
    try {
      return parse_rational(token);
    } catch (const Error& e) {
      fail(line, e.what());
    }
  }

  PointQ row(const Line& line, std::size_t d) const {
    if (line.tokens.size() != d)
      fail(line, "expected " + std::to_string(d) + " entries, found " + std::to_string(line.tokens.size()));
    PointQ p;
    for (const auto& t : line.tokens) p.push_back(to_rational(line, t));
    return p;
  }

  // Header "<tag> <n> [extra]" on the first line.
  const Line& header(const std::string& tag, std::size_t extra) {
    if (done()) fail(last_line_, "empty file");
    const Line& line = take();
    if (line.tokens[0] != tag || line.tokens.size() != 2 + extra)
      fail(line, "expected header '" + tag + (extra ? " <n> <kind>'" : " <n>'"));
    return line;
  }

  EdgeList pairs(std::size_t n, const std::string& what) {
    EdgeList out;
    while (!done()) {
      const Line& line = take();
      if (line.tokens.size() != 2) fail(line, "expected two " + what + " per line");
      std::size_t a = to_count(line, line.tokens[0], "index");
      std::size_t b = to_count(line, line.tokens[1], "index");
      if (a >= n || b >= n) fail(line, "index out of range 0.." + std::to_string(n - 1));
      if (a == b) fail(line, what == "vertices" ? "loop at vertex " + std::to_string(a)
                                                : "element " + std::to_string(a) + " below itself");
      out.push_back({a, b});
    }
    return out;
  }

 private:
  std::string source_;
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t last_line_ = 0;
};

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

}  // namespace

PolytopeInput parse_polytope(std::istream& in, const std::string& source) {
  Reader r(in, source);
  PolytopeInput out;
  if (!r.done() && r.peek().tokens[0] == "NAME") {
    const Line& line = r.take();
    if (line.tokens.size() < 2) r.fail(line, "NAME needs a value");
    std::string name = line.tokens[1];
    for (std::size_t i = 2; i < line.tokens.size(); ++i) name += " " + line.tokens[i];
    out.name = name;
  }
  const Line& head = r.header("V", 0);
  out.ambient_dim = r.to_count(head, head.tokens[1], "dimension");
  if (out.ambient_dim == 0) r.fail(head, "dimension must be positive");

  std::vector<std::size_t> numbers;
  while (!r.done() && r.peek().tokens[0] != "LATTICE") {
    const Line& line = r.take();
    out.points.push_back(r.row(line, out.ambient_dim));
    numbers.push_back(line.number);
  }
  if (out.points.empty()) r.fail(head, "no vertices");

  if (!r.done()) {
    const Line& tag = r.take();
    if (tag.tokens.size() != 1) r.fail(tag, "LATTICE takes no arguments");
    std::vector<PointQ> rows;
    for (std::size_t i = 0; i < out.ambient_dim; ++i) rows.push_back(r.row(r.take(), out.ambient_dim));
    if (!r.done()) r.fail(r.peek(), "trailing content after LATTICE block");
    try {
      LatticeBasis basis(rows);
      out.lattice_points = lattice_normalize(out.points, basis);
    } catch (const Error& e) {
      r.fail(tag, e.what());
    }
    out.basis = std::move(rows);
  } else {
    for (std::size_t i = 0; i < out.points.size(); ++i) {
      if (!is_integral(out.points[i]))
        r.fail(numbers[i], "vertex is not integral; add a LATTICE block for a finer lattice");
      out.lattice_points.push_back(to_lattice(out.points[i]));
    }
  }
  out.projection = affine_lattice_projection(out.lattice_points);
  out.polytope = Polytope::from_points(out.projection.points, out.projection.map.dim);
  return out;
}

PolytopeInput read_polytope_file(const std::string& path) {
  auto in = open(path);
  return parse_polytope(in, path);
}

GraphInput parse_graph(std::istream& in, const std::string& source) {
  Reader r(in, source);
  const Line& head = r.header("G", 1);
  std::size_t n = r.to_count(head, head.tokens[1], "vertex count");
  if (n == 0) r.fail(head, "a graph needs at least one vertex");
  GraphInput out;
  if (head.tokens[2] == "simple")
    out.simple = true;
  else if (head.tokens[2] == "multi")
    out.simple = false;
  else
    r.fail(head, "graph kind must be 'simple' or 'multi'");
  EdgeList edges = r.pairs(n, "vertices");
  if (out.simple) {
    try {
      out.graph = SimpleGraph(n, edges);
    } catch (const Error& e) {
      r.fail(head, e.what());
    }
  } else {
    out.graph = Multigraph(n, edges);
  }
  return out;
}

SimpleGraph GraphInput::simple_graph() const {
  if (!simple) throw Error("this command needs a simple graph");
  return SimpleGraph(graph.vertex_count(), graph.edges());
}

GraphInput read_graph_file(const std::string& path) {
  auto in = open(path);
  return parse_graph(in, path);
}

Poset parse_poset(std::istream& in, const std::string& source) {
  Reader r(in, source);
  const Line& head = r.header("P", 0);
  std::size_t n = r.to_count(head, head.tokens[1], "size");
  if (n == 0) r.fail(head, "a poset needs at least one element");
  EdgeList relations = r.pairs(n, "elements");
  try {
    return Poset(n, relations);
  } catch (const Error& e) {
    r.fail(head, e.what());
  }
}

Poset read_poset_file(const std::string& path) {
  auto in = open(path);
  return parse_poset(in, path);
}

std::vector<Facet> parse_heights(std::istream& in, const std::string& source) {
  Reader r(in, source);
  const Line& head = r.header("H", 0);
  std::size_t d = r.to_count(head, head.tokens[1], "dimension");
  if (d == 0) r.fail(head, "dimension must be positive");
  std::vector<Facet> out;
  while (!r.done()) {
    const Line& line = r.take();
    PointQ row = r.row(line, d + 1);
    Facet f;
    for (std::size_t i = 0; i < d; ++i) {
      if (!is_integral(row[i])) r.fail(line, "normal entries must be integers");
      f.normal.push_back(row[i].get_num());
    }
    f.height = row[d];
    out.push_back(std::move(f));
  }
  if (out.empty()) r.fail(head, "no inequalities");
  return out;
}

std::vector<Facet> read_heights_file(const std::string& path) {
  auto in = open(path);
  return parse_heights(in, path);
}

}  // namespace ngpoly
