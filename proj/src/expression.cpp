#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

#include "expression_internal.hpp"
#include "tgp/cliquewidth.hpp"

namespace tgp {

int CWExpression::push(CWNode n) {
  nodes_.push_back(std::move(n));
  root_ = static_cast<int>(nodes_.size()) - 1;
  return root_;
}

int CWExpression::intro(std::string name, Label l) {
  CWNode n;
  n.kind = CWKind::Intro;
  n.name = std::move(name);
  n.a = l;
  return push(std::move(n));
}

int CWExpression::unite(int left, int right) {
  CWNode n;
  n.kind = CWKind::Union;
  n.left = left;
  n.right = right;
  return push(std::move(n));
}

int CWExpression::join_t(Label i, Label j, TimeSet times, int operand) {
  CWNode n;
  n.kind = CWKind::JoinT;
  n.a = i;
  n.b = j;
  n.times = std::move(times);
  n.left = operand;
  return push(std::move(n));
}

int CWExpression::join(Label i, Label j, int operand) {
  CWNode n;
  n.kind = CWKind::Join;
  n.a = i;
  n.b = j;
  n.left = operand;
  return push(std::move(n));
}

int CWExpression::relabel(Label from, Label to, int operand) {
  CWNode n;
  n.kind = CWKind::Relabel;
  n.a = from;
  n.b = to;
  n.left = operand;
  return push(std::move(n));
}

namespace {

std::vector<int> reachable_nodes(const CWExpression& e) {
  std::vector<int> out;
  if (e.empty()) return out;
  std::vector<int> stack{e.root()};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    const auto& n = e.node(x);
    if (n.left >= 0) stack.push_back(n.left);
    if (n.right >= 0) stack.push_back(n.right);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Label> CWExpression::labels() const {
  std::set<Label> ls;
  for (int x : reachable_nodes(*this)) {
    const auto& n = nodes_[x];
    switch (n.kind) {
      case CWKind::Intro: ls.insert(n.a); break;
      case CWKind::Union: break;
      default: ls.insert(n.a); ls.insert(n.b);
    }
  }
  return {ls.begin(), ls.end()};
}

int CWExpression::width() const { return static_cast<int>(labels().size()); }

void CWExpression::validate() const {
  if (root_ < 0 || root_ >= static_cast<int>(nodes_.size())) throw InputError("expression has no root");
  std::vector<int> uses(nodes_.size(), 0);
  std::set<std::string> names;
  for (int x : reachable_nodes(*this)) {
    const auto& n = nodes_[x];
    for (int c : {n.left, n.right}) {
      if (c < 0) continue;
      if (c >= x) throw InputError("expression operand does not precede its operator");
      if (uses[c]++) throw InputError("expression node used twice");
    }
    switch (n.kind) {
      case CWKind::Intro:
        if (n.name.empty()) throw InputError("intro without a vertex name");
        if (!names.insert(n.name).second) throw InputError("vertex '" + n.name + "' introduced twice");
        break;
      case CWKind::Union:
        if (n.left < 0 || n.right < 0) throw InputError("union needs two operands");
        break;
      case CWKind::JoinT:
        if (!temporal_) throw InputError("timed join in a static expression");
        if (n.times.empty()) throw InputError("empty time set in timed join");
        for (size_t i = 0; i < n.times.size(); ++i)
          if (n.times[i] < 1 || (i > 0 && n.times[i] <= n.times[i - 1]))
            throw InputError("join time set must be strictly increasing and >= 1");
        [[fallthrough]];
      case CWKind::Join:
        if (n.kind == CWKind::Join && temporal_) throw InputError("static join in a temporal expression");
        [[fallthrough]];
      case CWKind::Relabel:
        if (n.a == n.b) throw InputError("join/relabel requires distinct labels");
        if (n.left < 0) throw InputError("missing operand");
        break;
    }
  }
}

namespace detail {

// Evaluates every reachable node. When `added` is non-null it receives, per
// JoinT/Join node index, the vertex-name pairs that node joined.
Part evaluate_parts(const CWExpression& e,
                    std::map<int, std::vector<std::pair<std::string, std::string>>>* added) {
  e.validate();
  auto order = reachable_nodes(e);
  std::map<int, Part> parts;
  for (int x : order) {
    const auto& n = e.node(x);
    Part cur;
    switch (n.kind) {
      case CWKind::Intro:
        cur.names.push_back(n.name);
        cur.labels.push_back(n.a);
        break;
      case CWKind::Union: {
        Part l = std::move(parts.at(n.left));
        Part r = std::move(parts.at(n.right));
        parts.erase(n.left);
        parts.erase(n.right);
        std::set<std::string> seen(l.names.begin(), l.names.end());
        for (const auto& nm : r.names)
          if (seen.count(nm)) throw InputError("duplicate vertex name '" + nm + "' at union");
        cur = std::move(l);
        cur.names.insert(cur.names.end(), r.names.begin(), r.names.end());
        cur.labels.insert(cur.labels.end(), r.labels.begin(), r.labels.end());
        cur.edges.merge(r.edges);
        break;
      }
      case CWKind::JoinT:
      case CWKind::Join: {
        cur = std::move(parts.at(n.left));
        parts.erase(n.left);
        TimeSet ts = n.kind == CWKind::JoinT ? n.times : TimeSet{1};
        std::vector<std::pair<std::string, std::string>> pairs;
        for (size_t p = 0; p < cur.names.size(); ++p) {
          if (cur.labels[p] != n.a) continue;
          for (size_t q = 0; q < cur.names.size(); ++q) {
            if (cur.labels[q] != n.b) continue;
            auto key = std::minmax(cur.names[p], cur.names[q]);
            std::pair<std::string, std::string> k{key.first, key.second};
            auto& slot = cur.edges[k];
            slot = union_times(slot, ts);
            pairs.push_back(k);
          }
        }
        if (added) {
          std::sort(pairs.begin(), pairs.end());
          (*added)[x] = std::move(pairs);
        }
        break;
      }
      case CWKind::Relabel:
        cur = std::move(parts.at(n.left));
        parts.erase(n.left);
        for (auto& l : cur.labels)
          if (l == n.a) l = n.b;
        break;
    }
    parts[x] = std::move(cur);
  }
  return std::move(parts.at(e.root()));
}

}  // namespace detail

LabeledGraph evaluate_expression(const CWExpression& e) {
  auto part = detail::evaluate_parts(e, nullptr);
  LabeledGraph lg{TemporalGraph(part.names), {}};
  for (size_t i = 0; i < part.names.size(); ++i) lg.label[part.names[i]] = part.labels[i];
  for (const auto& [k, ts] : part.edges) lg.graph.add_times(k.first, k.second, ts);
  return lg;
}

bool verify_expression(const CWExpression& e, const TemporalGraph& g) {
  return evaluate_expression(e).graph == g;
}

bool verify_static_expression(const CWExpression& e, const StaticGraph& g) {
  return underlying_graph(evaluate_expression(e).graph) == g;
}

namespace {

class SexpReader {
 public:
  explicit SexpReader(std::string_view s) : s_(s) {}

  CWExpression read() {
    scan_kinds();
    CWExpression e(!has_static_);
    e.set_root(read_node(e));
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    e.validate();
    return e;
  }

 private:
  void scan_kinds() {
    // Decide the static/temporal flag up front from the operator names.
    bool has_timed = false;
    std::string_view s = s_;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] != '(') continue;
      size_t j = i + 1;
      while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      size_t k = j;
      while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k])) && s[k] != '(' && s[k] != ')') ++k;
      auto word = s.substr(j, k - j);
      if (word == "join") has_static_ = true;
      if (word == "joint") has_timed = true;
    }
    if (has_static_ && has_timed) fail("expression mixes join and joint");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("expression parse error: " + msg + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  std::string atom() {
    skip_ws();
    size_t st = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')')
      ++pos_;
    if (st == pos_) fail("expected atom");
    return std::string(s_.substr(st, pos_ - st));
  }

  int integer() {
    auto a = atom();
    int v = 0;
    auto [p, ec] = std::from_chars(a.data(), a.data() + a.size(), v);
    if (ec != std::errc() || p != a.data() + a.size()) fail("expected integer, got '" + a + "'");
    return v;
  }

  int read_node(CWExpression& e) {
    expect('(');
    auto op = atom();
    int id = -1;
    if (op == "intro") {
      auto name = atom();
      int l = integer();
      id = e.intro(name, l);
    } else if (op == "union") {
      int l = read_node(e);
      int r = read_node(e);
      id = e.unite(l, r);
    } else if (op == "joint") {
      int i = integer(), j = integer();
      expect('(');
      TimeSet ts;
      while (!peek(')')) ts.push_back(integer());
      expect(')');
      int c = read_node(e);
      id = e.join_t(i, j, ts, c);
    } else if (op == "join") {
      int i = integer(), j = integer();
      int c = read_node(e);
      id = e.join(i, j, c);
    } else if (op == "relabel") {
      int i = integer(), j = integer();
      int c = read_node(e);
      id = e.relabel(i, j, c);
    } else {
      fail("unknown operator '" + op + "'");
    }
    expect(')');
    return id;
  }

  std::string_view s_;
  size_t pos_ = 0;
  bool has_static_ = false;
};

void format_node(const CWExpression& e, int x, std::ostringstream& os) {
  const auto& n = e.node(x);
  switch (n.kind) {
    case CWKind::Intro:
      os << "(intro " << n.name << ' ' << n.a << ')';
      break;
    case CWKind::Union:
      os << "(union ";
      format_node(e, n.left, os);
      os << ' ';
      format_node(e, n.right, os);
      os << ')';
      break;
    case CWKind::JoinT:
      os << "(joint " << n.a << ' ' << n.b << " (";
      for (size_t i = 0; i < n.times.size(); ++i) os << (i ? " " : "") << n.times[i];
      os << ") ";
      format_node(e, n.left, os);
      os << ')';
      break;
    case CWKind::Join:
      os << "(join " << n.a << ' ' << n.b << ' ';
      format_node(e, n.left, os);
      os << ')';
      break;
    case CWKind::Relabel:
      os << "(relabel " << n.a << ' ' << n.b << ' ';
      format_node(e, n.left, os);
      os << ')';
      break;
  }
}

}  // namespace

CWExpression parse_expression(std::string_view text) { return SexpReader(text).read(); }

std::string format_expression(const CWExpression& e) {
  if (e.empty()) return "";
  std::ostringstream os;
  format_node(e, e.root(), os);
  return os.str();
}

std::optional<int> find_star_centre(const TemporalGraph& g) {
  int n = g.n();
  if (n == 0) return std::nullopt;
  if (n == 1) return 0;
  if (g.num_edges() != n - 1) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (static_cast<int>(g.neighbours(v).size()) == n - 1) return v;
  return std::nullopt;
}

CWExpression star_expression(const TemporalGraph& star) {
  auto centre = find_star_centre(star);
  if (!centre) throw InputError("input is not a star");
  int c = *centre;
  CWExpression e(true);
  int x = e.intro(star.name(c), 1);
  bool first = true;
  for (int l = 0; l < star.n(); ++l) {
    if (l == c) continue;
    if (first) {
      x = e.join_t(1, 2, star.times(c, l), e.unite(x, e.intro(star.name(l), 2)));
      first = false;
    } else {
      x = e.join_t(1, 3, star.times(c, l), e.unite(x, e.intro(star.name(l), 3)));
      x = e.relabel(3, 2, x);
    }
  }
  return e;
}

}  // namespace tgp
