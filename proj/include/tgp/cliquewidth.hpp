#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tgp/core.hpp"

namespace tgp {

using Label = int;

enum class CWKind { Intro, Union, JoinT, Join, Relabel };

struct CWNode {
  CWKind kind = CWKind::Intro;
  std::string name;  // Intro
  Label a = 0;       // Intro: label; JoinT/Join: i; Relabel: from
  Label b = 0;       // JoinT/Join: j; Relabel: to
  TimeSet times;     // JoinT
  int left = -1;     // operand (Union: left operand)
  int right = -1;    // Union: right operand
};

// Expression tree stored as an arena; a node's operands always precede it.
class CWExpression {
 public:
  explicit CWExpression(bool temporal = true) : temporal_(temporal) {}

  int intro(std::string name, Label l);
  int unite(int left, int right);
  int join_t(Label i, Label j, TimeSet times, int operand);
  int join(Label i, Label j, int operand);
  int relabel(Label from, Label to, int operand);

  bool temporal() const { return temporal_; }
  const std::vector<CWNode>& nodes() const { return nodes_; }
  const CWNode& node(int i) const { return nodes_.at(i); }
  int root() const { return root_; }
  void set_root(int r) { root_ = r; }
  bool empty() const { return root_ < 0; }

  // Distinct labels mentioned by nodes reachable from the root.
  int width() const;
  std::vector<Label> labels() const;

  // Checks tree shape, operand ordering, i != j, kind/flag consistency and
  // nonempty JoinT time sets. Throws InputError on the first violation.
  void validate() const;

 private:
  int push(CWNode n);
  bool temporal_;
  std::vector<CWNode> nodes_;
  int root_ = -1;
};

struct LabeledGraph {
  TemporalGraph graph;  // static expressions mark each edge with time 1
  std::map<std::string, Label> label;
};

LabeledGraph evaluate_expression(const CWExpression& e);
bool verify_expression(const CWExpression& e, const TemporalGraph& g);
// Static form: compares with the underlying graph of the evaluation.
bool verify_static_expression(const CWExpression& e, const StaticGraph& g);

// (intro a 1) (union X Y) (joint 1 2 (1 3) X) (join 1 2 X) (relabel 2 1 X)
CWExpression parse_expression(std::string_view text);
std::string format_expression(const CWExpression& e);

// Returns the centre of a star (smaller name when n == 2), or nullopt.
std::optional<int> find_star_centre(const TemporalGraph& g);
CWExpression star_expression(const TemporalGraph& star);

StaticGraph association_graph(const TemporalGraph& g, int delta);

struct MixedJoin {
  int node = -1;  // offending JoinT node index in the input expression
  std::vector<VertexPair> inside;   // added pairs present in the association graph
  std::vector<VertexPair> outside;  // added pairs absent from it
};

using TransferResult = std::variant<CWExpression, MixedJoin>;
TransferResult transfer_expression(const CWExpression& e, int delta);

struct CliqueResult {
  int size = 0;
  std::vector<std::string> witness;  // sorted vertex names
};

CliqueResult max_clique_cw(const CWExpression& e, int max_width = 8);
// Exact branch-and-bound maximum clique; witness as sorted vertex indices.
std::vector<int> max_clique_exact(const StaticGraph& g);

struct DeltaCliqueResult {
  bool yes = false;
  int clique_size = 0;
  std::vector<std::string> witness;
  std::string method;  // "expression-dp", "transfer-dp" or "branch-and-bound"
};

DeltaCliqueResult solve_temporal_delta_clique(const TemporalGraph& g, int delta, int h,
                                              const std::optional<CWExpression>& e = std::nullopt);

}  // namespace tgp
