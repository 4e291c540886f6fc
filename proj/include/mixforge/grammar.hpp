#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mixforge/words.hpp"

namespace mixforge {

/// One block of a rule arrangement: a body-component variable (child index
/// plus component index) or a literal terminal letter.
struct Token {
  enum class Kind : std::uint8_t { Var, Lit };
  Kind kind = Kind::Var;
  std::uint8_t child = 0;
  std::uint8_t comp = 0;
  Letter lit{};

  bool operator==(const Token&) const = default;
  std::string name() const;

  static Token var(int child, int comp);
  static Token literal(Letter l);
};

bool operator<(const Token& a, const Token& b);

/// A distribution of blocks over the head components: `tokens` in reading
/// order, split into head-arity consecutive groups by the cumulative indices
/// in `splits`. Blocks are never split and every variable appears exactly
/// once.
struct Arrangement {
  std::vector<Token> tokens;
  std::vector<int> splits;

  bool operator==(const Arrangement&) const = default;
  int head_arity() const { return static_cast<int>(splits.size()) + 1; }
  int group_begin(int comp) const { return comp == 0 ? 0 : splits[comp - 1]; }
  int group_end(int comp) const {
    return comp == head_arity() - 1 ? static_cast<int>(tokens.size())
                                    : splits[comp];
  }
};

bool operator<(const Arrangement& a, const Arrangement& b);

enum class RuleKind { Start, PairInsert, Merge, Axiom };

struct RuleFamily {
  RuleKind kind = RuleKind::Axiom;
  int axis = 0;  // PairInsert only
  int head_arity = 1;
  std::vector<int> child_arities;
  std::vector<Arrangement> arrangements;  // canonical order, sorted
};

struct Grammar {
  int n = 2;
  int arity = 2;  // rho of the tuple nonterminal (Inv or Circ)
  RuleFamily start;
  std::vector<RuleFamily> pair_inserts;  // indexed by axis - 1
  RuleFamily merge;
  RuleFamily axiom;
};

/// The grammar for O2: Start, PairInsert on each axis, Merge and the axiom
/// Inv(eps, eps), with every arrangement of the block multisets.
Grammar grammar_o2();

/// The arity-3 grammar for O3 over {a,A,b,B,c,C} with axiom Circ(eps,eps,eps).
Grammar grammar_o3();

/// All distinct arrangements of the family's block multiset: every
/// permutation of the blocks, every split into head-arity consecutive
/// groups, in canonical (token order, then splits) order.
std::vector<Arrangement> enumerate_arrangements(const RuleFamily& family);

using WordTuple = std::vector<std::string>;

/// Substitutes child component words into the arrangement. Throws
/// ArityMismatch when a variable references a missing child or component.
WordTuple apply_arrangement(const Arrangement& arr,
                            const std::vector<WordTuple>& child_yields);

/// True iff the substitution reproduces head_yield exactly.
bool check_step(const WordTuple& head_yield, const Arrangement& arr,
                const std::vector<WordTuple>& child_yields);

struct DerivationTree {
  RuleKind rule = RuleKind::Axiom;
  int axis = 0;
  Arrangement arrangement;
  std::vector<DerivationTree> children;
  WordTuple yield;
};

struct VerifyResult {
  bool ok = true;
  std::string node_path;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Checks that every node uses an arrangement of the grammar's corresponding
/// family and that check_step holds; reports the first failing node path.
VerifyResult verify_tree(const DerivationTree& tree, const Grammar& g);

int count_pair_insert_nodes(const DerivationTree& tree);

/// Bottom-up closure of the tuple nonterminal: starts from the axiom tuple,
/// applies PairInsert and Merge while total length stays within the bound,
/// and returns the fixed point. Throws ResourceBound when the bound exceeds
/// the cap.
std::set<WordTuple> enumerate_derivable(const Grammar& g, int max_total_length,
                                        int cap = 16);

std::string tree_to_json(const DerivationTree& tree);
DerivationTree tree_from_json(const std::string& text);

}  // namespace mixforge
