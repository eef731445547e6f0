#pragma once

// The .tpg theory format: objects, timed generators, named diagram
// expressions and named tilings.
//
//   obj NAME+
//   gen NAME : OBJ* -> OBJ* @ NAT
//   diag NAME = EXPR
//   tiling NAME { ITEM (; ITEM)* }
//
//   EXPR ::= NAME | id OBJ* | swap OBJ OBJ | wait OBJ | unit
//          | EXPR ; EXPR | EXPR * EXPR | up(EXPR, NAT) | (EXPR)
//   ITEM ::= tile NAME : GEN rect X0..X1 x Y0..Y1
//          | braid at COL lane LANE (OBJ, OBJ)
//          | box W x H
//
// `;` binds looser than `*`; both associate to the left. GEN is a generator
// name or `wait OBJ`. Newlines end declarations outside braces and
// parentheses; `#` starts a comment.

#include <optional>
#include <string>
#include <vector>

#include "timecat/graded.hpp"
#include "timecat/signature.hpp"
#include "timecat/tiling.hpp"

namespace timecat {

struct SourceLoc {
  int line = 0;
  int col = 0;
};

struct Expr {
  enum class Kind { kName, kId, kSwap, kWait, kUnit, kSeq, kPar, kUp };
  Kind kind = Kind::kUnit;
  std::string name;       // kName
  Objects objects;        // kId, kSwap, kWait
  Grade grade;            // kUp
  std::vector<Expr> args; // kSeq, kPar: two; kUp: one
  SourceLoc loc;

  /// Structural; ignores locations.
  bool operator==(const Expr& o) const;
  std::string str() const;
};

struct DiagDecl {
  std::string name;
  Expr expr;
  Diagram diagram = Diagram::unit_i();
  SourceLoc loc;

  bool operator==(const DiagDecl& o) const { return name == o.name && expr == o.expr; }
};

struct TileDecl {
  bool braid = false;
  std::string name;  // tiles only
  std::string gen;   // generator name, or the object of a wait
  bool wait = false;
  Rect rect;         // tiles only
  std::int64_t col = 0, lane = 0;  // braids only
  std::string a, b;                // braids only
  SourceLoc loc;

  bool operator==(const TileDecl& o) const;
};

struct TilingDecl {
  std::string name;
  std::optional<std::pair<std::int64_t, std::int64_t>> box;
  std::vector<TileDecl> items;
  SourceLoc loc;

  /// Box defaults to the extent of the tiles.
  Tiling tiling() const;
  bool operator==(const TilingDecl& o) const { return name == o.name && box == o.box && items == o.items; }
};

struct TheoryFile {
  TimedPolygraph polygraph;
  std::vector<DiagDecl> diagrams;
  std::vector<TilingDecl> tilings;

  const DiagDecl* find_diagram(const std::string& name) const;
  const TilingDecl* find_tiling(const std::string& name) const;

  bool operator==(const TheoryFile& o) const;
};

/// Throws Error with kSyntax, kUnknownName, kDuplicateName, kArity,
/// kBoundaryMismatch or kInvalidRegrade; messages start with
/// "line L, column C:".
TheoryFile parse_theory(const std::string& text);
/// Reads and parses a file; throws Error(kInvalidArgument) if unreadable.
TheoryFile load_theory(const std::string& path);
/// Canonical text; parse_theory(print_theory(t)) == t.
std::string print_theory(const TheoryFile& t);

}  // namespace timecat
