#include "timecat/theory.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace timecat {

bool Expr::operator==(const Expr& o) const {
  return kind == o.kind && name == o.name && objects == o.objects && grade == o.grade && args == o.args;
}

std::string Expr::str() const {
  auto list = [](const Objects& objs) {
    std::string out;
    for (const auto& x : objs) out += " " + x;
    return out;
  };
  switch (kind) {
    case Kind::kName:
      return name;
    case Kind::kId:
      return "id" + list(objects);
    case Kind::kSwap:
      return "swap" + list(objects);
    case Kind::kWait:
      return "wait" + list(objects);
    case Kind::kUnit:
      return "unit";
    case Kind::kSeq: {
      const Expr& r = args[1];
      return args[0].str() + " ; " + (r.kind == Kind::kSeq ? "(" + r.str() + ")" : r.str());
    }
    case Kind::kPar: {
      const Expr& l = args[0];
      const Expr& r = args[1];
      const std::string ls = l.kind == Kind::kSeq ? "(" + l.str() + ")" : l.str();
      const std::string rs = r.kind == Kind::kSeq || r.kind == Kind::kPar ? "(" + r.str() + ")" : r.str();
      return ls + " * " + rs;
    }
    case Kind::kUp:
      return "up(" + args[0].str() + ", " + grade.str() + ")";
  }
  return {};
}

bool TileDecl::operator==(const TileDecl& o) const {
  if (braid != o.braid) return false;
  if (braid) return col == o.col && lane == o.lane && a == o.a && b == o.b;
  return name == o.name && gen == o.gen && wait == o.wait && rect == o.rect;
}

Tiling TilingDecl::tiling() const {
  Tiling t;
  for (const auto& item : items) {
    if (item.braid) {
      t.tiles.push_back(make_braid_tile(item.col, item.lane, item.a, item.b));
    } else {
      t.tiles.push_back(make_cell_tile(item.name, item.wait ? wait_cell_name(item.gen) : item.gen, item.rect));
    }
    t.width = std::max(t.width, t.tiles.back().rect.x1);
    t.height = std::max(t.height, t.tiles.back().rect.y1);
  }
  if (box) std::tie(t.width, t.height) = *box;
  return t;
}

const DiagDecl* TheoryFile::find_diagram(const std::string& name) const {
  for (const auto& d : diagrams)
    if (d.name == name) return &d;
  return nullptr;
}

const TilingDecl* TheoryFile::find_tiling(const std::string& name) const {
  for (const auto& t : tilings)
    if (t.name == name) return &t;
  return nullptr;
}

bool TheoryFile::operator==(const TheoryFile& o) const {
  return polygraph.objects == o.polygraph.objects && polygraph.generators == o.polygraph.generators &&
         diagrams == o.diagrams && tilings == o.tilings;
}

namespace {

enum class Tok { kName, kNum, kSym, kNewline, kEnd };

struct Token {
  Tok kind;
  std::string text;
  SourceLoc loc;
};

const std::set<std::string> kReserved{"obj", "gen", "diag", "tiling", "id", "swap", "wait", "unit", "up"};

Error located(ErrorCode code, SourceLoc loc, const std::string& msg) {
  return Error(code, "line " + std::to_string(loc.line) + ", column " + std::to_string(loc.col) + ": " + msg);
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += static_cast<int>(n);
  };
  while (i < text.size()) {
    const char c = text[i];
    const SourceLoc loc{line, col};
    if (c == '\n') {
      out.push_back({Tok::kNewline, "\n", loc});
      ++i, ++line, col = 1;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\''))
        ++j;
      out.push_back({Tok::kName, text.substr(i, j - i), loc});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::kNum, text.substr(i, j - i), loc});
      advance(j - i);
    } else if (text.compare(i, 2, "->") == 0 || text.compare(i, 2, "..") == 0) {
      out.push_back({Tok::kSym, text.substr(i, 2), loc});
      advance(2);
    } else if (std::string(":@=;*(),{}").find(c) != std::string::npos) {
      out.push_back({Tok::kSym, std::string(1, c), loc});
      advance(1);
    } else {
      throw located(ErrorCode::kSyntax, loc, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::kEnd, "", SourceLoc{line, col}});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kNewline:
      return "end of line";
    case Tok::kEnd:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  TheoryFile run() {
    while (true) {
      skip_newlines();
      const Token& t = peek();
      if (t.kind == Tok::kEnd) break;
      if (is_word("obj")) {
        next();
        parse_obj();
      } else if (is_word("gen")) {
        next();
        parse_gen();
      } else if (is_word("diag")) {
        next();
        parse_diag();
      } else if (is_word("tiling")) {
        next();
        parse_tiling();
      } else {
        throw located(ErrorCode::kSyntax, t.loc, "expected obj, gen, diag or tiling, found " + describe(t));
      }
    }
    return std::move(file_);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool is_sym(const char* s) const { return peek().kind == Tok::kSym && peek().text == s; }
  bool is_word(const char* s) const { return peek().kind == Tok::kName && peek().text == s; }

  void skip_newlines() {
    while (peek().kind == Tok::kNewline) next();
  }
  void skip_newlines_if(bool nested) {
    if (nested) skip_newlines();
  }

  const Token& expect_sym(const char* s) {
    if (!is_sym(s)) throw located(ErrorCode::kSyntax, peek().loc, std::string("expected '") + s + "', found " + describe(peek()));
    return next();
  }
  const Token& expect_word(const char* s) {
    if (!is_word(s)) throw located(ErrorCode::kSyntax, peek().loc, std::string("expected '") + s + "', found " + describe(peek()));
    return next();
  }
  const Token& expect_name(const char* what) {
    if (peek().kind != Tok::kName)
      throw located(ErrorCode::kSyntax, peek().loc, std::string("expected ") + what + ", found " + describe(peek()));
    return next();
  }
  const Token& expect_num() {
    if (peek().kind != Tok::kNum)
      throw located(ErrorCode::kSyntax, peek().loc, "expected a number, found " + describe(peek()));
    return next();
  }
  std::int64_t expect_int() { return Grade::parse(expect_num().text).to_int(); }
  void end_of_line() {
    if (peek().kind != Tok::kNewline && peek().kind != Tok::kEnd)
      throw located(ErrorCode::kSyntax, peek().loc, "expected end of line, found " + describe(peek()));
  }

  const Token& declared_name(const char* what) {
    const Token& t = expect_name(what);
    if (kReserved.count(t.text)) throw located(ErrorCode::kSyntax, t.loc, "'" + t.text + "' is a reserved word");
    return t;
  }

  std::string object(const Token& t) {
    if (!file_.polygraph.has_object(t.text)) throw located(ErrorCode::kUnknownName, t.loc, "unknown object " + t.text);
    return t.text;
  }

  void claim(std::set<std::string>& names, const Token& t, const char* what) {
    if (!names.insert(t.text).second) throw located(ErrorCode::kDuplicateName, t.loc, std::string("duplicate ") + what + " " + t.text);
  }

  void parse_obj() {
    if (peek().kind != Tok::kName) throw located(ErrorCode::kSyntax, peek().loc, "expected an object name, found " + describe(peek()));
    while (peek().kind == Tok::kName) {
      const Token& t = declared_name("an object name");
      claim(objects_, t, "object");
      file_.polygraph.objects.push_back(t.text);
    }
    end_of_line();
  }

  Objects object_list() {
    Objects out;
    while (peek().kind == Tok::kName) out.push_back(object(next()));
    return out;
  }

  void parse_gen() {
    const Token& name = declared_name("a generator name");
    claim(terms_, name, "name");
    Generator g;
    g.name = name.text;
    expect_sym(":");
    g.inputs = object_list();
    expect_sym("->");
    g.outputs = object_list();
    expect_sym("@");
    g.time = Grade::parse(expect_num().text);
    end_of_line();
    file_.polygraph.generators.push_back(std::move(g));
  }

  void parse_diag() {
    const Token& name = declared_name("a diagram name");
    claim(terms_, name, "name");
    expect_sym("=");
    DiagDecl d;
    d.name = name.text;
    d.loc = name.loc;
    d.expr = parse_seq(false);
    end_of_line();
    d.diagram = resolve(d.expr);
    file_.diagrams.push_back(std::move(d));
  }

  Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, SourceLoc loc) {
    Expr e;
    e.kind = kind;
    e.loc = loc;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr parse_seq(bool nested) {
    skip_newlines_if(nested);
    Expr lhs = parse_par(nested);
    skip_newlines_if(nested);
    while (is_sym(";")) {
      const SourceLoc loc = next().loc;
      lhs = binary(Expr::Kind::kSeq, std::move(lhs), parse_par(nested), loc);
      skip_newlines_if(nested);
    }
    return lhs;
  }

  Expr parse_par(bool nested) {
    skip_newlines_if(nested);
    Expr lhs = parse_atom(nested);
    skip_newlines_if(nested);
    while (is_sym("*")) {
      const SourceLoc loc = next().loc;
      skip_newlines_if(nested);
      lhs = binary(Expr::Kind::kPar, std::move(lhs), parse_atom(nested), loc);
      skip_newlines_if(nested);
    }
    return lhs;
  }

  Expr parse_atom(bool nested) {
    skip_newlines_if(nested);
    const Token& t = peek();
    Expr e;
    e.loc = t.loc;
    if (is_sym("(")) {
      next();
      e = parse_seq(true);
      expect_sym(")");
      return e;
    }
    if (t.kind != Tok::kName) throw located(ErrorCode::kSyntax, t.loc, "expected an expression, found " + describe(t));
    next();
    if (t.text == "id") {
      e.kind = Expr::Kind::kId;
      e.objects = object_list();
    } else if (t.text == "swap" || t.text == "wait") {
      e.kind = t.text == "swap" ? Expr::Kind::kSwap : Expr::Kind::kWait;
      e.objects = object_list();
      const std::size_t want = t.text == "swap" ? 2 : 1;
      if (e.objects.size() != want)
        throw located(ErrorCode::kArity, t.loc, t.text + " takes " + std::to_string(want) + " object" +
                                                    (want == 1 ? "" : "s") + ", got " + std::to_string(e.objects.size()));
    } else if (t.text == "unit") {
      e.kind = Expr::Kind::kUnit;
    } else if (t.text == "up") {
      e.kind = Expr::Kind::kUp;
      expect_sym("(");
      e.args.push_back(parse_seq(true));
      expect_sym(",");
      skip_newlines();
      e.grade = Grade::parse(expect_num().text);
      skip_newlines();
      expect_sym(")");
    } else {
      e.kind = Expr::Kind::kName;
      e.name = t.text;
    }
    return e;
  }

  Diagram resolve(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kName: {
        if (const Generator* g = file_.polygraph.find(e.name)) return Diagram::gen(*g);
        if (const DiagDecl* d = file_.find_diagram(e.name)) return d->diagram;
        throw located(ErrorCode::kUnknownName, e.loc, "unknown generator or diagram " + e.name);
      }
      case Expr::Kind::kId:
        return Diagram::id(e.objects);
      case Expr::Kind::kSwap:
        return Diagram::sym(e.objects[0], e.objects[1]);
      case Expr::Kind::kWait:
        return Diagram::wait(e.objects[0]);
      case Expr::Kind::kUnit:
        return Diagram::unit_i();
      case Expr::Kind::kSeq:
      case Expr::Kind::kPar:
      case Expr::Kind::kUp: {
        Diagram out = Diagram::unit_i();
        if (e.kind == Expr::Kind::kUp)
          out = Diagram::regrade(resolve(e.args[0]), e.grade);
        else if (e.kind == Expr::Kind::kSeq)
          out = Diagram::seq(resolve(e.args[0]), resolve(e.args[1]));
        else
          out = Diagram::par(resolve(e.args[0]), resolve(e.args[1]));
        try {
          typecheck(out);
        } catch (const Error& err) {
          throw located(err.code(), e.loc, err.what());
        }
        return out;
      }
    }
    throw located(ErrorCode::kSyntax, e.loc, "bad expression");
  }

  void parse_tiling() {
    const Token& name = declared_name("a tiling name");
    claim(tilings_, name, "tiling");
    TilingDecl decl;
    decl.name = name.text;
    decl.loc = name.loc;
    skip_newlines();
    expect_sym("{");
    std::set<std::string> tile_names;
    while (true) {
      while (peek().kind == Tok::kNewline || is_sym(";")) next();
      if (is_sym("}")) {
        next();
        break;
      }
      const Token& t = peek();
      if (is_word("tile")) {
        next();
        TileDecl item;
        item.loc = t.loc;
        const Token& tn = expect_name("a tile name");
        claim(tile_names, tn, "tile");
        item.name = tn.text;
        expect_sym(":");
        const Token& g = expect_name("a generator or wait");
        if (g.text == "wait") {
          item.wait = true;
          item.gen = object(expect_name("an object"));
        } else {
          if (!file_.polygraph.find(g.text)) throw located(ErrorCode::kUnknownName, g.loc, "unknown generator " + g.text);
          item.gen = g.text;
        }
        expect_word("rect");
        item.rect.x0 = expect_int();
        expect_sym("..");
        item.rect.x1 = expect_int();
        expect_word("x");
        item.rect.y0 = expect_int();
        expect_sym("..");
        item.rect.y1 = expect_int();
        decl.items.push_back(std::move(item));
      } else if (is_word("braid")) {
        next();
        TileDecl item;
        item.loc = t.loc;
        item.braid = true;
        expect_word("at");
        item.col = expect_int();
        expect_word("lane");
        item.lane = expect_int();
        const Token& open = expect_sym("(");
        Objects pair;
        while (!is_sym(")")) {
          if (!pair.empty()) expect_sym(",");
          pair.push_back(object(expect_name("an object")));
        }
        next();
        if (pair.size() != 2)
          throw located(ErrorCode::kArity, open.loc, "braid takes 2 objects, got " + std::to_string(pair.size()));
        item.a = pair[0];
        item.b = pair[1];
        decl.items.push_back(std::move(item));
      } else if (is_word("box")) {
        next();
        const std::int64_t w = expect_int();
        expect_word("x");
        decl.box = std::pair{w, expect_int()};
      } else {
        throw located(ErrorCode::kSyntax, t.loc, "expected tile, braid, box or '}', found " + describe(t));
      }
      if (!is_sym(";") && !is_sym("}") && peek().kind != Tok::kNewline)
        throw located(ErrorCode::kSyntax, peek().loc, "expected ';' or end of line, found " + describe(peek()));
    }
    end_of_line();
    file_.tilings.push_back(std::move(decl));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  TheoryFile file_;
  std::set<std::string> objects_, terms_, tilings_;
};

}  // namespace

TheoryFile parse_theory(const std::string& text) { return Parser(lex(text)).run(); }

TheoryFile load_theory(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_theory(ss.str());
}

std::string print_theory(const TheoryFile& t) {
  std::string out;
  if (!t.polygraph.objects.empty()) {
    out += "obj";
    for (const auto& o : t.polygraph.objects) out += " " + o;
    out += "\n";
  }
  for (const auto& g : t.polygraph.generators) {
    out += "gen " + g.name + " :";
    for (const auto& x : g.inputs) out += " " + x;
    out += " ->";
    for (const auto& x : g.outputs) out += " " + x;
    out += " @ " + g.time.str() + "\n";
  }
  for (const auto& d : t.diagrams) out += "diag " + d.name + " = " + d.expr.str() + "\n";
  for (const auto& tl : t.tilings) {
    out += "tiling " + tl.name + " {\n";
    if (tl.box) out += "  box " + std::to_string(tl.box->first) + " x " + std::to_string(tl.box->second) + "\n";
    for (const auto& item : tl.items) {
      if (item.braid) {
        out += "  braid at " + std::to_string(item.col) + " lane " + std::to_string(item.lane) + " (" + item.a + ", " +
               item.b + ")\n";
      } else {
        const Rect& r = item.rect;
        out += "  tile " + item.name + " : " + (item.wait ? "wait " : "") + item.gen + " rect " + std::to_string(r.x0) +
               ".." + std::to_string(r.x1) + " x " + std::to_string(r.y0) + ".." + std::to_string(r.y1) + "\n";
      }
    }
    out += "}\n";
  }
  return out;
}

}  // namespace timecat
