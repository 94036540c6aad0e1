#include "camreg/dsl.hpp"

#include "camreg/groebner.hpp"
#include "camreg/resolution.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace camreg {

namespace {

struct Token {
  enum Kind { Ident, Int, Punct, End } kind = End;
  std::string text;
  long long value = 0;
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string &text) : s_(text) { advance(); }

  const Token &peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n')
          ++pos_;
      } else if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++col_;
        ++pos_;
      } else
        break;
    }
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size())
      return;
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok_.kind = Token::Ident;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_' || s_[pos_] == '.')) {
        tok_.text += s_[pos_++];
        ++col_;
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Token::Int;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        tok_.text += s_[pos_++];
        ++col_;
      }
      tok_.value = std::stoll(tok_.text);
    } else {
      static const std::string punct = ";,=[](){}:+-*^";
      if (punct.find(c) == std::string::npos)
        throw ParseError(line_, col_, std::string("unexpected character '") +
                                          c + "'");
      tok_.kind = Token::Punct;
      tok_.text = std::string(1, c);
      ++pos_;
      ++col_;
    }
  }

  std::string s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
public:
  explicit Parser(const std::string &text) : lex_(text) {}

  SessionScript run() {
    parse_field();
    if (peek_is_ident("base")) {
      lex_.next();
      while (lex_.peek().kind == Token::Ident)
        out_.base_names.push_back(lex_.next().text);
      expect_punct(";");
    }
    expect_ident("positive");
    while (lex_.peek().kind == Token::Ident)
      out_.positive_names.push_back(lex_.next().text);
    expect_punct(";");
    if (out_.positive_names.empty())
      throw ParseError(lex_.peek().line, lex_.peek().col,
                       "at least one positive variable required");
    out_.ring.field = field_;
    out_.ring.m = static_cast<int>(out_.base_names.size());
    out_.ring.t = static_cast<int>(out_.positive_names.size());
    out_.ring.order = OrderTag::Grevlex;
    out_.ring.regime = out_.ring.m > 0 ? Regime::Multigraded : Regime::General;
    out_.ring.validate();
    while (lex_.peek().kind != Token::End) {
      const Token &t = lex_.peek();
      if (t.kind != Token::Ident)
        throw ParseError(t.line, t.col,
                         "expected a declaration or command keyword");
      if (t.text == "ideal")
        parse_ideal();
      else if (t.text == "module")
        parse_module();
      else
        parse_command();
    }
    return out_;
  }

private:
  bool peek_is_ident(const std::string &kw) {
    return lex_.peek().kind == Token::Ident && lex_.peek().text == kw;
  }
  Token expect_ident(const std::string &kw) {
    Token t = lex_.next();
    if (t.kind != Token::Ident || (!kw.empty() && t.text != kw))
      throw ParseError(t.line, t.col,
                       "expected '" + (kw.empty() ? "identifier" : kw) +
                           "', got '" + t.text + "'");
    return t;
  }
  Token expect_punct(const std::string &p) {
    Token t = lex_.next();
    if (t.kind != Token::Punct || t.text != p)
      throw ParseError(t.line, t.col,
                       "expected '" + p + "', got '" + t.text + "'");
    return t;
  }
  long long expect_int() {
    bool neg = false;
    if (lex_.peek().kind == Token::Punct && lex_.peek().text == "-") {
      lex_.next();
      neg = true;
    }
    Token t = lex_.next();
    if (t.kind != Token::Int)
      throw ParseError(t.line, t.col, "expected integer, got '" + t.text + "'");
    return neg ? -t.value : t.value;
  }

  void parse_field() {
    expect_ident("field");
    Token t = expect_ident("");
    if (t.text == "QQ")
      field_ = Field{0};
    else if (t.text == "Fp") {
      long long p = expect_int();
      bool prime = p >= 2;
      for (long long d = 2; d * d <= p && prime; ++d)
        if (p % d == 0)
          prime = false;
      if (!prime)
        throw SemanticError(t.line, std::to_string(p) + " not prime");
      field_ = Field{static_cast<std::uint32_t>(p)};
    } else
      throw ParseError(t.line, t.col, "expected QQ or Fp, got '" + t.text +
                                          "'");
    expect_punct(";");
  }

  int var_index(const Token &t) {
    for (size_t i = 0; i < out_.base_names.size(); ++i)
      if (out_.base_names[i] == t.text)
        return static_cast<int>(i);
    for (size_t i = 0; i < out_.positive_names.size(); ++i)
      if (out_.positive_names[i] == t.text)
        return out_.ring.m + static_cast<int>(i);
    throw SemanticError(t.line, "unknown name '" + t.text + "'");
  }

  Polynomial parse_expr() {
    Polynomial f = parse_term();
    while (lex_.peek().kind == Token::Punct &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      bool plus = lex_.next().text == "+";
      Polynomial g = parse_term();
      f = plus ? f + g : f - g;
    }
    return f;
  }
  Polynomial parse_term() {
    Polynomial f = parse_factor();
    while (lex_.peek().kind == Token::Punct && lex_.peek().text == "*")
      lex_.next(), f = f * parse_factor();
    return f;
  }
  Polynomial parse_factor() {
    Polynomial f = parse_atom();
    if (lex_.peek().kind == Token::Punct && lex_.peek().text == "^") {
      Token caret = lex_.next();
      long long e = expect_int();
      if (e < 0)
        throw ParseError(caret.line, caret.col, "negative exponent");
      Polynomial out = Polynomial::constant(Scalar::one(field_), out_.ring);
      for (long long k = 0; k < e; ++k)
        out = out * f;
      return out;
    }
    return f;
  }
  Polynomial parse_atom() {
    Token t = lex_.peek();
    if (t.kind == Token::Ident)
      return Polynomial::variable(var_index(lex_.next()), out_.ring);
    if (t.kind == Token::Int) {
      lex_.next();
      return Polynomial::constant(Scalar::of_int(t.value, field_), out_.ring);
    }
    if (t.kind == Token::Punct && t.text == "(") {
      lex_.next();
      Polynomial f = parse_expr();
      expect_punct(")");
      return f;
    }
    if (t.kind == Token::Punct && t.text == "-") {
      lex_.next();
      return Polynomial::constant(-Scalar::one(field_), out_.ring) *
             parse_atom();
    }
    throw ParseError(t.line, t.col, "expected expression, got '" + t.text +
                                        "'");
  }

  std::vector<Polynomial> parse_poly_list_bracketed() {
    expect_punct("[");
    std::vector<Polynomial> out;
    if (!(lex_.peek().kind == Token::Punct && lex_.peek().text == "]")) {
      out.push_back(parse_expr());
      while (lex_.peek().kind == Token::Punct && lex_.peek().text == ",")
        lex_.next(), out.push_back(parse_expr());
    }
    expect_punct("]");
    return out;
  }

  void check_unique(const std::string &name, int line) {
    if (out_.ideals.count(name) || out_.modules.count(name))
      throw SemanticError(line, "name '" + name + "' already declared");
  }

  void parse_ideal() {
    expect_ident("ideal");
    Token nm = expect_ident("");
    check_unique(nm.text, nm.line);
    expect_punct("=");
    auto gens = parse_poly_list_bracketed();
    expect_punct(";");
    for (const auto &f : gens) {
      if (f.is_zero())
        continue;
      bool homog = out_.ring.regime == Regime::Multigraded
                       ? f.fine_degree(out_.ring).has_value()
                       : f.coarse_degree(out_.ring).has_value();
      if (!homog)
        throw SemanticError(nm.line, "ideal generator not homogeneous");
    }
    out_.ideals[nm.text] = gens;
    out_.ideal_order.push_back(nm.text);
  }

  MultiDegree parse_shift(int line) {
    // tuple in MULTIGRADED, single integer in GENERAL
    if (lex_.peek().kind == Token::Punct && lex_.peek().text == "(") {
      if (out_.ring.regime != Regime::Multigraded)
        throw SemanticError(line, "tuple shift in GENERAL regime");
      lex_.next();
      MultiDegree a;
      a.push_back(static_cast<int>(expect_int()));
      while (lex_.peek().kind == Token::Punct && lex_.peek().text == ",")
        lex_.next(), a.push_back(static_cast<int>(expect_int()));
      expect_punct(")");
      if (static_cast<int>(a.size()) != out_.ring.nvars())
        throw SemanticError(line, "shift tuple length != number of variables");
      return a;
    }
    if (out_.ring.regime == Regime::Multigraded)
      throw SemanticError(line, "integer shift in MULTIGRADED regime");
    return {static_cast<int>(expect_int())};
  }

  void parse_module() {
    expect_ident("module");
    Token nm = expect_ident("");
    check_unique(nm.text, nm.line);
    expect_punct("=");
    expect_ident("coker");
    expect_punct("{");
    expect_ident("shifts");
    expect_punct(":");
    expect_punct("[");
    std::vector<MultiDegree> shifts;
    shifts.push_back(parse_shift(nm.line));
    while (lex_.peek().kind == Token::Punct && lex_.peek().text == ",")
      lex_.next(), shifts.push_back(parse_shift(nm.line));
    expect_punct("]");
    expect_punct(",");
    expect_ident("matrix");
    expect_punct(":");
    expect_punct("[");
    std::vector<std::vector<Polynomial>> rows;
    rows.push_back(parse_poly_list_bracketed());
    while (lex_.peek().kind == Token::Punct && lex_.peek().text == ",")
      lex_.next(), rows.push_back(parse_poly_list_bracketed());
    expect_punct("]");
    expect_punct("}");
    expect_punct(";");
    if (rows.size() != shifts.size())
      throw SemanticError(nm.line, "matrix row count != shift count");
    size_t ncols = rows[0].size();
    for (const auto &r : rows)
      if (r.size() != ncols)
        throw SemanticError(nm.line, "ragged matrix");
    ModulePresentation M;
    M.F.ring = out_.ring;
    for (const auto &a : shifts) {
      // a generator of R(a) sits in degree -a
      if (out_.ring.regime == Regime::Multigraded) {
        MultiDegree d(out_.ring.nvars());
        for (int v = 0; v < out_.ring.nvars(); ++v)
          d[v] = -a[v];
        int coarse = 0;
        for (int v = out_.ring.m; v < out_.ring.nvars(); ++v)
          coarse += d[v];
        M.F.fine_degs.push_back(d);
        M.F.coarse_degs.push_back(coarse);
      } else
        M.F.coarse_degs.push_back(-a[0]);
    }
    for (size_t c = 0; c < ncols; ++c) {
      ModuleElement col;
      for (size_t r = 0; r < rows.size(); ++r)
        col.push_back(rows[r][c]);
      if (out_.ring.regime == Regime::Multigraded) {
        if (!elem_fine_degree(col, M.F).has_value())
          throw SemanticError(
              nm.text == "" ? nm.line : nm.line,
              "entry not fine-multihomogeneous in MULTIGRADED regime");
      } else if (!elem_coarse_degree(col, M.F).has_value())
        throw SemanticError(nm.line, "matrix column not homogeneous");
      M.rels.push_back(col);
    }
    M.validate();
    out_.modules[nm.text] = M;
    out_.module_order.push_back(nm.text);
  }

  /// idealref := name ["+" R "+"] | "(" exprs ")" ["+" R "+"] | R "+"
  void parse_idealref(SessionScript::Cmd &cmd) {
    Token t = lex_.peek();
    if (t.kind == Token::Ident && t.text == "R") {
      lex_.next();
      expect_punct("+");
      cmd.wrt_rplus = true;
      return;
    }
    if (t.kind == Token::Punct && t.text == "(") {
      lex_.next();
      if (!(lex_.peek().kind == Token::Punct && lex_.peek().text == ")")) {
        cmd.wrt_gens.push_back(parse_expr());
        while (lex_.peek().kind == Token::Punct && lex_.peek().text == ",")
          lex_.next(), cmd.wrt_gens.push_back(parse_expr());
      }
      expect_punct(")");
    } else {
      Token nm = expect_ident("");
      auto it = out_.ideals.find(nm.text);
      if (it == out_.ideals.end())
        throw SemanticError(nm.line, "unknown ideal '" + nm.text + "'");
      cmd.wrt_name = nm.text;
      cmd.wrt_gens = it->second;
    }
    if (lex_.peek().kind == Token::Punct && lex_.peek().text == "+") {
      lex_.next();
      expect_ident("R");
      expect_punct("+");
      cmd.wrt_rplus = true;
    }
  }

  std::string module_arg(SessionScript::Cmd &cmd) {
    Token nm = expect_ident("");
    if (!out_.modules.count(nm.text))
      throw SemanticError(nm.line, "unknown module '" + nm.text + "'");
    cmd.target = nm.text;
    return nm.text;
  }

  std::string render_ref(const SessionScript::Cmd &cmd) {
    std::string s;
    if (!cmd.wrt_name.empty())
      s = cmd.wrt_name;
    else if (!cmd.wrt_gens.empty()) {
      s = "(";
      for (size_t i = 0; i < cmd.wrt_gens.size(); ++i)
        s += (i ? "," : "") + cmd.wrt_gens[i].str(out_.ring);
      s += ")";
    }
    if (cmd.wrt_rplus)
      s += s.empty() ? "R+" : "+R+";
    return s;
  }

  void parse_command() {
    Token verb = expect_ident("");
    SessionScript::Cmd cmd;
    cmd.verb = verb.text;
    cmd.line = verb.line;
    if (verb.text == "gb") {
      Token nm = expect_ident("");
      if (!out_.ideals.count(nm.text))
        throw SemanticError(nm.line, "unknown ideal '" + nm.text + "'");
      cmd.target = nm.text;
      cmd.echo = "gb " + nm.text;
    } else if (verb.text == "resolve") {
      module_arg(cmd);
      if (lex_.peek().kind == Token::Int)
        cmd.arg = static_cast<int>(expect_int());
      cmd.echo = "resolve " + cmd.target +
                 (cmd.arg < POS_INF ? " " + std::to_string(cmd.arg) : "");
    } else if (verb.text == "betti") {
      module_arg(cmd);
      cmd.echo = "betti " + cmd.target;
    } else if (verb.text == "reg") {
      module_arg(cmd);
      expect_ident("wrt");
      parse_idealref(cmd);
      cmd.arg = 0;
      if (peek_is_ident("level")) {
        lex_.next();
        cmd.arg = static_cast<int>(expect_int());
      }
      cmd.echo = "reg " + cmd.target + " wrt " + render_ref(cmd) +
                 (cmd.arg ? " level " + std::to_string(cmd.arg) : "");
    } else if (verb.text == "end") {
      module_arg(cmd);
      expect_ident("wrt");
      parse_idealref(cmd);
      expect_ident("at");
      cmd.arg = static_cast<int>(expect_int());
      cmd.echo = "end " + cmd.target + " wrt " + render_ref(cmd) + " at " +
                 std::to_string(cmd.arg);
    } else if (verb.text == "cd") {
      module_arg(cmd);
      expect_ident("wrt");
      parse_idealref(cmd);
      cmd.echo = "cd " + cmd.target + " wrt " + render_ref(cmd);
    } else if (verb.text == "grade") {
      parse_idealref(cmd);
      expect_ident("on");
      Token nm = expect_ident("");
      if (!out_.modules.count(nm.text))
        throw SemanticError(nm.line, "unknown module '" + nm.text + "'");
      cmd.target = nm.text;
      cmd.echo = "grade " + render_ref(cmd) + " on " + cmd.target;
    } else if (verb.text == "fdepth") {
      Token nm = expect_ident("");
      if (!out_.modules.count(nm.text) && !out_.ideals.count(nm.text))
        throw SemanticError(nm.line, "unknown name '" + nm.text + "'");
      cmd.target = nm.text;
      cmd.echo = "fdepth " + cmd.target;
    } else if (verb.text == "verify") {
      Token nm = expect_ident("");
      cmd.target = nm.text;
      if (nm.text != "all") {
        const auto &ids = statement_ids();
        if (std::find(ids.begin(), ids.end(), nm.text) == ids.end())
          throw SemanticError(nm.line, "unknown statement '" + nm.text + "'");
      }
      cmd.echo = "verify " + cmd.target;
      while (lex_.peek().kind == Token::Punct && lex_.peek().text == "-") {
        lex_.next();
        expect_punct("-");
        Token flag = expect_ident("");
        long long v = expect_int();
        if (flag.text == "seed")
          cmd.seed = static_cast<unsigned>(v);
        else if (flag.text == "size")
          cmd.size = static_cast<int>(v);
        else
          throw ParseError(flag.line, flag.col,
                           "unknown verify flag '" + flag.text + "'");
        cmd.echo += " --" + flag.text + " " + std::to_string(v);
      }
    } else
      throw ParseError(verb.line, verb.col,
                       "unknown command '" + verb.text + "'");
    expect_punct(";");
    out_.commands.push_back(std::move(cmd));
  }

  Lexer lex_;
  Field field_{0};
  SessionScript out_;
};

std::string fmt_text(int v) {
  if (v <= NEG_INF)
    return "-inf";
  if (v >= POS_INF)
    return "+inf";
  return std::to_string(v);
}

nlohmann::ordered_json fmt_json(int v) {
  if (v <= NEG_INF)
    return "minus_infinity";
  if (v >= POS_INF)
    return "plus_infinity";
  return v;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

CechSpec cech_of(const SessionScript::Cmd &cmd, const RingSpec &R) {
  if (cmd.wrt_gens.empty()) {
    if (!cmd.wrt_rplus)
      throw domain_error("empty ideal reference");
    return CechSpec::rplus_only(R);
  }
  return CechSpec::from_ideal(R, cmd.wrt_gens, cmd.wrt_rplus);
}

} // namespace

SessionScript parse(const std::string &text) { return Parser(text).run(); }

std::string render_script(const SessionScript &s) {
  std::ostringstream os;
  if (s.ring.field.p == 0)
    os << "field QQ;\n";
  else
    os << "field Fp " << s.ring.field.p << ";\n";
  if (!s.base_names.empty()) {
    os << "base";
    for (const auto &n : s.base_names)
      os << " " << n;
    os << ";\n";
  }
  os << "positive";
  for (const auto &n : s.positive_names)
    os << " " << n;
  os << ";\n";
  for (const auto &nm : s.ideal_order) {
    os << "ideal " << nm << " = [";
    const auto &gens = s.ideals.at(nm);
    for (size_t i = 0; i < gens.size(); ++i)
      os << (i ? ", " : "") << gens[i].str(s.ring);
    os << "];\n";
  }
  for (const auto &nm : s.module_order) {
    const auto &M = s.modules.at(nm);
    os << "module " << nm << " = coker { shifts: [";
    for (int g = 0; g < M.F.rank(); ++g) {
      if (g)
        os << ", ";
      if (s.ring.regime == Regime::Multigraded) {
        os << "(";
        for (int v = 0; v < s.ring.nvars(); ++v)
          os << (v ? "," : "") << -M.F.fine_degs[g][v];
        os << ")";
      } else
        os << -M.F.coarse_degs[g];
    }
    os << "], matrix: [";
    for (int g = 0; g < M.F.rank(); ++g) {
      if (g)
        os << ", ";
      os << "[";
      for (size_t c = 0; c < M.rels.size(); ++c)
        os << (c ? ", " : "") << M.rels[c][g].str(s.ring);
      os << "]";
    }
    os << "] };\n";
  }
  for (const auto &c : s.commands)
    os << c.echo << ";\n";
  return os.str();
}

ExecResult execute(const SessionScript &s, const ExecFlags &flags) {
  ExecResult out;
  std::ostringstream text;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  set_scan_floor(flags.floor);
  for (const auto &cmd : s.commands) {
    nlohmann::ordered_json rep;
    rep["command"] = cmd.echo;
    try {
      if (cmd.verb == "gb") {
        const auto &gens = s.ideals.at(cmd.target);
        FreeModuleSpec F = FreeModuleSpec::free_rank1(s.ring);
        std::vector<ModuleElement> v;
        for (const auto &f : gens)
          v.push_back({f});
        auto G = buchberger(v, F);
        text << cmd.echo << ": " << G.gb.gens.size() << " elements\n";
        nlohmann::ordered_json el = nlohmann::ordered_json::array();
        for (const auto &g : G.gb.gens) {
          text << "  " << g[0].str(s.ring) << "\n";
          el.push_back(g[0].str(s.ring));
        }
        rep["basis"] = el;
      } else if (cmd.verb == "resolve" || cmd.verb == "betti") {
        auto C = minimal_free_resolution(s.modules.at(cmd.target));
        if (cmd.verb == "resolve") {
          int len = std::min<int>(C.length(),
                                  cmd.arg < POS_INF ? cmd.arg : C.length());
          text << cmd.echo << ": 0 <- M";
          nlohmann::ordered_json ranks = nlohmann::ordered_json::array();
          for (int i = 0; i <= len; ++i) {
            text << " <- R^" << C.F[i].rank();
            ranks.push_back(C.F[i].rank());
          }
          text << " <- 0\n";
          rep["ranks"] = ranks;
        } else {
          BettiTable B = betti_table(C);
          text << cmd.echo << ":\n" << B.str();
          nlohmann::ordered_json tab = nlohmann::ordered_json::array();
          for (size_t i = 0; i < B.by_degree.size(); ++i) {
            nlohmann::ordered_json col;
            for (const auto &[d, c] : B.by_degree[i])
              col[std::to_string(d)] = c;
            tab.push_back(col);
          }
          rep["betti"] = tab;
          rep["pd"] = fmt_json(B.projective_dimension());
          rep["regularity"] = fmt_json(B.regularity());
        }
      } else if (cmd.verb == "reg") {
        EndReport r =
            reg_wrt(s.modules.at(cmd.target), cech_of(cmd, s.ring), cmd.arg);
        int v = r.regk.count(cmd.arg) ? r.regk.at(cmd.arg) : NEG_INF;
        text << cmd.echo << " = " << fmt_text(v) << " (" << lower(r.status)
             << ")\n";
        rep["reg"] = fmt_json(v);
        rep["level"] = cmd.arg;
        rep["status"] = r.status;
      } else if (cmd.verb == "end") {
        EndValue e = end_of_cohomology(s.modules.at(cmd.target),
                                       cech_of(cmd, s.ring), cmd.arg);
        text << "H^" << cmd.arg << ": end = " << fmt_text(e.end) << " ("
             << lower(e.status) << ")\n";
        rep["i"] = cmd.arg;
        rep["end"] = fmt_json(e.end);
        rep["status"] = e.status;
      } else if (cmd.verb == "cd") {
        EndReport r = reg_wrt(s.modules.at(cmd.target), cech_of(cmd, s.ring));
        text << cmd.echo << " = " << fmt_text(r.cd_lower) << " ("
             << lower(r.status) << ")\n";
        rep["cd"] = fmt_json(r.cd_lower);
        rep["status"] = r.status;
      } else if (cmd.verb == "grade") {
        if (cmd.wrt_gens.empty())
          throw domain_error("grade needs explicit generators");
        int g = grade_on_module(cmd.wrt_gens, s.modules.at(cmd.target));
        text << cmd.echo << " = " << fmt_text(g) << "\n";
        rep["grade"] = fmt_json(g);
      } else if (cmd.verb == "fdepth") {
        ModulePresentation Q;
        if (s.modules.count(cmd.target))
          Q = s.modules.at(cmd.target);
        else {
          std::vector<Polynomial> gens = s.ideals.at(cmd.target);
          for (int v = s.ring.m; v < s.ring.nvars(); ++v)
            gens.push_back(Polynomial::variable(v, s.ring));
          Q = ModulePresentation::quotient_ring(s.ring, gens);
        }
        FDepthReport fd = f_depth_probe(Q, flags.smax);
        text << cmd.echo << " = " << fmt_text(fd.f_depth) << " ("
             << lower(fd.status) << ")\n";
        nlohmann::ordered_json vs = nlohmann::ordered_json::array();
        for (const auto &v : fd.verdicts) {
          text << "  " << v.str() << "\n";
          nlohmann::ordered_json jv;
          jv["i"] = v.i;
          jv["kind"] =
              v.kind == FDepthVerdict::Kind::Nonvanishing    ? "nonvanishing"
              : v.kind == FDepthVerdict::Kind::NilpotentAt ? "nilpotent_at"
                                                           : "undecided";
          jv["s"] = v.s;
          nlohmann::ordered_json w = nlohmann::ordered_json::array();
          for (const auto &fr : v.witness)
            w.push_back(fr.str());
          jv["witness"] = w;
          vs.push_back(jv);
        }
        rep["f_depth"] = fmt_json(fd.f_depth);
        rep["status"] = fd.status;
        rep["assumption"] = fd.assumption;
        rep["verdicts"] = vs;
      } else if (cmd.verb == "verify") {
        unsigned seed = flags.seed_set ? flags.seed : cmd.seed;
        int size = flags.size_set ? flags.size : cmd.size;
        std::vector<CheckResult> rs;
        if (cmd.target == "all")
          rs = verify_suite(seed, size, flags.threads);
        else {
          auto all = verify_suite(seed, size, flags.threads);
          for (auto &r : all)
            if (r.statement == cmd.target)
              rs.push_back(r);
        }
        text << cmd.echo << ":\n" << results_table(rs);
        rep["results"] = nlohmann::ordered_json::parse(results_json(rs));
        if (any_certified_failure(rs))
          out.exit_code = std::max(out.exit_code, 1);
      }
    } catch (const std::exception &e) {
      set_scan_floor(POS_INF);
      out.output = flags.json
                       ? nlohmann::ordered_json(
                             {{"command", cmd.echo}, {"error", e.what()}})
                             .dump(2) +
                             "\n"
                       : cmd.echo + ": error: " + e.what() + "\n";
      out.exit_code = 3;
      return out;
    }
    reports.push_back(std::move(rep));
  }
  set_scan_floor(POS_INF);
  out.output = flags.json ? reports.dump(2) + "\n" : text.str();
  return out;
}

ExecResult run_verify(const std::string &statement, const ExecFlags &flags) {
  ExecResult out;
  try {
    std::vector<CheckResult> rs = verify_suite(flags.seed, flags.size,
                                               flags.threads);
    if (statement != "all") {
      const auto &ids = statement_ids();
      if (std::find(ids.begin(), ids.end(), statement) == ids.end())
        throw domain_error("unknown statement '" + statement + "'");
      std::vector<CheckResult> kept;
      for (auto &r : rs)
        if (r.statement == statement)
          kept.push_back(r);
      rs = kept;
    }
    out.output = flags.json ? nlohmann::ordered_json::parse(results_json(rs))
                                      .dump(2) +
                                  "\n"
                            : results_table(rs);
    out.exit_code = any_certified_failure(rs) ? 1 : 0;
  } catch (const std::exception &e) {
    out.output = std::string("verify: error: ") + e.what() + "\n";
    out.exit_code = 3;
  }
  return out;
}

} // namespace camreg
