// Copyright 2026 The FlexC Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//===- Pattern.cpp - Rule grammar parser and printer ----------------------===//

#include "flexc/Pattern.h"
#include "flexc/Error.h"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

using namespace flexc;

std::vector<unsigned> Pattern::vars() const {
  std::set<unsigned> Seen;
  std::vector<uint32_t> Work(Outputs.begin(), Outputs.end());
  std::vector<uint8_t> Visited(Nodes.size(), 0);
  while (!Work.empty()) {
    uint32_t I = Work.back();
    Work.pop_back();
    if (Visited[I])
      continue;
    Visited[I] = 1;
    if (Nodes[I].IsVar)
      Seen.insert(Nodes[I].Var);
    for (uint32_t C : Nodes[I].Children)
      Work.push_back(C);
  }
  return {Seen.begin(), Seen.end()};
}

std::string_view flexc::ruleSetName(RuleSet S) {
  switch (S) {
  case RuleSet::Int:
    return "int";
  case RuleSet::Fp:
    return "fp";
  case RuleSet::Bool:
    return "bool";
  case RuleSet::Stochastic:
    return "stochastic";
  }
  return "?";
}

RuleSet flexc::ruleSetFromName(std::string_view Name) {
  for (RuleSet S :
       {RuleSet::Int, RuleSet::Fp, RuleSet::Bool, RuleSet::Stochastic})
    if (ruleSetName(S) == Name)
      return S;
  throw UnknownNameError("unknown ruleset '" + std::string(Name) + "'");
}

std::string_view flexc::semanticsName(Semantics S) {
  switch (S) {
  case Semantics::Exact:
    return "exact";
  case Semantics::FpRelaxed:
    return "fp-relaxed";
  case Semantics::BooleanDomain:
    return "boolean-domain";
  case Semantics::Stochastic:
    return "stochastic";
  }
  return "?";
}

Semantics flexc::defaultSemantics(RuleSet S) {
  switch (S) {
  case RuleSet::Int:
    return Semantics::Exact;
  case RuleSet::Fp:
    return Semantics::FpRelaxed;
  case RuleSet::Bool:
    return Semantics::BooleanDomain;
  case RuleSet::Stochastic:
    return Semantics::Stochastic;
  }
  return Semantics::Exact;
}

namespace {

struct Token {
  enum Kind { Var, Int, Float, Ident, Sym, End } K;
  std::string Text;
  int64_t I = 0;
  double F = 0;
};

std::vector<Token> tokenize(std::string_view S) {
  static const char *Syms[] = {"<=>", "=>", "==", "!=", "<=", ">=", "<<",
                               ">>",  "<",  ">",  "+",  "-",  "*",  "/",
                               "&",   "|",  "^",  "~",  "(",  ")",  ","};
  std::vector<Token> Out;
  size_t I = 0;
  auto IsIdent = [](char C) {
    return std::isalnum(static_cast<unsigned char>(C)) || C == '_';
  };
  while (I < S.size()) {
    char C = S[I];
    if (std::isspace(static_cast<unsigned char>(C))) {
      ++I;
      continue;
    }
    if (C == '?') {
      size_t B = ++I;
      while (I < S.size() && IsIdent(S[I]))
        ++I;
      if (I == B)
        throw ParseError("expected variable name after '?'");
      Out.push_back({Token::Var, "?" + std::string(S.substr(B, I - B))});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(C))) {
      size_t B = I;
      bool IsFloat = false;
      while (I < S.size() && (std::isdigit(static_cast<unsigned char>(S[I])) ||
                              S[I] == '.' || S[I] == 'e' || S[I] == 'E' ||
                              ((S[I] == '-' || S[I] == '+') &&
                               (S[I - 1] == 'e' || S[I - 1] == 'E')))) {
        if (!std::isdigit(static_cast<unsigned char>(S[I])))
          IsFloat = true;
        ++I;
      }
      std::string Lit(S.substr(B, I - B));
      Token T{IsFloat ? Token::Float : Token::Int, Lit};
      try {
        if (IsFloat)
          T.F = std::stod(Lit);
        else
          T.I = std::stoll(Lit);
      } catch (...) {
        throw ParseError("bad numeric literal '" + Lit + "'");
      }
      Out.push_back(T);
      continue;
    }
    if (IsIdent(C)) {
      size_t B = I;
      while (I < S.size() && IsIdent(S[I]))
        ++I;
      Out.push_back({Token::Ident, std::string(S.substr(B, I - B))});
      continue;
    }
    bool Found = false;
    for (const char *Sym : Syms) {
      std::string_view SV(Sym);
      if (S.substr(I, SV.size()) == SV) {
        Out.push_back({Token::Sym, std::string(SV)});
        I += SV.size();
        Found = true;
        break;
      }
    }
    if (!Found)
      throw ParseError(std::string("unexpected character '") + C + "'");
  }
  Out.push_back({Token::End, ""});
  return Out;
}

std::string lower(std::string S) {
  std::transform(S.begin(), S.end(), S.begin(),
                 [](unsigned char C) { return std::tolower(C); });
  return S;
}

class ExprParser {
public:
  ExprParser(const std::vector<Token> &Toks, size_t &Pos, bool FloatMode,
             std::vector<std::string> &VarNames, bool AllowNewVars)
      : Toks(Toks), Pos(Pos), FloatMode(FloatMode), VarNames(VarNames),
        AllowNewVars(AllowNewVars) {}

  Pattern parseList() {
    Pattern P;
    Out = &P;
    P.Outputs.push_back(parseLevel(0));
    while (isSym(","))
      ++Pos, P.Outputs.push_back(parseLevel(0));
    return P;
  }

private:
  const Token &peek() const { return Toks[Pos]; }
  bool isSym(std::string_view S) const {
    return peek().K == Token::Sym && peek().Text == S;
  }
  bool isWord(std::string_view W) const {
    return peek().K == Token::Ident && lower(peek().Text) == W &&
           !(Toks[Pos + 1].K == Token::Sym && Toks[Pos + 1].Text == "(");
  }
  void expect(std::string_view S) {
    if (!isSym(S))
      throw ParseError("expected '" + std::string(S) + "' near '" +
                       peek().Text + "'");
    ++Pos;
  }

  uint32_t push(PatNode N) {
    Out->Nodes.push_back(std::move(N));
    return static_cast<uint32_t>(Out->Nodes.size() - 1);
  }
  uint32_t makeOp(OpKind K, std::vector<uint32_t> Kids) {
    PatNode N;
    N.Op = K;
    N.Children = std::move(Kids);
    return push(std::move(N));
  }
  OpKind arith(OpKind Int, OpKind Fp) const { return FloatMode ? Fp : Int; }

  // Binary operator tables per precedence level, lowest first.
  std::optional<OpKind> binaryAt(unsigned Level) const {
    const Token &T = peek();
    std::string W = T.K == Token::Ident ? lower(T.Text) : std::string();
    bool Word = T.K == Token::Ident;
    auto Sym = [&](std::string_view S) {
      return T.K == Token::Sym && T.Text == S;
    };
    switch (Level) {
    case 0:
      if (Sym("|") || (Word && W == "or"))
        return OpKind::Or;
      break;
    case 1:
      if (Sym("^") || (Word && W == "xor"))
        return OpKind::Xor;
      break;
    case 2:
      if (Sym("&") || (Word && W == "and"))
        return OpKind::And;
      break;
    case 3:
      if (Sym("=="))
        return OpKind::Eq;
      if (Sym("!="))
        return OpKind::Ne;
      break;
    case 4:
      if (Sym("<"))
        return OpKind::Lt;
      if (Sym(">"))
        return OpKind::Gt;
      if (Sym("<="))
        return OpKind::Le;
      if (Sym(">="))
        return OpKind::Ge;
      break;
    case 5:
      if (Sym("<<"))
        return OpKind::Shl;
      if (Sym(">>"))
        return OpKind::Shr;
      break;
    case 6:
      if (Sym("+"))
        return arith(OpKind::Add, OpKind::FAdd);
      if (Sym("-"))
        return arith(OpKind::Sub, OpKind::FSub);
      break;
    case 7:
      if (Sym("*"))
        return arith(OpKind::Mul, OpKind::FMul);
      if (Sym("/"))
        return arith(OpKind::Div, OpKind::FDiv);
      break;
    }
    return std::nullopt;
  }

  uint32_t parseLevel(unsigned Level) {
    if (Level == 8)
      return parseUnary();
    uint32_t L = parseLevel(Level + 1);
    while (auto K = binaryAt(Level)) {
      ++Pos;
      uint32_t R = parseLevel(Level + 1);
      L = makeOp(*K, {L, R});
    }
    return L;
  }

  uint32_t literal(bool Negate) {
    const Token &T = peek();
    ++Pos;
    PatNode N;
    if (FloatMode) {
      N.Op = OpKind::FConst;
      N.FImm = T.K == Token::Float ? T.F : static_cast<double>(T.I);
      if (Negate)
        N.FImm = -N.FImm;
      return push(N);
    }
    if (T.K == Token::Float)
      throw ParseError("float literal '" + T.Text + "' in integer rule");
    int64_t V = Negate ? -T.I : T.I;
    if (V < INT32_MIN || V > UINT32_MAX)
      throw ParseError("integer literal out of 32-bit range: " + T.Text);
    N.Op = OpKind::Const;
    N.Imm = static_cast<int32_t>(static_cast<uint32_t>(V));
    return push(N);
  }

  uint32_t parseUnary() {
    if (isSym("-")) {
      ++Pos;
      if (peek().K == Token::Int || peek().K == Token::Float)
        return literal(true);
      uint32_t X = parseUnary();
      return makeOp(arith(OpKind::Neg, OpKind::FNeg), {X});
    }
    if (isSym("~") || isWord("not")) {
      ++Pos;
      uint32_t X = parseUnary();
      return makeOp(OpKind::Not, {X});
    }
    return parsePrimary();
  }

  uint32_t parsePrimary() {
    const Token &T = peek();
    switch (T.K) {
    case Token::Var: {
      ++Pos;
      auto It = std::find(VarNames.begin(), VarNames.end(), T.Text);
      unsigned Idx;
      if (It == VarNames.end()) {
        if (!AllowNewVars)
          throw ParseError("variable " + T.Text +
                           " in right-hand side is not bound by the "
                           "left-hand side");
        Idx = VarNames.size();
        VarNames.push_back(T.Text);
      } else {
        Idx = static_cast<unsigned>(It - VarNames.begin());
      }
      auto Seen = VarNode.find(Idx);
      if (Seen != VarNode.end())
        return Seen->second;
      PatNode N;
      N.IsVar = true;
      N.Var = Idx;
      uint32_t Id = push(N);
      VarNode[Idx] = Id;
      return Id;
    }
    case Token::Int:
    case Token::Float:
      return literal(false);
    case Token::Ident: {
      std::string Name = lower(T.Text);
      ++Pos;
      auto K = opFromName(Name);
      if (!K || isLeafOp(*K))
        throw ParseError("unknown operation '" + T.Text + "'");
      expect("(");
      std::vector<uint32_t> Args;
      if (!isSym(")")) {
        Args.push_back(parseLevel(0));
        while (isSym(","))
          ++Pos, Args.push_back(parseLevel(0));
      }
      expect(")");
      if (Args.size() != opArity(*K))
        throw ParseError(std::string(opName(*K)) + " expects " +
                         std::to_string(opArity(*K)) + " arguments");
      return makeOp(*K, std::move(Args));
    }
    case Token::Sym:
      if (T.Text == "(") {
        ++Pos;
        uint32_t X = parseLevel(0);
        expect(")");
        return X;
      }
      break;
    case Token::End:
      break;
    }
    throw ParseError("unexpected '" + T.Text + "' in pattern");
  }

  const std::vector<Token> &Toks;
  size_t &Pos;
  bool FloatMode;
  std::vector<std::string> &VarNames;
  bool AllowNewVars;
  Pattern *Out = nullptr;
  std::map<unsigned, uint32_t> VarNode;
};

Domain domainFromName(const std::string &N) {
  static const std::pair<const char *, Domain> Names[] = {
      {"any", Domain::Any},         {"nonneg", Domain::NonNeg},
      {"shift", Domain::Shift},     {"nonzero", Domain::NonZero},
      {"bool", Domain::Bool},       {"finite", Domain::Finite}};
  for (auto &[S, D] : Names)
    if (N == S)
      return D;
  throw ParseError("unknown domain '" + N + "'");
}

std::string trim(std::string_view S) {
  size_t B = 0, E = S.size();
  while (B < E && std::isspace(static_cast<unsigned char>(S[B])))
    ++B;
  while (E > B && std::isspace(static_cast<unsigned char>(S[E - 1])))
    --E;
  return std::string(S.substr(B, E - B));
}

} // namespace

std::vector<RewriteRule> flexc::parseRule(std::string_view Line, RuleSet Set) {
  if (size_t Hash = Line.find('#'); Hash != std::string_view::npos)
    Line = Line.substr(0, Hash);
  std::string Name;
  if (size_t Colon = Line.find(':'); Colon != std::string_view::npos) {
    Name = trim(Line.substr(0, Colon));
    if (Name.empty())
      throw ParseError("empty rule name");
    Line = Line.substr(Colon + 1);
  }

  auto Toks = tokenize(Line);
  size_t Pos = 0;
  bool FloatMode = Set == RuleSet::Fp;
  std::vector<std::string> VarNames;
  Pattern Lhs = ExprParser(Toks, Pos, FloatMode, VarNames, true).parseList();
  bool Bidir;
  if (Toks[Pos].K == Token::Sym && Toks[Pos].Text == "=>")
    Bidir = false;
  else if (Toks[Pos].K == Token::Sym && Toks[Pos].Text == "<=>")
    Bidir = true;
  else
    throw ParseError("expected '=>' or '<=>' near '" + Toks[Pos].Text + "'");
  ++Pos;
  Pattern Rhs = ExprParser(Toks, Pos, FloatMode, VarNames, false).parseList();

  std::vector<Domain> Domains(VarNames.size(), Domain::Any);
  if (Toks[Pos].K == Token::Ident && lower(Toks[Pos].Text) == "where") {
    ++Pos;
    while (true) {
      if (Toks[Pos].K != Token::Var || Toks[Pos + 1].K != Token::Ident)
        throw ParseError("expected '?var domain' in where clause");
      auto It = std::find(VarNames.begin(), VarNames.end(), Toks[Pos].Text);
      if (It == VarNames.end())
        throw ParseError("where clause names unknown variable " +
                         Toks[Pos].Text);
      Domains[It - VarNames.begin()] = domainFromName(Toks[Pos + 1].Text);
      Pos += 2;
      if (Toks[Pos].K == Token::Sym && Toks[Pos].Text == ",") {
        ++Pos;
        continue;
      }
      break;
    }
  }
  if (Toks[Pos].K != Token::End)
    throw ParseError("trailing input '" + Toks[Pos].Text + "'");
  if (Lhs.Outputs.size() != Rhs.Outputs.size())
    throw ParseError("left and right patterns have different output counts");

  auto Make = [&](Pattern L, Pattern R, std::string RuleName) {
    RewriteRule Rule;
    Rule.Lhs = std::move(L);
    Rule.Rhs = std::move(R);
    Rule.VarNames = VarNames;
    Rule.Domains = Domains;
    Rule.Set = Set;
    Rule.Sem = defaultSemantics(Set);
    if (RuleName.empty())
      RuleName = printPattern(Rule.Lhs, VarNames) + " => " +
                 printPattern(Rule.Rhs, VarNames);
    Rule.Name = std::move(RuleName);
    return Rule;
  };

  std::vector<RewriteRule> Out;
  Out.push_back(Make(Lhs, Rhs, Name));
  if (Bidir) {
    auto RhsVars = Rhs.vars();
    if (RhsVars.size() != Lhs.vars().size())
      throw ParseError("reverse direction of '<=>' rule binds fewer "
                       "variables than it uses");
    Out.push_back(Make(Rhs, Lhs, Name.empty() ? Name : Name + "-rev"));
  }
  return Out;
}

std::vector<RewriteRule> flexc::parseRuleFile(std::string_view Text) {
  std::vector<RewriteRule> Out;
  RuleSet Set = RuleSet::Int;
  unsigned LineNo = 0;
  size_t Pos = 0;
  while (Pos <= Text.size()) {
    size_t End = Text.find('\n', Pos);
    if (End == std::string_view::npos)
      End = Text.size();
    std::string_view Line = Text.substr(Pos, End - Pos);
    Pos = End + 1;
    ++LineNo;
    if (size_t Hash = Line.find('#'); Hash != std::string_view::npos)
      Line = Line.substr(0, Hash);
    std::string T = trim(Line);
    if (T.empty())
      continue;
    if (T.front() == '[') {
      const std::string Prefix = "[ruleset:";
      if (T.back() != ']' || T.rfind(Prefix, 0) != 0)
        throw ParseError("bad section header '" + T + "'", LineNo);
      try {
        Set = ruleSetFromName(
            trim(T.substr(Prefix.size(), T.size() - Prefix.size() - 1)));
      } catch (const UnknownNameError &E) {
        throw ParseError(E.what(), LineNo);
      }
      continue;
    }
    try {
      for (RewriteRule &R : parseRule(T, Set))
        Out.push_back(std::move(R));
    } catch (const ParseError &E) {
      throw ParseError(E.what(), LineNo);
    }
  }
  return Out;
}

//===----------------------------------------------------------------------===//
// Printing
//===----------------------------------------------------------------------===//

static const char *infixSymbol(OpKind K) {
  switch (K) {
  case OpKind::Add:
  case OpKind::FAdd:
    return "+";
  case OpKind::Sub:
  case OpKind::FSub:
    return "-";
  case OpKind::Mul:
  case OpKind::FMul:
    return "*";
  case OpKind::Div:
  case OpKind::FDiv:
    return "/";
  case OpKind::Shl:
    return "<<";
  case OpKind::Shr:
    return ">>";
  case OpKind::And:
    return "&";
  case OpKind::Or:
    return "|";
  case OpKind::Xor:
    return "^";
  case OpKind::Eq:
    return "==";
  case OpKind::Ne:
    return "!=";
  case OpKind::Lt:
    return "<";
  case OpKind::Gt:
    return ">";
  case OpKind::Le:
    return "<=";
  case OpKind::Ge:
    return ">=";
  default:
    return nullptr;
  }
}

static std::string printNode(const Pattern &P, uint32_t I,
                             const std::vector<std::string> &VarNames,
                             bool Nested) {
  const PatNode &N = P.Nodes[I];
  if (N.IsVar)
    return VarNames[N.Var];
  if (N.Op == OpKind::Const)
    return std::to_string(N.Imm);
  if (N.Op == OpKind::FConst) {
    char Buf[40];
    std::snprintf(Buf, sizeof(Buf), "%.17g", N.FImm);
    std::string S = Buf;
    if (S.find_first_of(".eEn") == std::string::npos)
      S += ".0";
    return S;
  }
  auto Kid = [&](size_t K) {
    return printNode(P, N.Children[K], VarNames, true);
  };
  std::string S;
  if (N.Op == OpKind::Neg || N.Op == OpKind::FNeg)
    S = "-" + Kid(0);
  else if (N.Op == OpKind::Not)
    S = "~" + Kid(0);
  else if (const char *Sym = infixSymbol(N.Op))
    S = Kid(0) + " " + Sym + " " + Kid(1);
  else {
    S = std::string(opName(N.Op)) + "(";
    for (size_t K = 0; K < N.Children.size(); ++K)
      S += (K ? ", " : "") + printNode(P, N.Children[K], VarNames, false);
    return S + ")";
  }
  return Nested ? "(" + S + ")" : S;
}

std::string flexc::printPattern(const Pattern &P,
                                const std::vector<std::string> &VarNames) {
  std::string S;
  for (size_t I = 0; I < P.Outputs.size(); ++I)
    S += (I ? ", " : "") + printNode(P, P.Outputs[I], VarNames, false);
  return S;
}

Dfg flexc::patternToDfg(const Pattern &P,
                        const std::vector<std::string> &VarNames) {
  DfgBuilder B;
  std::vector<uint32_t> Map(P.Nodes.size());
  std::map<unsigned, uint32_t> VarInput;
  for (size_t I = 0; I < P.Nodes.size(); ++I) {
    const PatNode &N = P.Nodes[I];
    if (N.IsVar) {
      auto It = VarInput.find(N.Var);
      if (It == VarInput.end())
        It = VarInput.emplace(N.Var, B.input(VarNames[N.Var].substr(1))).first;
      Map[I] = It->second;
    } else if (N.Op == OpKind::Const) {
      Map[I] = B.constant(N.Imm);
    } else if (N.Op == OpKind::FConst) {
      Map[I] = B.fconstant(N.FImm);
    } else {
      std::vector<Operand> Ops;
      for (uint32_t C : N.Children)
        Ops.push_back({Map[C], 0});
      Map[I] = B.op(N.Op, std::move(Ops));
    }
  }
  for (uint32_t O : P.Outputs)
    B.output(Map[O]);
  return removeDead(B.build());
}
