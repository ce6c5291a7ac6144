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

//===- Cgra.cpp - CGRA architecture description ---------------------------===//

#include "flexc/Cgra.h"
#include "flexc/Error.h"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace flexc;
using nlohmann::json;

namespace {
#include "BuiltinArchs.inc"
} // namespace

bool CgraSpec::linked(unsigned From, unsigned To) const {
  return std::binary_search(Links.begin(), Links.end(),
                            std::make_pair(From, To));
}

std::vector<std::pair<unsigned, unsigned>>
flexc::meshLinks(const CgraSpec &S) {
  std::map<std::pair<unsigned, unsigned>, unsigned> At;
  for (const ProcessingElement &P : S.Pes)
    At[{P.Row, P.Col}] = P.Id;
  std::vector<std::pair<unsigned, unsigned>> Links;
  for (const ProcessingElement &P : S.Pes) {
    const int Dr[] = {-1, 1, 0, 0}, Dc[] = {0, 0, -1, 1};
    for (int K = 0; K < 4; ++K) {
      int R = int(P.Row) + Dr[K], C = int(P.Col) + Dc[K];
      if (R < 0 || C < 0)
        continue;
      auto It = At.find({unsigned(R), unsigned(C)});
      if (It != At.end())
        Links.emplace_back(P.Id, It->second);
    }
  }
  std::sort(Links.begin(), Links.end());
  return Links;
}

template <typename T>
static T field(const json &J, const char *Key, const char *Where) {
  auto It = J.find(Key);
  if (It == J.end())
    throw ParseError(std::string(Where) + ": missing \"" + Key + "\"");
  try {
    return It->get<T>();
  } catch (const json::exception &) {
    throw ParseError(std::string(Where) + ": bad value for \"" + Key + "\"");
  }
}

CgraSpec flexc::parseArch(std::string_view Text) {
  json J;
  try {
    J = json::parse(Text);
  } catch (const json::parse_error &E) {
    throw ParseError(std::string("invalid JSON: ") + E.what());
  }
  if (!J.is_object())
    throw ParseError("architecture must be a JSON object");

  CgraSpec S;
  S.Name = field<std::string>(J, "name", "architecture");
  if (J.contains("note"))
    S.Note = field<std::string>(J, "note", "architecture");
  S.Rows = field<unsigned>(J, "rows", "architecture");
  S.Cols = field<unsigned>(J, "cols", "architecture");
  if (S.Rows == 0 || S.Cols == 0)
    throw ParseError("grid must have at least one row and column");

  const json &Pes = J.contains("pes") ? J["pes"] : json();
  if (!Pes.is_array() || Pes.empty())
    throw ParseError("\"pes\" must be a non-empty array");
  std::set<std::pair<unsigned, unsigned>> Seen;
  for (const json &E : Pes) {
    std::string Where = "pe " + std::to_string(S.Pes.size());
    if (!E.is_object())
      throw ParseError(Where + ": expected an object");
    ProcessingElement P;
    P.Id = S.Pes.size();
    P.Row = field<unsigned>(E, "row", Where.c_str());
    P.Col = field<unsigned>(E, "col", Where.c_str());
    if (P.Row >= S.Rows || P.Col >= S.Cols)
      throw ParseError(Where + ": position outside the grid");
    if (!Seen.insert({P.Row, P.Col}).second)
      throw ParseError(Where + ": duplicate position");
    for (const std::string &Name :
         field<std::vector<std::string>>(E, "ops", Where.c_str()))
      P.Supported |= OpSet::parse(Name);
    if (E.contains("has_register"))
      P.HasRegister = field<bool>(E, "has_register", Where.c_str());
    S.Pes.push_back(P);
  }

  if (J.contains("links")) {
    const json &L = J["links"];
    if (!L.is_array())
      throw ParseError("\"links\" must be an array");
    for (const json &E : L) {
      if (!E.is_array() || E.size() != 2 || !E[0].is_number_unsigned() ||
          !E[1].is_number_unsigned())
        throw ParseError("link must be a [src, dst] pair of PE indices");
      unsigned A = E[0].get<unsigned>(), B = E[1].get<unsigned>();
      if (A >= S.Pes.size() || B >= S.Pes.size())
        throw ParseError("link references a missing PE");
      if (A == B)
        throw ParseError("link from a PE to itself");
      S.Links.emplace_back(A, B);
    }
    std::sort(S.Links.begin(), S.Links.end());
    S.Links.erase(std::unique(S.Links.begin(), S.Links.end()), S.Links.end());
  } else {
    S.Links = meshLinks(S);
  }
  return S;
}

std::string flexc::serializeArch(const CgraSpec &S) {
  auto Str = [](const std::string &V) { return json(V).dump(); };
  std::string Out = "{\n";
  Out += "  \"name\": " + Str(S.Name) + ",\n";
  if (!S.Note.empty())
    Out += "  \"note\": " + Str(S.Note) + ",\n";
  Out += "  \"rows\": " + std::to_string(S.Rows) + ",\n";
  Out += "  \"cols\": " + std::to_string(S.Cols) + ",\n";
  Out += "  \"pes\": [\n";
  for (size_t I = 0; I < S.Pes.size(); ++I) {
    const ProcessingElement &P = S.Pes[I];
    json Ops = json::array();
    for (OpKind K : P.Supported.members())
      Ops.push_back(std::string(opName(K)));
    Out += "    {\"row\": " + std::to_string(P.Row) +
           ", \"col\": " + std::to_string(P.Col) + ", \"ops\": " + Ops.dump();
    if (!P.HasRegister)
      Out += ", \"has_register\": false";
    Out += I + 1 < S.Pes.size() ? "},\n" : "}\n";
  }
  Out += "  ],\n  \"links\": [";
  for (size_t I = 0; I < S.Links.size(); ++I) {
    Out += I % 8 == 0 ? "\n    " : " ";
    Out += "[" + std::to_string(S.Links[I].first) + ", " +
           std::to_string(S.Links[I].second) + "]";
    if (I + 1 < S.Links.size())
      Out += ",";
  }
  Out += S.Links.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return Out;
}

OpSet flexc::supportedOps(const CgraSpec &S) {
  OpSet Ops;
  for (const ProcessingElement &P : S.Pes)
    Ops |= P.Supported;
  return Ops;
}

CgraSpec flexc::homogeneousArch(std::string Name, unsigned Rows, unsigned Cols,
                                const OpSet &Ops) {
  CgraSpec S;
  S.Name = std::move(Name);
  S.Rows = Rows;
  S.Cols = Cols;
  for (unsigned R = 0; R < Rows; ++R)
    for (unsigned C = 0; C < Cols; ++C) {
      ProcessingElement P;
      P.Id = S.Pes.size();
      P.Row = R;
      P.Col = C;
      P.Supported = Ops;
      S.Pes.push_back(P);
    }
  S.Links = meshLinks(S);
  return S;
}

std::string_view flexc::builtinArchText(std::string_view Name) {
  for (const auto &[Key, Text] : BuiltinArchTable)
    if (Name == Key)
      return Text;
  throw UnknownNameError("unknown architecture '" + std::string(Name) + "'");
}

CgraSpec flexc::builtinArch(std::string_view Name) {
  return parseArch(builtinArchText(Name));
}

const std::vector<std::string> &flexc::builtinArchNames() {
  static const std::vector<std::string> Names = [] {
    std::vector<std::string> V;
    for (const auto &Entry : BuiltinArchTable)
      V.emplace_back(Entry.first);
    return V;
  }();
  return Names;
}
