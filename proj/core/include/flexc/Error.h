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

//===- Error.h - Exception types ---------------------------------*- C++ -*-===//

#ifndef FLEXC_ERROR_H
#define FLEXC_ERROR_H

#include <stdexcept>
#include <string>

namespace flexc {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. Line is 1-based, 0 when unknown.
class ParseError : public Error {
public:
  ParseError(const std::string &Msg, unsigned Line = 0)
      : Error(Line ? "line " + std::to_string(Line) + ": " + Msg : Msg),
        Line(Line) {}
  unsigned line() const { return Line; }

private:
  unsigned Line;
};

class EvalError : public Error {
public:
  enum Kind { DivByZero, ShiftOutOfRange, UnboundInput, TypeMismatch };
  EvalError(Kind K, const std::string &Msg) : Error(Msg), K(K) {}
  Kind kind() const { return K; }

private:
  Kind K;
};

class UnknownNameError : public Error {
public:
  using Error::Error;
};

class StaleMatchError : public Error {
public:
  using Error::Error;
};

class ExtractionError : public Error {
public:
  using Error::Error;
};

class UnsupportedOpError : public Error {
public:
  using Error::Error;
};

class InvalidGraphError : public Error {
public:
  using Error::Error;
};

} // namespace flexc

#endif // FLEXC_ERROR_H
