#pragma once

#include <stdexcept>
#include <string>

namespace mwlat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CycleDetected : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct SizeBound : Error { using Error::Error; };
struct NotDistributive : Error { using Error::Error; };
struct NotComparable : Error { using Error::Error; };
struct InvalidConfiguration : Error { using Error::Error; };

struct NotALattice : Error {
  int a = -1;
  int b = -1;
  bool missing_join = true;  // offending pair lacks a lub; otherwise a glb
  NotALattice(const std::string& msg, int a_, int b_, bool join_side)
      : Error(msg), a(a_), b(b_), missing_join(join_side) {}
};

struct ParseError : Error {
  int line = 0;
  ParseError(const std::string& msg, int line_) : Error(msg), line(line_) {}
};

}  // namespace mwlat
