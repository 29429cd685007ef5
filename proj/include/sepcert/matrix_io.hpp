#pragma once

// Text format for operators and states:
//
//   dims <d1> <d2>
//   <d1*d2 rows of d1*d2 whitespace-separated complex entries>
//
// Entries are "a+bi", "a-bi", "a" (pure real) or "bi" (pure imaginary).
// Blank lines and lines starting with '#' are ignored. Printing uses 17
// significant digits so parse/print roundtrips are exact.

#include <iosfwd>
#include <string>

#include "sepcert/states.hpp"
#include "sepcert/types.hpp"

namespace sepcert {

struct MatrixFile {
  ComplexMatrix matrix;
  Index d1 = 0;
  Index d2 = 0;
};

Complex parse_complex_token(const std::string& token);
std::string format_complex(Complex z);

MatrixFile parse_matrix(std::istream& in);
MatrixFile parse_matrix_file(const std::string& path);

void print_matrix(std::ostream& out, const ComplexMatrix& m, Index d1, Index d2);
std::string format_matrix(const ComplexMatrix& m, Index d1, Index d2);

// Validated-state convenience wrapper around parse + BipartiteState.
BipartiteState parse_state_file(const std::string& path);

}  // namespace sepcert
