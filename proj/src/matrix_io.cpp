#include "sepcert/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace sepcert {

namespace {

double parse_real(const std::string& text, const std::string& token) {
  if (text.empty()) throw ParseError("empty number in entry '" + token + "'");
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;  // from_chars does not accept a leading '+'
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError("bad number '" + text + "' in entry '" + token + "'");
  return value;
}

// Index of the sign that separates real and imaginary parts, or npos.
// A sign at position 0 or directly after an exponent marker is part of a
// number, not a separator.
size_t split_position(const std::string& body) {
  for (size_t i = body.size(); i-- > 1;) {
    const char c = body[i];
    if (c != '+' && c != '-') continue;
    const char prev = body[i - 1];
    if (prev == 'e' || prev == 'E') continue;
    return i;
  }
  return std::string::npos;
}

}  // namespace

Complex parse_complex_token(const std::string& token) {
  if (token.empty()) throw ParseError("empty matrix entry");
  if (token.back() != 'i') return {parse_real(token, token), 0.0};

  const std::string body = token.substr(0, token.size() - 1);
  const size_t pos = split_position(body);
  std::string real_part, imag_part;
  if (pos == std::string::npos) {
    imag_part = body;
  } else {
    real_part = body.substr(0, pos);
    imag_part = body.substr(pos);
  }
  // Bare "i", "+i", "-i" carry an implicit unit coefficient.
  double imag;
  if (imag_part.empty() || imag_part == "+")
    imag = 1.0;
  else if (imag_part == "-")
    imag = -1.0;
  else
    imag = parse_real(imag_part, token);
  const double real = real_part.empty() ? 0.0 : parse_real(real_part, token);
  return {real, imag};
}

std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", z.real());
  std::string out = buf;
  std::snprintf(buf, sizeof buf, "%.17g", std::abs(z.imag()));
  out += (std::signbit(z.imag()) ? '-' : '+');
  out += buf;
  out += 'i';
  return out;
}

MatrixFile parse_matrix(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("missing 'dims d1 d2' header");

  std::istringstream header(lines.front());
  std::string keyword;
  long d1 = 0, d2 = 0;
  if (!(header >> keyword >> d1 >> d2) || keyword != "dims" || d1 < 1 || d2 < 1)
    throw ParseError("malformed header '" + lines.front() +
                     "' (expected 'dims d1 d2')");
  std::string trailing;
  if (header >> trailing) throw ParseError("trailing tokens after header");

  const Index dim = static_cast<Index>(d1) * static_cast<Index>(d2);
  if (lines.size() != static_cast<size_t>(dim) + 1)
    throw ParseError("expected " + std::to_string(dim) + " matrix rows, got " +
                     std::to_string(lines.size() - 1));

  MatrixFile result;
  result.d1 = d1;
  result.d2 = d2;
  result.matrix.resize(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    std::istringstream row(lines[static_cast<size_t>(r) + 1]);
    std::string token;
    for (Index c = 0; c < dim; ++c) {
      if (!(row >> token))
        throw ParseError("row " + std::to_string(r + 1) + " has fewer than " +
                         std::to_string(dim) + " entries");
      result.matrix(r, c) = parse_complex_token(token);
    }
    if (row >> token)
      throw ParseError("row " + std::to_string(r + 1) + " has extra entries");
  }
  if (!all_finite(result.matrix))
    throw ParseError("matrix contains a non-finite entry");
  return result;
}

MatrixFile parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_matrix(in);
}

void print_matrix(std::ostream& out, const ComplexMatrix& m, Index d1,
                  Index d2) {
  out << "dims " << d1 << ' ' << d2 << '\n';
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << format_complex(m(r, c));
    }
    out << '\n';
  }
}

std::string format_matrix(const ComplexMatrix& m, Index d1, Index d2) {
  std::ostringstream out;
  print_matrix(out, m, d1, d2);
  return out.str();
}

BipartiteState parse_state_file(const std::string& path) {
  MatrixFile f = parse_matrix_file(path);
  return BipartiteState(std::move(f.matrix), f.d1, f.d2);
}

}  // namespace sepcert
