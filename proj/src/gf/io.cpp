#include "unisep/gf/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "unisep/error.hpp"

namespace unisep::gf {

void write_matrix(std::ostream& os, const Matrix& m) {
  os << m.prime() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << unsigned(m(i, j));
    }
    os << '\n';
  }
}

std::string to_text(const Matrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

Matrix read_matrix(std::istream& is) {
  long long p = 0, nr = -1, nc = -1;
  if (!(is >> p >> nr >> nc) || nr < 0 || nc < 0) throw ParseError("matrix header: expected 'p nrows ncols'");
  try {
    check_prime(unsigned(p));
  } catch (const Error& e) {
    throw ParseError(std::string("matrix header: ") + e.what());
  }
  Matrix m{static_cast<unsigned>(p), static_cast<std::size_t>(nr), static_cast<std::size_t>(nc)};
  for (long long i = 0; i < nr; ++i) {
    for (long long j = 0; j < nc; ++j) {
      long long v;
      if (!(is >> v)) throw ParseError("matrix body: row " + std::to_string(i) + " too short");
      if (v < 0 || v >= p) throw ParseError("matrix body: residue out of range at row " + std::to_string(i));
      m.set(std::size_t(i), std::size_t(j), Elem(v));
    }
  }
  return m;
}

Matrix from_text(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

}  // namespace unisep::gf
