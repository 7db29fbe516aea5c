#include <cctype>
#include <istream>
#include <ostream>

#include "unisep/error.hpp"
#include "unisep/gf/io.hpp"
#include "unisep/rep.hpp"

namespace unisep {

void write_rep(std::ostream& os, const MatRep& r) {
  os << r.prime() << ' ' << r.dim() << ' ' << r.num_gens() << '\n';
  for (std::size_t i = 0; i < r.num_gens(); ++i) {
    os << "gen " << r.names()[i] << '\n';
    gf::write_matrix(os, r.gen(i));
  }
}

MatRep read_rep(std::istream& is) {
  long long p = 0, dim = -1, ngens = -1;
  if (!(is >> p >> dim >> ngens) || dim < 0 || ngens < 1) throw ParseError("rep header: expected 'p dim ngens'");
  std::vector<char> names;
  std::vector<gf::Matrix> gens;
  for (long long i = 0; i < ngens; ++i) {
    std::string tag, sym;
    if (!(is >> tag >> sym) || tag != "gen" || sym.size() != 1 || !std::isalpha(static_cast<unsigned char>(sym[0])))
      throw ParseError("rep: expected 'gen <symbol>' before generator " + std::to_string(i + 1));
    gf::Matrix m = gf::read_matrix(is);
    if (m.prime() != unsigned(p) || m.rows() != std::size_t(dim) || m.cols() != std::size_t(dim))
      throw ParseError("rep: generator " + sym + " does not match the header");
    names.push_back(sym[0]);
    gens.push_back(std::move(m));
  }
  try {
    return MatRep(std::move(names), std::move(gens));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("rep: ") + e.what());
  }
}

}  // namespace unisep
