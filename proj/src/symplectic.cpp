#include "unisep/symplectic.hpp"

#include <cctype>
#include <sstream>

#include "unisep/error.hpp"
#include "unisep/gf/linalg.hpp"

namespace unisep {

SymplecticForm::SymplecticForm(gf::Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.square()) throw DimensionError("symplectic form: Gram matrix not square");
  const unsigned p = gram_.prime();
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    if (gram_(i, i)) throw DomainError("symplectic form: nonzero diagonal");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_(i, j) != gf::neg(gram_(j, i), p)) throw DomainError("symplectic form: not alternating");
  }
  if (gf::rank(gram_) != gram_.rows()) throw DomainError("symplectic form: degenerate");
}

SymplecticForm SymplecticForm::anti_diagonal(unsigned prime, std::size_t n) {
  if (n % 2) throw DimensionError("symplectic form: odd dimension");
  gf::Matrix g(prime, n, n);
  for (std::size_t i = 0; i < n; ++i) g.set(i, n - 1 - i, i < n / 2 ? 1 : gf::neg(1, prime));
  return SymplecticForm(std::move(g));
}

bool is_isometry(const gf::Matrix& m, const SymplecticForm& form) {
  if (!m.square() || m.rows() != form.dim()) throw DimensionError("is_isometry: dimension mismatch");
  if (m.prime() != form.prime()) throw PrimeMismatch("is_isometry: prime mismatch");
  return gf::transpose(m) * form.gram() * m == form.gram();
}

std::size_t chi(const gf::Matrix& u, const SymplecticForm& form, std::size_t m) {
  if (!is_isometry(u, form)) throw DomainError("chi: not an isometry of the form");
  if (!is_unipotent(u)) throw DomainError("chi: not unipotent");
  const unsigned p = u.prime();
  const gf::Matrix x = gf::add_scalar(u, gf::Elem(p - 1));
  const gf::Matrix xt = gf::transpose(x);
  // Rows of v are the vectors X^n b_i for a kernel basis b_i.
  gf::Matrix v = gf::nullspace(gf::power(x, m));
  for (std::size_t n = 0;; ++n) {
    const gf::Matrix w = v * xt;
    const gf::Matrix c = v * form.gram() * gf::transpose(w);
    bool vanishes = true;
    for (std::size_t i = 0; i < c.rows() && vanishes; ++i) {
      if (c(i, i)) vanishes = false;
      for (std::size_t j = i + 1; j < c.rows() && vanishes; ++j)
        if (gf::add(c(i, j), c(j, i), p)) vanishes = false;
    }
    if (vanishes) return n;
    v = w;
  }
}

HesselinkLabel::HesselinkLabel(std::vector<LabelPart> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const auto& q = parts_[i];
    if (q.size == 0 || q.multiplicity == 0) throw DomainError("label: sizes and multiplicities must be positive");
    if (q.chi > q.size) throw DomainError("label: chi exceeds block size");
    if (i && parts_[i - 1].size >= q.size) throw DomainError("label: sizes must increase strictly");
  }
}

HesselinkLabel HesselinkLabel::parse(std::string_view text) {
  std::vector<LabelPart> parts;
  std::size_t i = 0;
  auto read_num = [&](std::size_t& out) {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    out = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out = out * 10 + std::size_t(text[i++] - '0');
    return true;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    LabelPart part{0, 0, 1};
    if (!read_num(part.size)) throw ParseError("label: unexpected '" + std::string(1, c) + "'");
    if (i >= text.size() || text[i] != '_') throw ParseError("label: expected '_' after block size");
    ++i;
    if (!read_num(part.chi)) throw ParseError("label: missing chi value");
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (!read_num(part.multiplicity)) throw ParseError("label: missing multiplicity");
    }
    parts.push_back(part);
  }
  try {
    return HesselinkLabel(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

JordanType HesselinkLabel::jordan_type() const {
  std::vector<JordanBlock> b;
  for (const auto& q : parts_) b.push_back({q.size, q.multiplicity});
  return JordanType(std::move(b));
}

std::string HesselinkLabel::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ", ";
    os << parts_[i].size << '_' << parts_[i].chi;
    if (parts_[i].multiplicity != 1) os << '^' << parts_[i].multiplicity;
  }
  os << ')';
  return os.str();
}

HesselinkLabel hesselink_label(const gf::Matrix& u, const SymplecticForm& form) {
  const JordanType t = unisep::jordan_type(u);
  std::vector<LabelPart> parts;
  for (const auto& b : t.blocks()) {
    const std::size_t c = chi(u, form, b.size);
    if (!parts.empty() && c < parts.back().chi) throw Error("hesselink_label: chi decreased with block size");
    parts.push_back({b.size, c, b.multiplicity});
  }
  return HesselinkLabel(std::move(parts));
}

}  // namespace unisep
