#include "barw/chain.hpp"

#include <sstream>
#include <stdexcept>

namespace barw {

ChainComplex::ChainComplex(std::vector<std::size_t> dims,
                           std::vector<IntMatrix> boundaries,
                           std::vector<std::vector<std::string>> labels)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)), labels_(std::move(labels)) {
  if (dims_.empty()) dims_.push_back(0);
  if (boundaries_.size() < dims_.size()) boundaries_.resize(dims_.size());
  for (std::size_t n = 1; n < dims_.size(); ++n) {
    IntMatrix& b = boundaries_[n];
    if (b.rows() == 0 && b.cols() == 0) b = IntMatrix(dims_[n - 1], dims_[n]);
    if (b.rows() != dims_[n - 1] || b.cols() != dims_[n])
      throw std::invalid_argument("boundary matrix shape mismatch at degree " +
                                  std::to_string(n));
  }
}

const IntMatrix& ChainComplex::boundary(std::size_t n) const {
  static const IntMatrix empty;
  if (n == 0 || n >= boundaries_.size()) return empty;
  return boundaries_[n];
}

const std::string& ChainComplex::label(std::size_t n, std::size_t g) const {
  static const std::string none;
  if (n >= labels_.size() || g >= labels_[n].size()) return none;
  return labels_[n][g];
}

void ChainComplex::validate() const {
  for (std::size_t n = 1; n + 1 < dims_.size(); ++n) {
    if (dims_[n + 1] == 0 || dims_[n - 1] == 0) continue;
    if (!(boundary(n) * boundary(n + 1)).is_zero())
      throw std::logic_error("d o d != 0 between degrees " + std::to_string(n + 1) +
                             " and " + std::to_string(n - 1));
  }
}

Int euler_characteristic(const ChainComplex& c) {
  Int chi = 0;
  for (std::size_t n = 0; n < c.dims().size(); ++n) {
    Int term(c.dim(n));
    chi += (n % 2 == 0) ? term : -term;
  }
  return chi;
}

std::string write_chain(const ChainComplex& c) {
  std::ostringstream out;
  out << "chain " << c.maxdim() << "\n";
  for (std::size_t n = 0; n <= c.maxdim(); ++n)
    out << "dim " << n << " " << c.dim(n) << "\n";
  for (std::size_t n = 1; n <= c.maxdim(); ++n) {
    const IntMatrix& b = c.boundary(n);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b.at(i, j) != 0)
          out << "bd " << n << " " << i << " " << j << " " << b.at(i, j) << "\n";
  }
  return out.str();
}

ChainComplex read_chain(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t maxdim = 0;
  bool have_header = false;
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> bds;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag.empty() || tag[0] == '#') continue;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("chain format, line " + std::to_string(lineno) + ": " + msg);
    };
    if (tag == "chain") {
      if (!(ls >> maxdim)) fail("expected maxdim");
      have_header = true;
      dims.assign(maxdim + 1, 0);
      bds.assign(maxdim + 1, IntMatrix());
    } else if (tag == "dim") {
      if (!have_header) fail("dim before chain header");
      std::size_t n, r;
      if (!(ls >> n >> r)) fail("expected: dim <n> <rank>");
      if (n > maxdim) fail("degree out of range");
      dims[n] = r;
    } else if (tag == "bd") {
      if (!have_header) fail("bd before chain header");
      std::size_t n, i, j;
      std::string val;
      if (!(ls >> n >> i >> j >> val)) fail("expected: bd <n> <row> <col> <value>");
      if (n == 0 || n > maxdim) fail("boundary degree out of range");
      IntMatrix& b = bds[n];
      if (b.rows() == 0 && b.cols() == 0) b = IntMatrix(dims[n - 1], dims[n]);
      if (i >= b.rows() || j >= b.cols()) fail("boundary index out of range");
      b.at(i, j) = Int(val);
    } else {
      fail("unknown tag '" + tag + "'");
    }
  }
  if (!have_header) throw std::invalid_argument("chain format: missing 'chain <D>' header");
  return ChainComplex(std::move(dims), std::move(bds));
}

ChainComplex read_chain_string(const std::string& text) {
  std::istringstream in(text);
  return read_chain(in);
}

}  // namespace barw
