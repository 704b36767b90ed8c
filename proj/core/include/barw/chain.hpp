#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "barw/matrix.hpp"

namespace barw {

// Chain complex of finitely generated free Z-modules in degrees 0..maxdim.
// boundary(n) : C_n -> C_{n-1} for 1 <= n <= maxdim.  Column g of the
// boundary matrix is the boundary of generator g of degree n.
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(std::vector<std::size_t> dims, std::vector<IntMatrix> boundaries,
               std::vector<std::vector<std::string>> labels = {});

  std::size_t maxdim() const { return dims_.empty() ? 0 : dims_.size() - 1; }
  std::size_t dim(std::size_t n) const { return n < dims_.size() ? dims_[n] : 0; }
  const std::vector<std::size_t>& dims() const { return dims_; }

  // The matrix of d_n; identically zero outside 1..maxdim.
  const IntMatrix& boundary(std::size_t n) const;

  const std::string& label(std::size_t n, std::size_t g) const;
  bool has_labels() const { return !labels_.empty(); }

  // Checks d(n) * d(n+1) == 0 for all n; throws on failure.
  void validate() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<IntMatrix> boundaries_;  // boundaries_[n] for n >= 1
  std::vector<std::vector<std::string>> labels_;
};

Int euler_characteristic(const ChainComplex& c);

// Line-oriented text format:
//   chain <D>
//   dim <n> <rank>
//   bd <n> <row> <col> <value>
// Round-trips bit-exactly.
std::string write_chain(const ChainComplex& c);
ChainComplex read_chain(std::istream& in);
ChainComplex read_chain_string(const std::string& text);

}  // namespace barw
