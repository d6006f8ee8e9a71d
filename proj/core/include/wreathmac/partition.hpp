#ifndef WREATHMAC_PARTITION_HPP
#define WREATHMAC_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wreathmac {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // validated; trailing zeros dropped
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }
  Partition conjugate() const;

  auto operator<=>(const Partition&) const = default;
  std::string str() const;  // "3,1,1"; empty string for the empty partition
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
};

class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(int r) : comps_(r) {}
  explicit MultiPartition(std::vector<Partition> comps) : comps_(std::move(comps)) {}

  int r() const { return static_cast<int>(comps_.size()); }
  int size() const;
  const Partition& operator[](std::size_t i) const { return comps_[i]; }
  Partition& operator[](std::size_t i) { return comps_[i]; }
  const std::vector<Partition>& components() const { return comps_; }
  MultiPartition reversed() const;

  auto operator<=>(const MultiPartition&) const = default;
  std::string str() const;  // "2;;1"
  // r < 0: infer from the number of separators
  static MultiPartition parse(std::string_view text, int r = -1);

 private:
  std::vector<Partition> comps_;
};

// Coefficients in the basis alpha_1..alpha_{r-1} of the sl_r root lattice.
struct RootElem {
  std::vector<long> coeffs;
  bool operator==(const RootElem&) const = default;
  std::string str() const;
};

class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<int> entries);
  DimVector(std::initializer_list<int> e) : DimVector(std::vector<int>(e)) {}
  int r() const { return static_cast<int>(n_.size()); }
  int operator[](long i) const;  // cyclic
  int total() const;
  int min() const;
  // position of x^(i)_k (k is 0-based) in vertex-major flattening
  int flat(int i, int k) const { return offset_[i] + k; }
  const std::vector<int>& entries() const { return n_; }
  bool operator==(const DimVector& o) const { return n_ == o.n_; }
  std::string str() const;
  static DimVector parse(std::string_view text);

 private:
  std::vector<int> n_;
  std::vector<int> offset_;
};

// Partitions of n, lexicographically decreasing: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n, int max_part = -1);
// r-multipartitions of n: ordered by component sizes (first component largest
// first), then by each component in partitions_of order.
std::vector<MultiPartition> multipartitions_of(int n, int r);
// same, with at most bounds[i] rows in component i
std::vector<MultiPartition> multipartitions_of(int n, const DimVector& bounds);

Partition r_core(const Partition& lambda, int r);
MultiPartition r_quotient(const Partition& lambda, int r);
Partition from_core_and_quotient(const Partition& core, const MultiPartition& quot, int r);
MultiPartition reversed_quotient(const Partition& lambda, int r);
bool is_r_core(const Partition& lambda, int r);
int quotient_size(const Partition& lambda, int r);
// all lambda with the given r-core and n quotient boxes, in partitions_of order
std::vector<Partition> fiber(const Partition& core, int r, int n);

std::vector<long> kappa(const Partition& lambda, int r);  // cells per residue
RootElem kappa_cl(const Partition& lambda, int r);

bool dominance_leq(const Partition& mu, const Partition& lambda);
bool wreath_comparable(const Partition& mu, const Partition& lambda, int r);

// <alpha_i^vee, gamma>, with alpha_0^vee = -(alpha_1^vee + ... + alpha_{r-1}^vee)
long coroot_pairing(int i, const RootElem& gamma, int r);
bool is_compatible(const DimVector& N, const RootElem& gamma, int r);
DimVector minimal_compatible(const RootElem& gamma, int r, int floor);

}  // namespace wreathmac

#endif
