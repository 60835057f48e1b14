#pragma once

#include "qtau/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtau {

// Sequence (i_1,...,i_n) of indices; as a group element it is
// s_{i_n} ... s_{i_1}, so s_{i_1} acts first.
using WeylWord = std::vector<int>;

// Root datum: GCM, symmetrizer and concrete dual lattices Qv (coroots) and P
// (weights) with dual bases, so the pairing is the coordinate dot product.
struct RootDatum {
  std::vector<std::string> labels;       // index set I
  IMat cartan;                           // a_ij
  IVec sym;                              // d_i
  std::vector<std::string> coroot_names;  // basis symbols of Qv
  std::vector<std::string> weight_names;  // dual basis of P
  std::vector<IVec> coroots;             // alpha^v_i in Qv coordinates
  std::vector<IVec> roots;               // alpha_i in P coordinates
  std::vector<IVec> fundamentals;        // Lambda_i in P coordinates

  int rank() const { return static_cast<int>(labels.size()); }
  int lattice_rank() const { return static_cast<int>(coroot_names.size()); }
  int index_of(const std::string& label) const;
  long pair(const IVec& coroot, const IVec& weight) const { return dot(coroot, weight); }
  IVec rho() const;
  IVec zero() const { return IVec(lattice_rank(), 0); }
  // Checks the lattice axioms; throws InputError describing the first violation.
  void check_lattice() const;
};

// Validates a GCM and builds the default model: Qv free on the simple
// coroots, P free on the fundamental weights, alpha_j = sum_i a_ij Lambda_i.
RootDatum validate_gcm(const IMat& a, const std::optional<IVec>& d_hint = std::nullopt,
                       std::vector<std::string> labels = {});

// Minimal positive integer symmetrizer; throws InputError if none exists.
IVec minimal_symmetrizer(const IMat& a);

IVec reflect_coroot(const RootDatum& rd, int i, IVec beta);
IVec reflect_weight(const RootDatum& rd, int i, IVec lambda);
// Root-lattice coordinates: s_i(alpha_j) = alpha_j - a_ij alpha_i.
IVec reflect_root(const RootDatum& rd, int i, IVec v);

IVec weyl_act_coroot(const RootDatum& rd, const WeylWord& w, IVec beta);
IVec weyl_act_weight(const RootDatum& rd, const WeylWord& w, IVec lambda);
IVec weyl_act_root(const RootDatum& rd, const WeylWord& w, IVec v);
WeylWord inverse_word(const WeylWord& w);

// w o lambda = w(lambda + rho) - rho
IVec shifted_act(const RootDatum& rd, const WeylWord& w, const IVec& lambda);

struct ReducedInfo {
  bool reduced;
  int length;
};
ReducedInfo is_reduced(const RootDatum& rd, const WeylWord& w);

bool is_dominant(const RootDatum& rd, const IVec& lambda);

struct DominantDecomposition {
  WeylWord word;  // nu = word(mu)
  IVec mu;
};
// nullopt when the iteration cap is exhausted.
std::optional<DominantDecomposition> dominant_decompose(const RootDatum& rd, const IVec& nu,
                                                        int cap = 10000);

// True when both words act identically on Qv and P.
bool same_weyl_element(const RootDatum& rd, const WeylWord& a, const WeylWord& b);

// m_ij of the braid relation from (a_ij, a_ji); 0 if not one of the finite cases.
int braid_order(const RootDatum& rd, int i, int j);

void check_word(const RootDatum& rd, const WeylWord& w);

// All reduced words of length <= n, shortest first.
std::vector<WeylWord> reduced_words(const RootDatum& rd, int n);

}  // namespace qtau
