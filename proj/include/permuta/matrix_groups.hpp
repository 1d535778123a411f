#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "permuta/config.hpp"
#include "permuta/finite_group.hpp"
#include "permuta/matrix_fq.hpp"
#include "permuta/subgroup_analysis.hpp"

namespace permuta {

// Generator calculus. Indices i, j are 1-based, as in t_12.

// I_n + a E_ij, i != j.
MatrixFq transvection(const Field& f, std::size_t n, std::size_t i, std::size_t j, FqElement a);
// I_n + (a - 1) E_ii, a != 0.
MatrixFq dilation(const Field& f, std::size_t n, std::size_t i, FqElement a);
// d_i(-1) t_ij(a); an involution.
MatrixFq t_prime(const Field& f, std::size_t n, std::size_t i, std::size_t j, FqElement a);

// d_i(-1) t_ij(a) d_i(-1) == t_ij(-a).
bool conjugation_identity_check(const Field& f, std::size_t n, std::size_t i, std::size_t j, FqElement a);

std::vector<MatrixFq> all_transvections(const Field& f, std::size_t n);

// SL from every transvection; GL adds d_1(g) for a primitive g.
FiniteGroup generate_SL(std::size_t n, int q, const Limits& limits = {});
FiniteGroup generate_GL(std::size_t n, int q, const Limits& limits = {});

// Elements of a matrix group with determinant 1.
IndexSet determinant_one(const FiniteGroup& g);

// The subgroup-lattice scan: true iff no subgroup is permutable without
// being normal.
struct PermutableNormalCheck {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<SubgroupReport> evidence;           // one per subgroup, canonical order
  std::vector<std::size_t> permutable_not_normal;  // indices into evidence
  bool verdict = false;
};

PermutableNormalCheck check_all_permutable_subgroups_are_normal(std::shared_ptr<const FiniteGroup> g,
                                                                const Limits& limits = {});

struct Lemma31Report {
  std::vector<PermutableNormalCheck> groups;  // GL_2(F_2), GL_2(F_3)
  bool verdict = false;
};

Lemma31Report verify_lemma_3_1(const Limits& limits = {});

struct Theorem32Report {
  std::size_t n = 0;
  int q = 0;
  PermutableNormalCheck scan;
  std::size_t sl_order = 0;
  std::size_t noncentral_normal = 0;
  bool noncentral_normal_contain_sl = false;
  bool verdict = false;
};

// Requires n > 2, or n == 2 with q >= 4 (smaller cases belong to
// verify_lemma_3_1 and raise HypothesisFailed).
Theorem32Report check_theorem_3_2(std::size_t n, int q, const Limits& limits = {});

}  // namespace permuta
