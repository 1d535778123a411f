#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "permuta/config.hpp"
#include "permuta/finite_group.hpp"
#include "permuta/free_word.hpp"
#include "permuta/homomorphism.hpp"

namespace permuta {

// Small-group corpus plus S(4) and GL(2,3).
std::vector<std::string> criteria_corpus();

struct CriteriaGroupResult {
  std::string group;
  std::size_t order = 0;
  std::size_t pairs = 0;  // (G, N) pairs, one per subgroup N
  std::size_t permutable = 0;
  std::size_t disagreements = 0;
  bool verdict = false;
};

// Six permutability criteria on every subgroup of one group.
CriteriaGroupResult check_criteria_on_group(const std::string& spec, const Limits& limits = {});

struct RadicalPrimeResult {
  std::string group;
  int p = 0;
  std::size_t order = 0;
  std::size_t op_order = 0;
  std::size_t radical_side_order = 0;
  bool verdict = false;
};

// G n (1 + J(F_pG)) against O_p(G).
RadicalPrimeResult check_unipotent_radical(const std::string& spec, int p, const Limits& limits = {});

struct QuotientCommutativityResult {
  std::string group;
  int p = 0;
  bool applicable = false;  // G' is a p-group
  bool commutative = false;
  bool verdict = false;     // vacuous when not applicable
};

QuotientCommutativityResult check_quotient_commutativity(const std::string& spec, int p, const Limits& limits = {});

struct MagnusSuiteResult {
  std::uint64_t seed = 0;
  std::size_t pairs = 0;
  std::size_t order_violations = 0;      // totality, antisymmetry, transitivity
  std::size_t invariance_violations = 0;  // ca < cb and ac < bc
  std::size_t valuation_pairs = 0;
  std::size_t valuation_violations = 0;
  std::size_t injectivity_words = 0;
  std::size_t injectivity_collisions = 0;
  bool verdict() const {
    return order_violations == 0 && invariance_violations == 0 && valuation_violations == 0 &&
           injectivity_collisions == 0;
  }
};

struct MagnusSuiteConfig {
  std::uint64_t seed = 0;
  std::size_t pairs = 10000;
  std::size_t max_rank = 3;
  std::size_t max_length = 6;
  std::size_t valuation_pairs = 200;
  // Exhaustive injectivity: every reduced word of each listed
  // (rank, length bound), expanded to injectivity_degree.
  std::vector<std::pair<std::size_t, std::size_t>> injectivity = {{1, 6}, {2, 6}, {3, 6}};
  std::size_t injectivity_degree = 7;
};

MagnusSuiteResult run_magnus_suite(const MagnusSuiteConfig& config = {});

// Every reduced word of the given rank with length <= max_length.
std::vector<FreeWord> all_reduced_words(std::size_t rank, std::size_t max_length);

struct Surjection {
  std::string name;
  std::shared_ptr<const FiniteGroup> source;
  std::shared_ptr<const FiniteGroup> target;
  Homomorphism map;
};

// Ten fixed surjections between small permutation and matrix groups.
std::vector<Surjection> pullback_corpus(const Limits& limits = {});

struct PullbackResult {
  std::string name;
  std::size_t permutable_targets = 0;
  std::size_t failures = 0;
  bool verdict = false;
};

// Preimages of permutable subgroups of the target are permutable.
PullbackResult check_pullback(const Surjection& s, const Limits& limits = {});

}  // namespace permuta
