#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bicirc/family_spec.hpp"
#include "bicirc/graph.hpp"
#include "bicirc/permutation.hpp"

namespace bicirc {

/// A distinguished automorphism shipped with a generated graph.
struct Witness {
  Permutation perm;
  CycleType type;
};

struct Generated {
  Graph graph;
  std::optional<Witness> witness;
};

// Vertex conventions, fixed so output is reproducible:
//   G(2p,r), G(2,p,r): x -> x, x' -> p + x
//   GP(n,r): u_i -> i, v_i -> n + i
//   BC_n[L,M,R]: h_0 -> h, h_1 -> n + h
//   Cay(D_2n, S): a^i -> i, b a^i -> n + i
//   B(PG), B'(PG): points 0..N-1, hyperplanes N..2N-1 (order of projective_incidence)
//   B'(H(11)): residues 0..10, translates R+i -> 11 + i
//   K_{n,n}-nK_2: a_i -> i, b_i -> n + i
//   Petersen: 2-subsets of {0..4} in lexicographic order, adjacent iff disjoint

/// Parameter violations throw std::invalid_argument.
Generated generate(const FamilySpec& spec);

Graph gen_complete_multipartite(std::uint32_t m, std::uint32_t n);
Graph gen_knn_minus_matching(std::uint32_t n);
/// Words of length d over Z_r, index sum x_i r^(d-1-i).
Graph gen_hamming(std::uint32_t d, std::uint32_t r);
/// Q_{d-1} with antipodal pairs also joined.
Graph gen_folded_cube(std::uint32_t d);
/// Cayley graph of GF(16)+ on the five non-zero cubes.
Graph gen_clebsch();
Graph gen_petersen();

Generated gen_cay_cyclic(std::uint32_t n, std::vector<std::uint32_t> s);
Generated gen_cay_pe(std::uint32_t p, std::uint32_t e);
Generated gen_g2p(std::uint32_t p, std::uint32_t r);
Generated gen_g2pr(std::uint32_t p, std::uint32_t r);
Graph gen_bpg(std::uint32_t d, std::uint32_t q, bool primed);
Generated gen_bh11prime();
Generated gen_gp(std::uint32_t n, std::uint32_t r);
Generated gen_bc(std::uint32_t n, std::vector<std::uint32_t> l, std::vector<std::uint32_t> m,
                 std::vector<std::uint32_t> r);
Generated gen_dihedral_cayley(std::uint32_t n, std::vector<std::uint32_t> rot, std::vector<std::uint32_t> ref);
Generated gen_gamma_nk(std::uint32_t n, std::uint32_t k, std::uint32_t r);

/// Smallest primitive root modulo an odd prime.
std::uint32_t primitive_root(std::uint32_t p);
/// The subgroup of order r of Z_p^*, sorted.
std::vector<std::uint32_t> unit_subgroup(std::uint32_t p, std::uint32_t r);
/// Exponents 0, 1, 1+r, ..., 1+r+...+r^(k-2) of the reflections b a^e.
std::vector<std::uint32_t> gamma_exponents(std::uint32_t n, std::uint32_t k, std::uint32_t r);
/// All r in Z_n^* with 1 + r + ... + r^(k-1) = 0 mod n and k distinct exponents.
std::vector<std::uint32_t> gamma_parameters(std::uint32_t n, std::uint32_t k);

}  // namespace bicirc
