#pragma once

#include <cstddef>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/cohomology.hpp"
#include "zinbiel/linalg.hpp"
#include "zinbiel/zinf.hpp"

namespace zinbiel {

/* A crossed module phi: V -> S presented as the exact sequence
 * 0 -> M -> V -> S -> Z -> 0, with M = ker(phi) and Z a concrete complement
 * presentation of coker(phi). All quotient computations route through the
 * projection pi and the complement, never through symbolic classes. */
struct CrossedExtension {
    CrossedModule xm;  // xm.h lives on V, xm.g on S, xm.phi: V -> S

    std::vector<Vec> m_basis;  // canonical kernel basis of phi, in V
    Matrix incl;               // V.dim x M.dim, columns = m_basis

    std::vector<Vec> im_basis;  // columns of phi at its rref pivot positions
    std::vector<std::size_t> im_pivot_cols;

    std::vector<Vec> z_basis;  // standard S vectors spanning a complement of Im(phi)
    std::vector<std::size_t> z_indices;
    Matrix pi;  // Z.dim x S.dim; kernel = Im(phi), pi restricted to z_basis = identity

    Algebra z;   // induced product on the complement
    Bimodule m;  // induced two-sided action of z on M
};

/* Sections s of pi and q of phi on its image. */
struct SectionPair {
    Matrix s;  // S.dim x Z.dim, pi * s = identity
    Matrix q;  // V.dim x S.dim, phi * q * phi = phi
};

enum class SectionStrategy { pivot, shifted };

/* Builds the exact-sequence presentation. Requires X to pass its checker;
 * the exactness identities and the induced checkers are verified after
 * construction. */
CrossedExtension extension_from_crossed(const CrossedModule& X);

/* Both strategies share s = inclusion of the complement basis. "pivot" takes
 * the q sending each pivot image column back to its standard preimage;
 * "shifted" adds a deterministic kernel-valued perturbation, so the two
 * strategies differ exactly when M is nonzero. */
SectionPair choose_sections(const CrossedExtension& E, SectionStrategy strategy);

/* The obstruction cochain on (Z, M):
 *   g(x,y) = q(s(x) s(y) - s(x y))
 *   theta(x,y,z) = s(x) |> (g(y,z)+g(z,y)) - g(x y, z) + g(x, y z + z y)
 *                  - g(x,y) <| s(z)
 * Values are checked to lie in M (phi of the value = 0) and reported in
 * m_basis coordinates; a value escaping M is a hard error, never projected. */
Cochain theta(const CrossedExtension& E, const SectionPair& sp);

struct XiResult {
    Cochain representative;   // theta at the pivot sections
    CohomologyResult witness; // degree-3 dimensions for the (Z, M) context
};

XiResult xi(const CrossedExtension& E);

/* Whether t1 - t2 is a coboundary in the (z, m) context, decided by exact
 * linear solving against the degree-2 coboundary matrix. */
bool same_class(const Cochain& t1, const Cochain& t2, const Algebra& z, const Bimodule& m);

/* Pushforward of E's crossed module along alpha = 1 + incl u on V and
 * beta = 1 + phi j on S (u: V -> M with u incl = 0, j: S -> V, beta
 * invertible). alpha fixes M pointwise and beta moves vectors only within
 * their Im(phi) coset, so the transported module has the same (Z, M)
 * presentation and an equivalent extension class. */
CrossedModule transport_crossed(const CrossedExtension& E, const Matrix& u, const Matrix& j);

} // namespace zinbiel
