"""GNS-style representation theory over finite multi-matrix algebras.

The algebra is a direct sum of full matrix blocks m_{k_i}(C) with
positive trace weights lambda_i summing to one:

    tau(x_1 + ... + x_n) = sum_i lambda_i Trace(x_i) / k_i.

A positive functional phi given by density blocks D_i >= 0 acts as
phi(x) = sum_i Trace(D_i x_i).  Its null ideal

    I_phi = { A : phi(A* A) = 0 }

is a left ideal, computed here as the kernel of the Gram matrix
phi(E_a* E_b) over the matrix-unit basis.  The two-sided obstruction
space J = span{ A B : A in I_phi, B* in I_phi } is invariant under left
multiplication, so left multiplication restricts to its GNS-orthogonal
complement; that restriction is the induced representation rho.  The
coupling weight of the representation is

    gamma = sum_i lambda_i rank_i(J-perp) / k_i^2  in [0, 1],

the tau-size of the part of the algebra that survives.  gamma = 1 is
attained exactly by faithful phi; in the infinite (II_1) setting the
survivor is a proper corner and the bound is strict, a boundary effect
this finite model keeps visible rather than excludes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_WEIGHT_TOL = 1e-12
_PSD_TOL = 1e-12
_RANK_TOL = 1e-10


@dataclass(frozen=True)
class FiniteAlgebra:
    """Direct sum of matrix blocks (k_i, lambda_i), weights summing to 1."""

    summands: tuple

    def __post_init__(self):
        cleaned = []
        for entry in self.summands:
            k, w = entry
            if not isinstance(k, int) or k < 1:
                raise ValueError(f"summand dimension must be a positive integer, got {k!r}")
            w = float(w)
            if not np.isfinite(w) or w <= 0.0:
                raise ValueError(f"summand weight must be positive, got {w!r}")
            cleaned.append((k, w))
        if not cleaned:
            raise ValueError("algebra needs at least one summand")
        total = sum(w for _, w in cleaned)
        if abs(total - 1.0) > _WEIGHT_TOL:
            raise ValueError(f"summand weights must sum to 1, got {total!r}")
        object.__setattr__(self, "summands", tuple(cleaned))

    @property
    def dims(self) -> tuple:
        return tuple(k for k, _ in self.summands)

    @property
    def weights(self) -> tuple:
        return tuple(w for _, w in self.summands)

    @property
    def total_dim(self) -> int:
        """Linear dimension sum k_i^2 of the algebra as a vector space."""
        return sum(k * k for k in self.dims)

    # -- elements are tuples of per-summand complex matrices ---------------

    def element(self, blocks) -> tuple:
        blocks = tuple(np.asarray(b, dtype=np.complex128) for b in blocks)
        if len(blocks) != len(self.summands):
            raise ValueError(f"expected {len(self.summands)} blocks, got {len(blocks)}")
        for b, k in zip(blocks, self.dims):
            if b.shape != (k, k):
                raise ValueError(f"block shape {b.shape} does not match summand dim {k}")
        return blocks

    def zero(self) -> tuple:
        return tuple(np.zeros((k, k), dtype=np.complex128) for k in self.dims)

    def identity(self) -> tuple:
        return tuple(np.eye(k, dtype=np.complex128) for k in self.dims)

    def add(self, x, y) -> tuple:
        return tuple(a + b for a, b in zip(x, y))

    def scale(self, c, x) -> tuple:
        return tuple(c * a for a in x)

    def mul(self, x, y) -> tuple:
        return tuple(a @ b for a, b in zip(x, y))

    def adj(self, x) -> tuple:
        return tuple(a.conj().T for a in x)

    def trace(self, x) -> complex:
        return sum(w * complex(np.trace(b)) / k
                   for b, (k, w) in zip(x, self.summands))

    def inner(self, x, y) -> complex:
        """GNS scalar product tau(x y*)."""
        return self.trace(self.mul(x, self.adj(y)))

    def basis(self) -> list:
        """Matrix units, summand-major then row-major; length total_dim."""
        out = []
        for idx, k in enumerate(self.dims):
            for a in range(k):
                for b in range(k):
                    blocks = list(self.zero())
                    unit = np.zeros((k, k), dtype=np.complex128)
                    unit[a, b] = 1.0
                    blocks[idx] = unit
                    out.append(tuple(blocks))
        return out

    def coords(self, x) -> np.ndarray:
        """Isometry onto C^total_dim: tau(x y*) = <coords x, coords y>."""
        parts = [np.sqrt(w / k) * b.ravel()
                 for b, (k, w) in zip(x, self.summands)]
        return np.concatenate(parts)

    def from_coords(self, v) -> tuple:
        v = np.asarray(v, dtype=np.complex128)
        blocks = []
        pos = 0
        for k, w in self.summands:
            n = k * k
            blocks.append((v[pos:pos + n] / np.sqrt(w / k)).reshape(k, k))
            pos += n
        return tuple(blocks)

    def left_mult_matrix(self, x) -> np.ndarray:
        """Left multiplication by x in GNS coordinates (block Kronecker)."""
        blocks = [np.kron(b, np.eye(k)) for b, k in zip(x, self.dims)]
        d = self.total_dim
        out = np.zeros((d, d), dtype=np.complex128)
        pos = 0
        for blk in blocks:
            n = blk.shape[0]
            out[pos:pos + n, pos:pos + n] = blk
            pos += n
        return out

    def random_element(self, rng: np.random.Generator, scale: float = 1.0) -> tuple:
        return tuple(
            (scale / np.sqrt(2.0)) * (rng.standard_normal((k, k)) + 1j * rng.standard_normal((k, k)))
            for k in self.dims
        )


@dataclass(frozen=True)
class AlgebraState:
    """Positive functional phi(x) = sum Trace(D_i x_i), phi(1) = 1."""

    algebra: FiniteAlgebra
    densities: tuple

    def phi(self, x) -> complex:
        return sum(complex(np.trace(d @ b)) for d, b in zip(self.densities, x))


def make_state(algebra: FiniteAlgebra, densities, tol: float = _PSD_TOL) -> AlgebraState:
    """Validate density blocks and normalize the total mass to one.

    Raises
    ------
    ValueError
        If a block is not Hermitian positive semidefinite, or the total
        trace vanishes.
    """
    blocks = algebra.element(densities)
    for d in blocks:
        if np.linalg.norm(d - d.conj().T) > tol:
            raise ValueError("density blocks must be Hermitian")
        if len(d) and float(np.linalg.eigvalsh(d).min()) < -tol:
            raise ValueError("density blocks must be positive semidefinite")
    total = sum(float(np.trace(d).real) for d in blocks)
    if total <= tol:
        raise ValueError("state must have positive total mass")
    return AlgebraState(algebra=algebra, densities=tuple(d / total for d in blocks))


def gns_null_ideal(state: AlgebraState, tol: float = _RANK_TOL) -> list:
    """Orthonormal (GNS) basis of the left ideal { A : phi(A* A) = 0 }.

    Found as the kernel of the positive Gram matrix phi(E_a* E_b) over
    the matrix-unit basis.
    """
    alg = state.algebra
    basis = alg.basis()
    d = alg.total_dim
    gram = np.empty((d, d), dtype=np.complex128)
    for a, ea in enumerate(basis):
        ea_adj = alg.adj(ea)
        for b, eb in enumerate(basis):
            gram[a, b] = state.phi(alg.mul(ea_adj, eb))
    vals, vecs = np.linalg.eigh(gram)
    cutoff = tol * max(1.0, float(vals[-1])) if len(vals) else tol
    kernel = vecs[:, vals <= cutoff]
    if kernel.shape[1] == 0:
        return []
    # Kernel vectors are coefficient vectors; orthonormalize in GNS coords.
    elements = []
    for col in kernel.T:
        x = alg.zero()
        for c, e in zip(col, basis):
            if c != 0:
                x = alg.add(x, alg.scale(c, e))
        elements.append(x)
    coords = np.column_stack([alg.coords(x) for x in elements])
    q, _ = np.linalg.qr(coords)
    return [alg.from_coords(q[:, j]) for j in range(q.shape[1])]


def left_ideal_residual(state: AlgebraState, ideal, rng: np.random.Generator,
                        samples: int = 5) -> float:
    """Worst phi((X A)* (X A)) over random X and ideal basis elements A."""
    alg = state.algebra
    worst = 0.0
    for _ in range(samples):
        x = alg.random_element(rng)
        for a in ideal:
            xa = alg.mul(x, a)
            worst = max(worst, abs(state.phi(alg.mul(alg.adj(xa), xa))))
    return float(worst)


@dataclass(frozen=True)
class GnsRepresentation:
    """Induced representation on the complement of J = I_phi . I_phi*."""

    state: AlgebraState
    ideal: tuple
    ideal_dim: int
    j_dim: int
    perp_coords: np.ndarray
    per_summand_ranks: tuple
    gamma: float
    rho_kernel_dim: int
    faithful: bool

    @property
    def perp_dim(self) -> int:
        return self.perp_coords.shape[1]

    def represent(self, x) -> np.ndarray:
        """rho(x): left multiplication compressed to J-perp."""
        alg = self.state.algebra
        lx = alg.left_mult_matrix(alg.element(x))
        q = self.perp_coords
        return q.conj().T @ lx @ q

    def projector(self) -> np.ndarray:
        """Orthogonal projection onto J-perp in GNS coordinates."""
        q = self.perp_coords
        return q @ q.conj().T


def gns_representation(state: AlgebraState, tol: float = _RANK_TOL) -> GnsRepresentation:
    """Build the induced representation and its coupling weight gamma.

    J is spanned by products A B with A in the null ideal and B* in the
    null ideal; it is a left submodule, so its orthogonal complement
    carries rho(x) = P L_x P.  gamma sums lambda_i rank_i / k_i^2 over
    the per-summand ranks of J-perp.
    """
    alg = state.algebra
    ideal = gns_null_ideal(state, tol=tol)
    d = alg.total_dim

    if ideal:
        prods = []
        for a in ideal:
            for b in ideal:
                prods.append(alg.coords(alg.mul(a, alg.adj(b))))
        pmat = np.column_stack(prods)
        u, s, _ = np.linalg.svd(pmat, full_matrices=True)
        j_dim = int(np.count_nonzero(s > tol * max(1.0, float(s[0]))))
        perp = u[:, j_dim:]
    else:
        j_dim = 0
        perp = np.eye(d, dtype=np.complex128)

    # J splits along the center, so J-perp does too; count each block.
    ranks = []
    pos = 0
    for k, _ in alg.summands:
        n = k * k
        block = perp[pos:pos + n, :]
        ranks.append(int(np.linalg.matrix_rank(block, tol=1e-8)) if block.size else 0)
        pos += n
    gamma = sum(w * r / (k * k) for (k, w), r in zip(alg.summands, ranks))

    # Kernel of rho over the matrix-unit basis.
    perp_dim = perp.shape[1]
    if perp_dim:
        rows = []
        for e in alg.basis():
            lx = alg.left_mult_matrix(e)
            rows.append((perp.conj().T @ lx @ perp).ravel())
        rho_mat = np.array(rows)
        rho_kernel = d - int(np.linalg.matrix_rank(rho_mat, tol=1e-8))
    else:
        rho_kernel = d

    return GnsRepresentation(
        state=state,
        ideal=tuple(ideal),
        ideal_dim=len(ideal),
        j_dim=j_dim,
        perp_coords=perp,
        per_summand_ranks=tuple(ranks),
        gamma=float(gamma),
        rho_kernel_dim=rho_kernel,
        faithful=bool(rho_kernel == 0),
    )
