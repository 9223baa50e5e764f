"""Matrix representations of Clifford algebras and their doubling tower.

A quadratic form of signature (r, s) on an (r+s)-dimensional real space
yields generators g_1 .. g_m, m = r + s, subject to

    g_i g_j + g_j g_i = 2 eps_i delta_ij 1,   eps_i = +1 (i <= r), -1 (i > r).

The generators are realized by an alternating Pauli tensor chain inside
m_{2^ceil(m/2)}(C).  After complexification only m matters: the span of
the 2^m generator monomials has dimension exactly 2^m, and adding two
generators multiplies that span dimension by four, which is the matrix
form of the period-two behaviour of complex Clifford algebras.  Climbing
the tower is A -> kron(I_2, A) = diag(A, A); this duplication keeps the
normalized trace on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_operator, frobenius, kron

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=np.complex128)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128)

# Maximum generator count accepted by verify_periodicity; the level m+2
# check needs a rank computation over 2^(m+2) monomials.
MAX_PERIODICITY_GENERATORS = 10

# span_dimension stacks all 2^m monomials and their Gram matrix; past the
# periodicity ceiling of m + 2 = 12 that is gigabytes of dense storage.
MAX_SPAN_GENERATORS = MAX_PERIODICITY_GENERATORS + 2


@dataclass(frozen=True)
class QuadraticSignature:
    """Signature (r, s): r squares of +1, s squares of -1."""

    r: int
    s: int

    def __post_init__(self):
        if not (isinstance(self.r, int) and isinstance(self.s, int)):
            raise ValueError("signature entries must be integers")
        if self.r < 0 or self.s < 0:
            raise ValueError(f"signature entries must be >= 0, got ({self.r}, {self.s})")

    @property
    def m(self) -> int:
        return self.r + self.s


@dataclass(frozen=True)
class CliffordTower:
    """Concrete generators at tower level n, acting on C^(2^n)."""

    signature: QuadraticSignature
    generators: tuple
    level: int

    @property
    def dim(self) -> int:
        return 2 ** self.level


def build_generators(signature: QuadraticSignature) -> CliffordTower:
    """Generators of the (r, s) Clifford algebra as 2^ceil(m/2) matrices.

    The chain puts X or Y at slot ceil(k/2) behind a prefix of Z factors:

        g_{2k-1} = Z^(k-1) (x) X (x) 1 ...,   g_{2k} = Z^(k-1) (x) Y (x) 1 ...

    and the s generators of negative square are the same matrices times i.
    The empty signature (0, 0) is the scalar algebra: no generators,
    dimension one.
    """
    m = signature.m
    level = (m + 1) // 2
    gens = []
    for k in range(1, m + 1):
        slot = (k + 1) // 2  # 1-based position of the X/Y factor
        factors = [PAULI_Z] * (slot - 1)
        factors.append(PAULI_X if k % 2 == 1 else PAULI_Y)
        factors.extend([np.eye(2, dtype=np.complex128)] * (level - slot))
        g = factors[0]
        for f in factors[1:]:
            g = np.kron(g, f)
        if k > signature.r:
            g = 1j * g
        gens.append(g)
    return CliffordTower(signature=signature, generators=tuple(gens), level=level)


def relation_residual(tower: CliffordTower) -> float:
    """Worst Frobenius defect of g_i g_j + g_j g_i = 2 eps_i delta_ij."""
    m = tower.signature.m
    eye = np.eye(tower.dim, dtype=np.complex128)
    worst = 0.0
    for i in range(m):
        gi = tower.generators[i]
        eps = 1.0 if i < tower.signature.r else -1.0
        for j in range(i, m):
            gj = tower.generators[j]
            target = 2.0 * eps * eye if i == j else 0.0
            worst = max(worst, frobenius(gi @ gj + gj @ gi - target))
    return worst


def embed_up(a, levels: int = 1) -> np.ndarray:
    """Climb the tower: A -> diag(A, A), repeated.

    Duplicating the diagonal blocks leaves the normalized trace
    untouched, with no floating error beyond the summation itself.
    """
    if not isinstance(levels, int) or levels < 0:
        raise ValueError(f"levels must be a nonnegative integer, got {levels!r}")
    out = as_operator(a)
    eye2 = np.eye(2, dtype=np.complex128)
    for _ in range(levels):
        out = kron(eye2, out)
    return out


def _monomials(tower: CliffordTower) -> np.ndarray:
    """All 2^m ordered products of generators, stacked as row vectors."""
    d = tower.dim
    mons = [np.eye(d, dtype=np.complex128)]
    for g in tower.generators:
        mons.extend([mon @ g for mon in mons])
    return np.array([mon.ravel() for mon in mons])


def span_dimension(tower: CliffordTower) -> int:
    """Linear-span dimension of the generator monomials.

    Computed as the rank of the Gram matrix of the 2^m monomials under
    the GNS scalar product; for a faithfully represented level this is
    exactly 2^m.
    """
    m = tower.signature.m
    if m > MAX_SPAN_GENERATORS:
        raise ValueError(
            f"generator count {m} exceeds the span bound {MAX_SPAN_GENERATORS}"
        )
    v = _monomials(tower)
    gram = (v @ v.conj().T) / tower.dim
    return int(np.linalg.matrix_rank(gram, hermitian=True))


def verify_periodicity(signature: QuadraticSignature) -> dict:
    """Compare monomial span dimensions at levels m and m + 2.

    Complexified, adding two generators tensors on a full 2x2 matrix
    factor, so the span dimension must grow by a factor of four.  Only
    even m is meaningful for the two-step comparison; the extension
    appends two generators of positive square.

    Returns
    -------
    dict with keys span_m, span_m_plus_2, factor, periodic.
    """
    m = signature.m
    if m % 2 != 0:
        raise ValueError(f"periodicity check needs an even generator count, got m = {m}")
    if m > MAX_PERIODICITY_GENERATORS:
        raise ValueError(
            f"generator count {m} exceeds the supported bound {MAX_PERIODICITY_GENERATORS}"
        )
    base = span_dimension(build_generators(signature))
    extended = span_dimension(
        build_generators(QuadraticSignature(signature.r + 2, signature.s))
    )
    return {
        "span_m": base,
        "span_m_plus_2": extended,
        "factor": extended // base if base else 0,
        "periodic": extended == 4 * base,
    }


# ---------------------------------------------------------------------------
# Wedge pairing on 2-forms of a 4-torus / 4-manifold coefficient space.
# Basis order (e12, e13, e14, e23, e24, e34); orientation e1^e2^e3^e4.
# ---------------------------------------------------------------------------

# Pairing of basis 2-forms: <e_ij, e_kl> is the coefficient of e1234 in
# e_ij ^ e_kl.  Nonzero only on complementary index pairs, with the sign
# of the permutation (i, j, k, l).
WEDGE_PAIRING = np.array(
    [
        [0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 0.0, 0.0, -1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0, 0.0, 0.0],
        [0.0, -1.0, 0.0, 0.0, 0.0, 0.0],
        [1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    ]
)


def pairing_matrix() -> np.ndarray:
    """The symmetric wedge-pairing matrix; squares to the identity."""
    return WEDGE_PAIRING.copy()


def indefinite_pairing_form(coeffs_a, coeffs_b):
    """Bilinear wedge pairing of two 2-forms given by 6-coefficient vectors.

    Real on real input; the quadratic form Q(a) = <a, a> has signature
    (3, 3), positive on self-dual and negative on anti-self-dual forms.
    No conjugation is applied, so complex coefficient vectors pair
    bilinearly, which is what integration of a wedge product does.
    """
    a = np.asarray(coeffs_a)
    b = np.asarray(coeffs_b)
    if a.shape != (6,) or b.shape != (6,):
        raise ValueError(
            f"expected 6-coefficient vectors, got shapes {a.shape} and {b.shape}"
        )
    value = a @ WEDGE_PAIRING @ b
    if np.iscomplexobj(value):
        z = complex(value)
        return z.real if z.imag == 0.0 else z
    return float(value)
