"""Dense complex linear algebra over a tracial matrix algebra.

Operators are square complex128 numpy arrays.  The normalized trace
tau(A) = Trace(A) / d  makes m_d(C) a tracial *-algebra with tau(1) = 1,
and the GNS scalar product

    (A, B) = tau(A B*)

turns it into a Hilbert space in which the identity is a unit vector.
Everything downstream (curvature operators, refinements, Clifford
towers, GNS quotients) speaks this dialect.
"""

from __future__ import annotations

import json

import numpy as np
import scipy.linalg

# Frobenius-norm comparison tolerance used when a caller does not override.
DEFAULT_TOL = 1e-10

# Normality gate for the spectral exponential.
NORMALITY_TOL = 1e-10


def as_operator(a) -> np.ndarray:
    """Coerce input to a square complex128 matrix.

    Raises
    ------
    ValueError
        If the input is not a square 2-d array.
    """
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] == 0:
        raise ValueError("expected a nonempty matrix")
    return m


def adjoint(a) -> np.ndarray:
    """Conjugate transpose A*."""
    return as_operator(a).conj().T


def normalized_trace(a) -> complex:
    """tau(A) = Trace(A) / dim.  tau(1) = 1 for every dimension."""
    m = as_operator(a)
    return complex(np.trace(m)) / m.shape[0]


def gns_inner(a, b) -> complex:
    """Scalar product (A, B) = tau(A B*).

    Positive definite: (A, A) = tau(A A*) > 0 for A != 0, and the
    identity has unit length.
    """
    return normalized_trace(as_operator(a) @ adjoint(b))


def frobenius(a) -> float:
    """Frobenius norm, the default residual metric."""
    return float(np.linalg.norm(np.asarray(a)))


def operator_norm(a) -> float:
    """Largest singular value."""
    return float(np.linalg.norm(as_operator(a), 2))


def normality_residual(a) -> float:
    """||A A* - A* A|| in operator norm; zero exactly for normal A."""
    m = as_operator(a)
    ad = m.conj().T
    return operator_norm(m @ ad - ad @ m)


def expm_normal(a, tol: float = NORMALITY_TOL) -> np.ndarray:
    """Exponential of a normal matrix via unitary diagonalization.

    The Schur form of a normal matrix is diagonal, so A = U diag(w) U*
    with U unitary and exp(A) = U diag(exp(w)) U*.  Non-normal input is
    rejected rather than silently mis-exponentiated.

    Parameters
    ----------
    a : array_like
        Square matrix with ||A A* - A* A|| <= tol in operator norm.
    tol : float
        Normality gate.

    Raises
    ------
    ValueError
        If the normality residual exceeds tol.
    """
    m = as_operator(a)
    res = normality_residual(m)
    if res > tol:
        raise ValueError(
            f"matrix is not normal: ||A A* - A* A|| = {res:.3e} exceeds {tol:.1e}"
        )
    t, z = scipy.linalg.schur(m, output="complex")
    w = np.exp(np.diag(t))
    return (z * w) @ z.conj().T


def kron(a, b) -> np.ndarray:
    """Kronecker product; kron(I_2, A) = diag(A, A) is the tower doubling."""
    return np.kron(as_operator(a), as_operator(b))


def random_matrix(rng: np.random.Generator, dim: int, scale: float = 1.0) -> np.ndarray:
    """Complex Gaussian matrix, independent N(0, scale^2/2) real and imaginary parts."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    re = rng.standard_normal((dim, dim))
    im = rng.standard_normal((dim, dim))
    return (scale / np.sqrt(2.0)) * (re + 1j * im)


# ---------------------------------------------------------------------------
# Serialization.  A matrix is stored as {"dim": d, "entries": [[re, im], ...]}
# with d*d entries in row-major order; a coefficient vector is stored as
# {"coefficients": [[re, im], ...]}.
# ---------------------------------------------------------------------------


def matrix_to_dict(a) -> dict:
    """Row-major [re, im] pair encoding of a square matrix."""
    m = as_operator(a)
    return {
        "dim": int(m.shape[0]),
        "entries": [[float(z.real), float(z.imag)] for z in m.ravel()],
    }


def matrix_from_dict(obj) -> np.ndarray:
    if not isinstance(obj, dict) or "dim" not in obj or "entries" not in obj:
        raise ValueError("matrix object needs 'dim' and 'entries' fields")
    d = obj["dim"]
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"matrix 'dim' must be a positive integer, got {d!r}")
    entries = obj["entries"]
    if len(entries) != d * d:
        raise ValueError(f"expected {d * d} entries for dim {d}, got {len(entries)}")
    flat = np.empty(d * d, dtype=np.complex128)
    for k, pair in enumerate(entries):
        re, im = _as_pair(pair)
        flat[k] = complex(re, im)
    return flat.reshape(d, d)


def vector_to_dict(v) -> dict:
    arr = np.asarray(v, dtype=np.complex128)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d coefficient vector, got shape {arr.shape}")
    return {"coefficients": [[float(z.real), float(z.imag)] for z in arr]}


def vector_from_dict(obj, length: int | None = None) -> np.ndarray:
    if not isinstance(obj, dict) or "coefficients" not in obj:
        raise ValueError("vector object needs a 'coefficients' field")
    coeffs = obj["coefficients"]
    if length is not None and len(coeffs) != length:
        raise ValueError(f"expected {length} coefficients, got {len(coeffs)}")
    out = np.empty(len(coeffs), dtype=np.complex128)
    for k, pair in enumerate(coeffs):
        re, im = _as_pair(pair)
        out[k] = complex(re, im)
    return out


def _as_pair(pair):
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ValueError(f"entry must be a [re, im] pair, got {pair!r}")
    re, im = float(pair[0]), float(pair[1])
    if not (np.isfinite(re) and np.isfinite(im)):
        raise ValueError(f"entry must be finite, got {pair!r}")
    return re, im


def save_matrix(path, a) -> None:
    with open(path, "w") as fh:
        json.dump(matrix_to_dict(a), fh)
        fh.write("\n")


def load_matrix(path) -> np.ndarray:
    with open(path) as fh:
        return matrix_from_dict(json.load(fh))


def save_vector(path, v) -> None:
    with open(path, "w") as fh:
        json.dump(vector_to_dict(v), fh)
        fh.write("\n")


def load_vector(path, length: int | None = None) -> np.ndarray:
    with open(path) as fh:
        return vector_from_dict(json.load(fh), length=length)
