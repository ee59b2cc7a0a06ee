# Third-party imports
import numpy as np




def row_reduce_mod(A: np.ndarray, q: int) -> tuple:

    """
    Reduced row echelon form over GF(q).

    Args:
        A (np.ndarray): Integer matrix.
        q (int): Prime modulus, small enough that q*q fits in int64.

    Returns:
        tuple: (reduced matrix, list of pivot columns).
    """

    M = np.array(A, dtype=np.int64) % q
    rows, cols = M.shape
    pivots = []
    r = 0

    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(M[r:, c])[0]
        if nonzero.size == 0:
            continue
        p = r + int(nonzero[0])
        if p != r:
            M[[r, p]] = M[[p, r]]
        inv = pow(int(M[r, c]), -1, q)
        M[r] = (M[r] * inv) % q
        factors = M[:, c].copy()
        factors[r] = 0
        M = (M - np.outer(factors, M[r])) % q
        pivots.append(c)
        r += 1

    return M, pivots

def nullspace_mod(A: np.ndarray, q: int) -> np.ndarray:

    """Basis (as rows) of the right nullspace {x : A x = 0} over GF(q)."""

    A = np.atleast_2d(np.array(A, dtype=np.int64))
    cols = A.shape[1]
    R, pivots = row_reduce_mod(A, q)
    free = [c for c in range(cols) if c not in pivots]

    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, p in enumerate(pivots):
            basis[i, p] = (-R[r, f]) % q

    return basis
