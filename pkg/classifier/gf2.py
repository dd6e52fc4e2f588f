# classifier/gf2.py
import numpy as np


def gf2_rank(matrix: np.ndarray) -> int:
    """
    Rank over GF(2) by Gaussian elimination with XOR row operations.
    """
    a = (np.asarray(matrix, dtype=np.int64) % 2).astype(np.uint8)
    if a.size == 0:
        return 0
    m, n = a.shape
    r = 0
    for c in range(n):
        if r >= m:
            break
        rows = np.where(a[r:, c] == 1)[0]
        if rows.size == 0:
            continue
        p = r + int(rows[0])
        if p != r:
            a[[r, p], :] = a[[p, r], :]
        ones = np.where(a[:, c] == 1)[0]
        ones = ones[ones != r]
        if ones.size:
            a[ones, :] ^= a[r, :]
        r += 1
    return r
