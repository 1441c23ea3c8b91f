"""Pure-Python poset kernels; fallback for the compiled ``_ckernels`` module.

Both modules share one interface.  Inputs and outputs are numpy arrays; here
they are converted to lists so the loops run on plain Python ints (which also
makes this module safe for profiles wider than 64 bits).
"""

import numpy as np


def relation_matrix(profiles):
    """``rel[i, j] = 1`` iff profile i is componentwise <= profile j."""
    rows = [tuple(r) for r in np.asarray(profiles).tolist()]
    n = len(rows)
    rel = np.zeros((n, n), dtype=np.uint8)
    for i, p in enumerate(rows):
        for j, q in enumerate(rows):
            if all(x <= y for x, y in zip(p, q)):
                rel[i, j] = 1
    return rel


def transitive_reduction(rel):
    """Cover pairs: ``i < j`` strictly with nothing strictly in between."""
    r = np.asarray(rel).tolist()
    n = len(r)
    ups = [[j for j in range(n) if j != i and r[i][j]] for i in range(n)]
    cov = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        for j in ups[i]:
            if not any(r[k][j] for k in ups[i] if k != j):
                cov[i, j] = 1
    return cov


def bound_table(rel, lower):
    """Greatest common lower (``lower=True``) or least common upper bound per pair.

    Entry -1 marks a pair without a unique extreme bound.
    """
    r = np.asarray(rel).tolist()
    n = len(r)
    if lower:
        below = lambda x, y: r[x][y]
    else:
        below = lambda x, y: r[y][x]
    out = np.full((n, n), -1, dtype=np.int64)
    for i in range(n):
        for j in range(i, n):
            bounds = [x for x in range(n) if below(x, i) and below(x, j)]
            if not bounds:
                continue
            best = bounds[0]
            for x in bounds[1:]:
                if below(best, x):
                    best = x
            if all(below(x, best) for x in bounds):
                out[i, j] = out[j, i] = best
    return out


def modular_violation(rel, meet, join):
    """First ``(x, y, z)`` with x <= z and ``x ∨ (y ∧ z) != (x ∨ y) ∧ z``, else None."""
    r = np.asarray(rel).tolist()
    mt = np.asarray(meet).tolist()
    jt = np.asarray(join).tolist()
    n = len(r)
    for x in range(n):
        for z in range(n):
            if not r[x][z]:
                continue
            for y in range(n):
                if jt[x][mt[y][z]] != mt[jt[x][y]][z]:
                    return (x, y, z)
    return None
