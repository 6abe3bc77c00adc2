"""Integer simplicial homology via Smith normal form.

Certifies sphere signatures at the homology level only; reports never
claim more than "sphere-homology certificate".  Arbitrary-precision
integers throughout; no modular shortcuts.
"""

from __future__ import annotations

from typing import Optional

from .errors import Inconclusive
from .posets import SimplicialComplex

FACE_BUDGET = 50_000


class ChainComplexZ:
    """Boundary matrices of a simplicial complex over Z.

    ``faces[k]`` is the ordered basis of k-faces (sorted vertex tuples);
    ``boundary(k)`` maps k-chains to (k-1)-chains.  The composite of two
    consecutive boundaries is asserted to vanish on construction.
    """

    def __init__(self, faces: dict, boundaries: dict):
        self.faces = faces
        self.boundaries = boundaries
        for k in sorted(boundaries):
            if k - 1 in boundaries:
                prod = _mat_mul(boundaries[k - 1], boundaries[k])
                if any(any(x != 0 for x in row) for row in prod):
                    raise AssertionError("boundary of boundary is nonzero")

    def boundary(self, k: int):
        return self.boundaries.get(k, [])


def _mat_mul(a, b):
    if not a or not b:
        return []
    rows, mid, cols = len(a), len(b), len(b[0]) if b else 0
    if not a[0]:
        return [[0] * cols for _ in range(rows)]
    out = []
    for i in range(rows):
        arow = a[i]
        out.append([sum(arow[k] * b[k][j] for k in range(mid)) for j in range(cols)])
    return out


def boundary_matrices(c: SimplicialComplex) -> ChainComplexZ:
    """Standard boundary operators with alternating signs on sorted tuples."""
    faces = c.faces()
    total = sum(len(v) for v in faces.values())
    if total > FACE_BUDGET:
        raise Inconclusive(f"complex has {total} faces, budget is {FACE_BUDGET}")
    index = {k: {f: i for i, f in enumerate(faces[k])} for k in faces}
    boundaries = {}
    for k in sorted(faces):
        if k == 0:
            continue
        rows = len(faces[k - 1])
        mat = [[0] * len(faces[k]) for _ in range(rows)]
        for j, f in enumerate(faces[k]):
            for drop in range(len(f)):
                sub = f[:drop] + f[drop + 1:]
                mat[index[k - 1][sub]][j] = 1 if drop % 2 == 0 else -1
        boundaries[k] = mat
    return ChainComplexZ(faces, boundaries)


def smith_normal_form(matrix) -> tuple:
    """Invariant factors d1 | d2 | ... and the rank, via exact row/col ops.

    Pivoting is deterministic: smallest magnitude first, row-major
    tie-break.
    """
    m = [list(row) for row in matrix]
    R = len(m)
    C = len(m[0]) if R else 0
    t = 0
    while t < min(R, C):
        piv = None
        best = None
        for i in range(t, R):
            for j in range(t, C):
                v = m[i][j]
                if v != 0 and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != t:
            m[t], m[i0] = m[i0], m[t]
        if j0 != t:
            for row in m:
                row[t], row[j0] = row[j0], row[t]
        while True:
            # clear the pivot column
            restart = False
            for i in range(t + 1, R):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    if q:
                        for j in range(t, C):
                            m[i][j] -= q * m[t][j]
                    if m[i][t] != 0:
                        m[t], m[i] = m[i], m[t]
                        restart = True
                        break
            if restart:
                continue
            # clear the pivot row
            for j in range(t + 1, C):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    if q:
                        for i in range(t, R):
                            m[i][j] -= q * m[i][t]
                    if m[t][j] != 0:
                        for i in range(t, R):
                            m[i][t], m[i][j] = m[i][j], m[i][t]
                        restart = True
                        break
            if restart:
                continue
            # pivot must divide the remaining block
            offender = None
            for i in range(t + 1, R):
                for j in range(t + 1, C):
                    if m[i][j] % m[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, C):
                m[t][j] += m[offender][j]
        t += 1
    diag = [abs(m[k][k]) for k in range(t)]
    return diag, t


class HomologyProfile:
    """Reduced Betti numbers and torsion coefficients per dimension."""

    def __init__(self, betti: dict, torsion: dict):
        self.betti = {k: v for k, v in betti.items() if v}
        self.torsion = {k: list(v) for k, v in torsion.items() if v}
        for coeffs in self.torsion.values():
            if any(x < 2 for x in coeffs):
                raise ValueError("torsion coefficients must be >= 2")
        self.reduced = True

    def __repr__(self):
        return f"HomologyProfile(betti={self.betti}, torsion={self.torsion})"

    def __eq__(self, other):
        return (isinstance(other, HomologyProfile)
                and self.betti == other.betti and self.torsion == other.torsion)


def reduced_homology(c: SimplicialComplex) -> HomologyProfile:
    """Reduced integral homology from SNF ranks of the augmented complex."""
    cx = boundary_matrices(c)
    faces = cx.faces
    if not faces:
        return HomologyProfile({-1: 1}, {})
    top = max(faces)
    counts = {k: len(faces[k]) for k in faces}
    snf = {}
    snf[0] = ([1], 1)  # augmentation C_0 -> Z; rank 1 since C_0 is nonempty
    for k in range(1, top + 1):
        snf[k] = smith_normal_form(cx.boundary(k))
    betti = {}
    torsion = {}
    betti[-1] = 1 - snf[0][1]
    for k in range(0, top + 1):
        rk = snf[k][1]
        rk1 = snf[k + 1][1] if k + 1 <= top else 0
        betti[k] = counts[k] - rk - rk1
        if k + 1 <= top:
            tor = [d for d in snf[k + 1][0] if d > 1]
            if tor:
                torsion[k] = tor
    return HomologyProfile(betti, torsion)


def is_sphere_signature(h: HomologyProfile, d: int) -> bool:
    """Reduced homology is Z in dimension d and vanishes elsewhere.

    d = -1 is the empty complex, the sphere bounding a point.
    """
    return h.torsion == {} and h.betti == {d: 1}


def sphere_dimension(h: HomologyProfile) -> Optional[int]:
    """The d with sphere signature, or None."""
    if h.torsion or len(h.betti) != 1:
        return None
    (d, mult), = h.betti.items()
    return d if mult == 1 else None


def euler_characteristic(c: SimplicialComplex) -> int:
    """Reduced Euler characteristic from face counts."""
    faces = c.faces()
    return sum((-1) ** k * len(v) for k, v in faces.items()) - 1


def homology_to_json(h: HomologyProfile) -> dict:
    dims = sorted(set(h.betti) | set(h.torsion))
    top = max(dims, default=-1)
    betti = [h.betti.get(k, 0) for k in range(-1, top + 1)]
    torsion = [h.torsion.get(k, []) for k in range(-1, top + 1)]
    return {"betti": betti, "torsion": torsion, "sphere": sphere_dimension(h)}
