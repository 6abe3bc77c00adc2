"""The type-A pinning: SL_n generators, stratum identification, and the
totally positive samplers.

Stratum extraction works by structured Gaussian elimination: only row and
column operations lying in the relevant Borel subgroups are applied, so
the signed permutation matrix left at the end names the cell.  The
rank-profile dictionaries are not taken from the literature; the test
suite re-derives them by sampling b1 * lift(w) * b2 over whole symmetric
groups and checking recovery.
"""

from __future__ import annotations

import zlib
from fractions import Fraction
from random import Random
from typing import Optional, Sequence

from .cartan import cartan_A
from .errors import NotLeq, PatternViolation
from .ratmat import RatMatrix, unipotent_lu, unipotent_ul
from .twisted import j_leq, j_length, minimal_c, mr_positive_subexpression
from .weyl import ParabolicContext, WeylElement, weyl_group


class PinnedGroup:
    """SL_n with the pinning x_i(a) = I + a E_{i,i+1}, y_i(a) = I + a E_{i+1,i},
    alpha_i^vee(c) = diag(.., c, c^{-1}, ..) and s_i-dot = x_i(1) y_i(-1) x_i(1).

    Node i (0-indexed, type A_{n-1}) touches matrix slots i and i+1.
    """

    def __init__(self, n: int, allow_large: bool = False):
        if n < 2:
            raise ValueError("SL_n needs n >= 2")
        if n > 5 and not allow_large:
            raise ValueError("n > 5 needs allow_large=True (exact minors get big)")
        self.n = n
        self.cartan = cartan_A(n - 1)
        self.weyl = weyl_group(self.cartan)
        self._lift_cache: dict = {}
        self._perm_cache: dict = {}

    # -- generators ---------------------------------------------------------

    def x(self, i: int, a) -> RatMatrix:
        self._check_node(i)
        rows = [[1 if r == c else 0 for c in range(self.n)] for r in range(self.n)]
        rows[i][i + 1] = a
        return RatMatrix(rows)

    def y(self, i: int, a) -> RatMatrix:
        self._check_node(i)
        rows = [[1 if r == c else 0 for c in range(self.n)] for r in range(self.n)]
        rows[i + 1][i] = a
        return RatMatrix(rows)

    def cochar(self, i: int, c) -> RatMatrix:
        self._check_node(i)
        if c == 0:
            raise ValueError("torus parameter must be nonzero")
        rows = [[0] * self.n for _ in range(self.n)]
        for r in range(self.n):
            rows[r][r] = 1
        rows[i][i] = c
        rows[i + 1][i + 1] = Fraction(1) / Fraction(c)
        return RatMatrix(rows)

    def _check_node(self, i: int):
        if not 0 <= i < self.n - 1:
            raise IndexError(f"node {i} out of range for SL_{self.n}")

    def lift_simple(self, i: int) -> RatMatrix:
        return self.x(i, 1) * self.y(i, -1) * self.x(i, 1)

    def lift(self, w) -> RatMatrix:
        """The lift along a reduced word; independent of the word chosen."""
        if isinstance(w, WeylElement):
            word = self.weyl.canonical_word(w)
        else:
            word = tuple(w)
            if self.weyl.length(self.weyl.from_word(word)) != len(word):
                raise NotLeq("lift needs a reduced word")
        got = self._lift_cache.get(word)
        if got is None:
            got = RatMatrix.identity(self.n)
            for i in word:
                got = got * self.lift_simple(i)
            self._lift_cache[word] = got
        return got

    def pin_generator(self, kind: str, i: Optional[int], value) -> RatMatrix:
        if kind == "x":
            return self.x(i, value)
        if kind == "y":
            return self.y(i, value)
        if kind == "cochar":
            return self.cochar(i, value)
        if kind == "lift":
            return self.lift(value)
        raise ValueError(f"unknown generator kind {kind!r}")

    # -- permutations ---------------------------------------------------------

    def perm_of_weyl(self, w: WeylElement) -> tuple:
        """p with lift(w) supported on entries (p[j], j)."""
        m = self.lift(w)
        p = []
        for j in range(self.n):
            col = [r for r in range(self.n) if m.rows[r][j] != 0]
            assert len(col) == 1
            p.append(col[0])
        return tuple(p)

    def weyl_of_perm(self, p: Sequence[int]) -> WeylElement:
        p = tuple(p)
        got = self._perm_cache.get(p)
        if got is not None:
            return got
        q = list(p)
        word = []
        while True:
            pos = {v: k for k, v in enumerate(q)}
            i = next((i for i in range(self.n - 1) if pos[i] > pos[i + 1]), None)
            if i is None:
                break
            word.append(i)
            q = [i + 1 if v == i else (i if v == i + 1 else v) for v in q]
        w = self.weyl.from_word(word)
        assert self.perm_of_weyl(w) == p
        self._perm_cache[p] = w
        return w


# -- stratum extraction ------------------------------------------------------

def _extract_perm(g: RatMatrix, left_to_right: bool, pivot_bottom: bool) -> tuple:
    """Permutation of the Bruhat-type cell containing g.

    Only row operations adding the pivot row to rows on the allowed side
    and column operations within the sweep direction are used, i.e. the
    elimination multiplies g by elements of the two Borel subgroups that
    define the cell.  What remains is a signed permutation matrix.
    """
    n = g.n
    m = [[Fraction(x) for x in row] for row in g.rows]
    cols = range(n) if left_to_right else range(n - 1, -1, -1)
    used = set()
    p = [None] * n
    for j in cols:
        cand = [i for i in range(n) if i not in used and m[i][j] != 0]
        if not cand:
            raise ZeroDivisionError("matrix is singular")
        i0 = max(cand) if pivot_bottom else min(cand)
        p[j] = i0
        used.add(i0)
        pv = m[i0][j]
        for i in cand:
            if i != i0:
                f = m[i][j] / pv
                m[i] = [x - f * y for x, y in zip(m[i], m[i0])]
        rest = range(j + 1, n) if left_to_right else range(j - 1, -1, -1)
        for k in rest:
            if m[i0][k] != 0:
                f = m[i0][k] / pv
                for r in range(n):
                    m[r][k] -= f * m[r][j]
    return tuple(p)


def bruhat_stratum(pin: PinnedGroup, g: RatMatrix) -> WeylElement:
    """The w with g in B+ w B+ (columns left to right, bottom-most pivots)."""
    return pin.weyl_of_perm(_extract_perm(g, True, True))


def birkhoff_stratum(pin: PinnedGroup, g: RatMatrix) -> WeylElement:
    """The v with g in B- v B+ (columns left to right, top-most pivots)."""
    return pin.weyl_of_perm(_extract_perm(g, True, False))


def double_minus_stratum(pin: PinnedGroup, g: RatMatrix) -> WeylElement:
    """The u with g in B- u B- (columns right to left, top-most pivots)."""
    return pin.weyl_of_perm(_extract_perm(g, False, False))


def mixed_stratum(pin: PinnedGroup, g: RatMatrix) -> WeylElement:
    """The v with g in B+ v B- (columns right to left, bottom-most pivots)."""
    return pin.weyl_of_perm(_extract_perm(g, False, True))


def richardson_stratum(pin: PinnedGroup, g: RatMatrix) -> tuple:
    v = birkhoff_stratum(pin, g)
    w = bruhat_stratum(pin, g)
    if not pin.weyl.bruhat_leq(v, w):
        raise AssertionError("nonemptiness pattern violated: v must be <= w")
    return v, w


def double_bruhat_stratum(pin: PinnedGroup, g: RatMatrix) -> tuple:
    return bruhat_stratum(pin, g), double_minus_stratum(pin, g)


def twisted_stratum(pin: PinnedGroup, g: RatMatrix, J: ParabolicContext) -> tuple:
    """Index (v, w) of the twisted cell through g, via translation by w_{J,0}."""
    wj0 = J.longest()
    v1, w1 = richardson_stratum(pin, g * pin.lift(wj0))
    wj0_inv = wj0.inverse()
    v, w = v1 * wj0_inv, w1 * wj0_inv
    if not j_leq(v, w, J):
        raise AssertionError("twisted stratum pair fails v <=J w")
    return v, w


def canonical_flag(g: RatMatrix) -> RatMatrix:
    """The unique representative of g*B+ with pivot-normalized columns."""
    n = g.n
    m = [[Fraction(x) for x in row] for row in g.rows]
    for j in range(n):
        i0 = max(i for i in range(n) if m[i][j] != 0)
        pv = m[i0][j]
        for r in range(n):
            m[r][j] /= pv
        for k in range(j + 1, n):
            f = m[i0][k]
            if f != 0:
                for r in range(n):
                    m[r][k] -= f * m[r][j]
    return RatMatrix(m)


def canonical_flag_minus(g: RatMatrix) -> RatMatrix:
    """The unique representative of g*B- (columns swept right to left)."""
    n = g.n
    m = [[Fraction(x) for x in row] for row in g.rows]
    for j in range(n - 1, -1, -1):
        i0 = min(i for i in range(n) if m[i][j] != 0)
        pv = m[i0][j]
        for r in range(n):
            m[r][j] /= pv
        for k in range(j - 1, -1, -1):
            f = m[i0][k]
            if f != 0:
                for r in range(n):
                    m[r][k] -= f * m[r][j]
    return RatMatrix(m)


# -- membership patterns ------------------------------------------------------

def _juminus_positions(pin: PinnedGroup, J: ParabolicContext) -> set:
    """Matrix positions allowed in ^J U^-: J-internal above the diagonal,
    block-crossing below."""
    n = pin.n
    out = set()
    for i in range(n):
        for k in range(n):
            if i == k:
                continue
            lo, hi = min(i, k), max(i, k)
            inside = all(node in J.J for node in range(lo, hi))
            if (i < k and inside) or (i > k and not inside):
                out.add((i, k))
    return out


def in_juminus(pin: PinnedGroup, m: RatMatrix, J: ParabolicContext) -> bool:
    allowed = _juminus_positions(pin, J)
    for i in range(pin.n):
        for k in range(pin.n):
            if i == k:
                if m.rows[i][k] != 1:
                    return False
            elif m.rows[i][k] != 0 and (i, k) not in allowed:
                return False
    return True


def big_cell_test(pin: PinnedGroup, g: RatMatrix, r: WeylElement,
                  J: ParabolicContext) -> bool:
    """Does the flag of g lie in r-dot ^JU^- ^JB^+ / ^JB^+ ?

    Transported through w_{J,0} this is LU-decomposability: all leading
    principal minors of (r-dot w-dot_{J,0})^{-1} g w-dot_{J,0} nonzero.
    """
    wj0 = pin.lift(J.longest())
    m = (pin.lift(r) * wj0).inverse() * g * wj0
    return all(x != 0 for x in m.leading_minors())


def tnn_test(pin: PinnedGroup, g: RatMatrix) -> bool:
    """All minors nonnegative, exhaustively over equal-size subsets."""
    from itertools import combinations
    if pin.n > 5:
        raise ValueError("tnn_test budget: n <= 5")
    n = pin.n
    for k in range(1, n + 1):
        subsets = list(combinations(range(n), k))
        for rows in subsets:
            for cols in subsets:
                if g.minor(rows, cols) < 0:
                    return False
    return True


# -- samplers -----------------------------------------------------------------

class CellSample:
    """A sampled point: exact matrix, the stratum datum, and its parameters."""

    def __init__(self, matrix: RatMatrix, index: tuple, params: tuple):
        self.matrix = matrix
        self.index = index
        self.params = tuple(params)
        if any(p <= 0 for p in self.params):
            raise ValueError("cell parameters must be positive")

    def to_json(self) -> dict:
        from .ratmat import _frac_str, matrix_to_json
        kind = self.index[0]
        datum = [list(el.canonical_word()) if isinstance(el, WeylElement) else el
                 for el in self.index[1:]]
        return {"kind": kind, "index": datum,
                "params": [_frac_str(p) for p in self.params],
                "matrix": matrix_to_json(self.matrix)}


def sample_mr(pin: PinnedGroup, kind: str, v: WeylElement, word_w: Sequence[int],
              params: Sequence, check: bool = True) -> CellSample:
    """Marsh-Rietsch product: lifts at the positive subexpression's letters,
    one-parameter subgroup elements at the skips.

    kind "negative" uses y at skips and its flag is asserted to land in
    the Richardson stratum (v, eval(word_w)).
    """
    if kind not in ("negative", "positive"):
        raise ValueError("kind must be 'negative' or 'positive'")
    word_w = tuple(word_w)
    marks = mr_positive_subexpression(v, word_w)
    skips = sum(1 for m in marks if m is None)
    params = tuple(params)
    if len(params) != skips:
        raise ValueError(f"expected {skips} parameters, got {len(params)}")
    if any(p <= 0 for p in params):
        raise ValueError("parameters must be positive")
    gen = pin.y if kind == "negative" else pin.x
    out = RatMatrix.identity(pin.n)
    it = iter(params)
    for letter, mark in zip(word_w, marks):
        out = out * (pin.lift_simple(letter) if mark is not None else gen(letter, next(it)))
    if check and kind == "negative":
        w = pin.weyl.from_word(word_w)
        if richardson_stratum(pin, out) != (v, w):
            raise AssertionError("negative Marsh-Rietsch sample missed its stratum")
    return CellSample(out, (kind, v, word_w), params)


def sample_twisted_cell(pin: PinnedGroup, v: WeylElement, w: WeylElement,
                        J: ParabolicContext, params: Sequence,
                        check: bool = True) -> CellSample:
    """A point of the twisted cell for (v, w): the product of a negative
    Marsh-Rietsch factor for (v^J c, w^J) and a positive one for
    (w_J, c^{-1} v_J), c the minimal witness."""
    g = pin.weyl
    c = minimal_c(v, w, J)  # raises NotComparable when v <=J w fails
    v_rep, v_part = J.decompose(v)
    w_rep, w_part = J.decompose(w)
    params = tuple(params)
    dim = j_length(w, J) - j_length(v, J)
    if len(params) != dim:
        raise ValueError(f"expected {dim} parameters, got {len(params)}")
    word1 = g.canonical_word(w_rep)
    target1 = v_rep * c
    skips1 = len(word1) - g.length(target1)
    word2 = g.canonical_word(c.inverse()) + g.canonical_word(v_part)
    assert g.length(g.from_word(word2)) == len(word2)
    s1 = sample_mr(pin, "negative", target1, word1, params[:skips1], check=False)
    s2 = sample_mr(pin, "positive", w_part, word2, params[skips1:], check=False)
    matrix = s1.matrix * s2.matrix
    if check and twisted_stratum(pin, matrix, J) != (v, w):
        raise AssertionError("twisted sample missed its stratum")
    return CellSample(matrix, ("twisted", v, w, tuple(sorted(J.J)), c), params)


def sigma_factorize(pin: PinnedGroup, g: RatMatrix, r: WeylElement,
                    J: ParabolicContext) -> tuple:
    """Both unipotent splittings of g in r-dot ^JU^- r-dot^{-1}.

    Returns (g2, h2) with g = g1*g2 = h1*h2, g1/h2 lower-unitriangular
    and g2/h1 upper-unitriangular; both right factors are checked against
    the conjugated root support.
    """
    rdot = pin.lift(r)
    if not in_juminus(pin, rdot.inverse() * g * rdot, J):
        raise PatternViolation("input is not in the conjugated ^JU^- domain")
    g1, g2 = unipotent_lu(g)
    h1, h2 = unipotent_ul(g)
    perm = pin.perm_of_weyl(r)
    allowed = {(perm[a], perm[b]) for (a, b) in _juminus_positions(pin, J)}
    for mat, upper in ((g2, True), (h2, False)):
        for i in range(pin.n):
            for k in range(pin.n):
                if i == k:
                    continue
                if mat.rows[i][k] != 0:
                    if (i, k) not in allowed or (i < k) != upper:
                        raise PatternViolation("factor support leaves the root pattern")
    return g2, h2


def sigma_recompose(g2: RatMatrix, h2: RatMatrix) -> RatMatrix:
    """The unique g with LU right factor g2 and UL right factor h2."""
    L, U = unipotent_lu(g2 * h2.inverse())
    return L.inverse() * g2


def sigma_domain_representative(pin: PinnedGroup, m: RatMatrix, r: WeylElement,
                                J: ParabolicContext) -> RatMatrix:
    """The g in r-dot ^JU^- r-dot^{-1} whose flag equals the flag of m.

    Requires the flag of m to lie in the big cell at r (DecompositionFails
    otherwise): write m = r-dot * u * b with u in ^JU^- and b in ^JB^+ by
    transporting through w_{J,0} and splitting off the lower-unipotent
    part, then conjugate u back.
    """
    from .ratmat import ldu
    wj0 = pin.lift(J.longest())
    rd = pin.lift(r)
    L, D, U = ldu(wj0.inverse() * rd.inverse() * m * wj0)
    u = wj0 * L * wj0.inverse()
    return rd * u * rd.inverse()


# -- seeded parameter generation ----------------------------------------------

class ParamSampler:
    """Deterministic positive rationals with small numerator and denominator.

    Child samplers are derived from a stable key so batteries stay
    deterministic regardless of iteration order.
    """

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._rng = Random(self.seed)

    def child(self, *key) -> "ParamSampler":
        h = zlib.crc32(repr(key).encode("utf8"))
        return ParamSampler(self.seed ^ h)

    def integer(self, lo: int = 1, hi: int = 10) -> int:
        return self._rng.randint(lo, hi)

    def fraction(self, hi: int = 10) -> Fraction:
        return Fraction(self._rng.randint(1, hi), self._rng.randint(1, hi))

    def integers(self, count: int, lo: int = 1, hi: int = 10) -> tuple:
        return tuple(self._rng.randint(lo, hi) for _ in range(count))
