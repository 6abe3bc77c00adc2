"""Weyl groups of symmetrizable generalized Cartan matrices.

Elements are exact integer matrices acting on the simple-root basis
(columns are the images of the simple roots), which is a faithful
representation uniformly across finite, affine and indefinite type.
Equality is matrix equality, so elements are hashable and enumeration
can deduplicate by key.

Determinism rule used everywhere: whenever a descent or a reduced word
must be chosen, the smallest node index wins.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .cartan import CartanMatrix
from .errors import BudgetExceeded

Word = tuple  # sequence of node indices

DEFAULT_BUDGET = 20_000


def _mat_mul(a, b, n):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _mat_inv_int(mat, n):
    """Inverse of an integer matrix with determinant +-1, kept integral."""
    from fractions import Fraction
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular; not a Weyl element")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = aug[i][n + j]
            if v.denominator != 1:
                raise ValueError("inverse is not integral; not a Weyl element")
            row.append(int(v))
        out.append(tuple(row))
    return tuple(out)


class WeylElement:
    """A Weyl group element as an integer matrix on the simple-root basis."""

    __slots__ = ("group", "mat")

    def __init__(self, group: "WeylGroup", mat):
        self.group = group
        self.mat = mat

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.group is not self.group:
            raise ValueError("elements live in different Weyl groups")
        return self.group._wrap(_mat_mul(self.mat, other.mat, self.group.n))

    def __eq__(self, other) -> bool:
        return (isinstance(other, WeylElement) and self.group is other.group
                and self.mat == other.mat)

    def __hash__(self) -> int:
        return hash(self.mat)

    def inverse(self) -> "WeylElement":
        return self.group._wrap(_mat_inv_int(self.mat, self.group.n))

    def act(self, vec: Sequence[int]) -> tuple:
        """Image of a root-lattice vector (coordinates in the simple roots)."""
        m, n = self.mat, self.group.n
        return tuple(sum(m[i][k] * vec[k] for k in range(n)) for i in range(n))

    def is_identity(self) -> bool:
        return self.mat == self.group._id_mat

    def length(self) -> int:
        return self.group.length(self)

    def canonical_word(self) -> Word:
        return self.group.canonical_word(self)

    def __repr__(self) -> str:
        word = self.group.canonical_word(self)
        return "W[" + ",".join(self.group.cartan.labels[i] for i in word) + "]" if word else "W[e]"


class WeylGroup:
    """Element factory plus the memo tables for one Cartan matrix.

    All operations are pure; the internal caches are only ever appended
    to, so concurrent readers never observe an inconsistent state.
    """

    def __init__(self, cartan: CartanMatrix, budget: int = DEFAULT_BUDGET):
        self.cartan = cartan
        self.n = cartan.size
        self.budget = budget
        self._id_mat = _identity(self.n)
        self._elements: dict = {}
        self._simple = []
        a = cartan.entries
        for i in range(self.n):
            # column j is alpha_j - a[j][i] * alpha_i
            m = [[1 if r == c else 0 for c in range(self.n)] for r in range(self.n)]
            for j in range(self.n):
                m[i][j] -= a[j][i]
            self._simple.append(self._wrap(tuple(tuple(r) for r in m)))
        self.identity = self._wrap(self._id_mat)
        self._length: dict = {self._id_mat: 0}
        self._word: dict = {self._id_mat: ()}
        self._bruhat: dict = {}

    def _wrap(self, mat) -> WeylElement:
        el = self._elements.get(mat)
        if el is None:
            el = WeylElement(self, mat)
            self._elements[mat] = el
        return el

    def simple(self, i: int) -> WeylElement:
        if not 0 <= i < self.n:
            raise IndexError(f"node index {i} out of range 0..{self.n - 1}")
        return self._simple[i]

    def from_word(self, word: Iterable[int]) -> WeylElement:
        el = self.identity
        for i in word:
            el = el * self.simple(i)
        return el

    # -- descents and length -------------------------------------------

    def _col_negative(self, mat, i: int) -> bool:
        col = [mat[k][i] for k in range(self.n)]
        return all(x <= 0 for x in col) and any(x < 0 for x in col)

    def right_descents(self, w: WeylElement) -> set:
        return {i for i in range(self.n) if self._col_negative(w.mat, i)}

    def left_descents(self, w: WeylElement) -> set:
        return self.right_descents(w.inverse())

    def descents(self, w: WeylElement, side: str) -> set:
        if side == "right":
            return self.right_descents(w)
        if side == "left":
            return self.left_descents(w)
        raise ValueError("side must be 'left' or 'right'")

    def length(self, w: WeylElement) -> int:
        known = self._length.get(w.mat)
        if known is not None:
            return known
        # Greedy right-descent stripping; the step count is the length.
        path = []
        cur = w
        steps = 0
        while cur.mat not in self._length:
            ds = self.right_descents(cur)
            if not ds:
                if not cur.is_identity():
                    raise ValueError("descent-free non-identity matrix; corrupted element")
                break
            path.append(cur.mat)
            cur = cur * self.simple(min(ds))
            steps += 1
            if steps > self.budget:
                raise BudgetExceeded("length reduction exceeded step budget")
        base = self._length[cur.mat]
        for k, m in enumerate(reversed(path)):
            self._length[m] = base + k + 1
        return self._length[w.mat]

    def canonical_word(self, w: WeylElement) -> Word:
        """Lexicographically smallest reduced word (smallest left descent first)."""
        cached = self._word.get(w.mat)
        if cached is not None:
            return cached
        letters = []
        winv = w.inverse()
        steps = 0
        while not winv.is_identity():
            ds = self.right_descents(winv)  # right descents of w^-1 = left descents of w
            i = min(ds)
            letters.append(i)
            winv = winv * self.simple(i)
            steps += 1
            if steps > self.budget:
                raise BudgetExceeded("word extraction exceeded step budget")
        word = tuple(letters)
        self._word[w.mat] = word
        return word

    # -- Bruhat order ---------------------------------------------------

    def bruhat_leq(self, v: WeylElement, w: WeylElement) -> bool:
        """Subword test on the canonical word of w, memoized."""
        if v.group is not self or w.group is not self:
            raise ValueError("elements live in different Weyl groups")
        key = (v.mat, w.mat)
        known = self._bruhat.get(key)
        if known is not None:
            return known
        if self.length(v) > self.length(w):
            self._bruhat[key] = False
            return False
        word = self.canonical_word(w)
        memo: dict = {}

        def scan(k: int, t: WeylElement) -> bool:
            # Can t be spelled as a reduced subword of word[:k]?
            if t.is_identity():
                return True
            if k == 0:
                return False
            mkey = (k, t.mat)
            got = memo.get(mkey)
            if got is not None:
                return got
            res = scan(k - 1, t)
            if not res:
                i = word[k - 1]
                if self._col_negative(t.mat, i):  # right descent of t
                    res = scan(k - 1, t * self.simple(i))
            memo[mkey] = res
            return res

        out = scan(len(word), v)
        self._bruhat[key] = out
        return out

    # -- enumeration ------------------------------------------------------

    def ball(self, max_length: int, letters: Optional[Iterable[int]] = None,
             budget: Optional[int] = None) -> list:
        """All elements of length <= max_length over the given letters.

        Breadth-first with matrix-keyed deduplication; raises
        BudgetExceeded instead of silently truncating.
        """
        if budget is None:
            budget = self.budget
        gens = sorted(letters) if letters is not None else list(range(self.n))
        seen = {self._id_mat}
        out = [self.identity]
        frontier = [self.identity]
        for _ in range(max_length):
            nxt = []
            for el in frontier:
                for i in gens:
                    cand = el * self.simple(i)
                    if cand.mat not in seen:
                        seen.add(cand.mat)
                        nxt.append(cand)
                        if len(seen) > budget:
                            raise BudgetExceeded(
                                f"ball enumeration exceeded budget of {budget} elements")
            out.extend(nxt)
            if not nxt:
                break
            frontier = nxt
        return out

    def inversion_set(self, w: WeylElement) -> list:
        """Roots beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) along the canonical word.

        The list has length l(w), entries are distinct positive root
        vectors in the simple-root basis, and beta_k is the root of the
        k-th reflection in the inversion order of the word.
        """
        word = self.canonical_word(w)
        prefix = self.identity
        out = []
        for i in word:
            e_i = tuple(1 if k == i else 0 for k in range(self.n))
            out.append(prefix.act(e_i))
            prefix = prefix * self.simple(i)
        return out


_GROUPS: dict = {}


def weyl_group(cartan: CartanMatrix, budget: int = DEFAULT_BUDGET) -> WeylGroup:
    """The (cached) Weyl group of a Cartan matrix."""
    key = (cartan.entries, budget)
    g = _GROUPS.get(key)
    if g is None:
        g = WeylGroup(cartan, budget)
        _GROUPS[key] = g
    return g


# Free-function aliases for the core operations ---------------------------

def simple_reflection(cartan: CartanMatrix, i: int) -> WeylElement:
    return weyl_group(cartan).simple(i)


def multiply(x: WeylElement, y: WeylElement) -> WeylElement:
    return x * y


def length(w: WeylElement) -> int:
    return w.group.length(w)


def descents(w: WeylElement, side: str) -> set:
    return w.group.descents(w, side)


def canonical_reduced_word(w: WeylElement) -> Word:
    return w.group.canonical_word(w)


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    return v.group.bruhat_leq(v, w)


def inversion_set(w: WeylElement) -> list:
    return w.group.inversion_set(w)


def enumerate_ball(cartan: CartanMatrix, max_length: int,
                   restrict_to=None, budget: int = DEFAULT_BUDGET) -> list:
    letters = None if restrict_to is None else restrict_to.J
    return weyl_group(cartan, budget).ball(max_length, letters)


def is_reduced(group: WeylGroup, word: Iterable[int]) -> bool:
    word = tuple(word)
    return group.length(group.from_word(word)) == len(word)


def element_to_json(w: WeylElement) -> list:
    """Serialize as the canonical reduced word (array of node indices)."""
    return list(w.canonical_word())


def element_from_json(group: WeylGroup, data: Iterable[int]) -> WeylElement:
    return group.from_word(data)


class ParabolicContext:
    """A subset J of nodes with its derived data (W_J, W^J tests)."""

    def __init__(self, group: WeylGroup, J: Iterable[int]):
        J = frozenset(int(j) for j in J)
        if not J <= set(range(group.n)):
            raise ValueError("J must be a subset of the node indices")
        self.group = group
        self.J = J
        self._elements = None
        self._longest = None
        self._ball_cache: dict = {}
        self._jleq_cache: dict = {}
        self._minc_cache: dict = {}
        self._decomp_cache: dict = {}

    def decompose(self, w: WeylElement):
        """The unique w = w^J * w_J with w^J minimal in w*W_J and w_J in W_J."""
        got = self._decomp_cache.get(w.mat)
        if got is not None:
            return got
        g = self.group
        cur = w
        letters = []
        while True:
            ds = g.right_descents(cur) & self.J
            if not ds:
                break
            j = min(ds)
            letters.append(j)
            cur = cur * g.simple(j)
        w_j = g.from_word(reversed(letters))
        assert cur * w_j == w
        assert g.length(cur) + g.length(w_j) == g.length(w)
        self._decomp_cache[w.mat] = (cur, w_j)
        return cur, w_j

    def min_rep(self, w: WeylElement) -> WeylElement:
        return self.decompose(w)[0]

    def contains(self, w: WeylElement) -> bool:
        """Membership in W_J."""
        return self.min_rep(w).is_identity()

    def in_min_coset_reps(self, w: WeylElement) -> bool:
        """Membership in W^J."""
        return not (self.group.right_descents(w) & self.J)

    def elements(self, max_length: Optional[int] = None) -> list:
        """W_J itself when finite, or its ball of the given radius."""
        if max_length is not None:
            got = self._ball_cache.get(max_length)
            if got is None:
                got = self.group.ball(max_length, self.J)
                self._ball_cache[max_length] = got
            return got
        if self._elements is None:
            # BFS terminates on its own exactly when W_J is finite; the
            # group budget guards the infinite case.
            self._elements = self.group.ball(self.group.budget, self.J)
        return self._elements

    def is_finite(self) -> bool:
        try:
            self.elements()
            return True
        except BudgetExceeded:
            return False

    def longest(self) -> WeylElement:
        """The longest element w_{J,0} of a finite W_J."""
        if self._longest is None:
            els = self.elements()
            top = max(els, key=self.group.length)
            m = self.group.length(top)
            if sum(1 for e in els if self.group.length(e) == m) != 1:
                raise ValueError("W_J has no unique longest element")
            self._longest = top
        return self._longest

    def __repr__(self) -> str:
        return f"ParabolicContext(J={sorted(self.J)})"


def parabolic_decompose(w: WeylElement, J: ParabolicContext):
    return J.decompose(w)
