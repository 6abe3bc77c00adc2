"""Finite posets, purity and thinness checks, reflection orders,
EL-labelings, and order complexes.

The EL machinery certifies instances: ``verify_el`` exhaustively checks
that every subinterval has a unique increasing maximal chain which is
also lexicographically minimal, so a passing verdict stands on its own
and does not lean on the general shellability theorems.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import MissingReflection, NonReducedWord
from .weyl import WeylElement, WeylGroup

ZERO_HAT = ("^0",)


class FinitePoset:
    """Elements (opaque hashable keys), cover pairs by index, optional rank."""

    def __init__(self, elements: Sequence, covers: Iterable, rank: Optional[Sequence[int]] = None):
        self.elements = list(elements)
        n = len(self.elements)
        self.covers = {(int(a), int(b)) for a, b in covers}
        for a, b in self.covers:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise ValueError("cover indices out of range")
        self.rank = list(rank) if rank is not None else None
        if self.rank is not None:
            for a, b in self.covers:
                if self.rank[b] - self.rank[a] != 1:
                    raise ValueError(f"cover {a}->{b} does not raise rank by 1")
        self.up = [[] for _ in range(n)]
        self.down = [[] for _ in range(n)]
        for a, b in sorted(self.covers):
            self.up[a].append(b)
            self.down[b].append(a)
        self._leq = self._close()

    def _close(self):
        n = len(self.elements)
        leq = [set() for _ in range(n)]
        order = self._topo()
        for a in reversed(order):
            s = {a}
            for b in self.up[a]:
                s |= leq[b]
            leq[a] = s
        return leq

    def _topo(self):
        n = len(self.elements)
        indeg = [len(self.down[i]) for i in range(n)]
        stack = [i for i in range(n) if indeg[i] == 0]
        out = []
        while stack:
            i = stack.pop()
            out.append(i)
            for j in self.up[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    stack.append(j)
        if len(out) != n:
            raise ValueError("cover relation contains a cycle")
        return out

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, a: int, b: int) -> bool:
        return b in self._leq[a]

    def index_of(self, key) -> int:
        return self.elements.index(key)

    def minimal_elements(self) -> list:
        return [i for i in range(len(self.elements)) if not self.down[i]]

    def maximal_elements(self) -> list:
        return [i for i in range(len(self.elements)) if not self.up[i]]

    def interval(self, a: int, b: int) -> list:
        return [z for z in self._leq[a] if self.leq(z, b)]

    def maximal_chains_down(self, top: int, bottom: int) -> list:
        """All maximal chains from top down to bottom, as index tuples."""
        if not self.leq(bottom, top):
            return []
        out = []
        stack = [(top, (top,))]
        while stack:
            cur, path = stack.pop()
            if cur == bottom:
                out.append(path)
                continue
            for nxt in self.down[cur]:
                if self.leq(bottom, nxt):
                    stack.append((nxt, path + (nxt,)))
        return out

    def all_maximal_chains(self) -> list:
        out = []
        for top in self.maximal_elements():
            for bot in self.minimal_elements():
                out.extend(self.maximal_chains_down(top, bot))
        return out


def check_pure(p: FinitePoset):
    """True iff all maximal chains between comparable pairs have equal length.

    Returns (verdict, witness); the witness on failure is a pair of
    maximal chains of different lengths for the same pair.
    """
    n = len(p.elements)
    shortest: dict = {}
    longest: dict = {}

    def chain_bounds(a, b):
        key = (a, b)
        if key in shortest:
            return shortest[key], longest[key]
        if a == b:
            shortest[key] = longest[key] = 0
            return 0, 0
        lo, hi = None, None
        for c in p.up[a]:
            if p.leq(c, b):
                clo, chi = chain_bounds(c, b)
                lo = clo + 1 if lo is None else min(lo, clo + 1)
                hi = chi + 1 if hi is None else max(hi, chi + 1)
        shortest[key], longest[key] = lo, hi
        return lo, hi

    for a in range(n):
        for b in p._leq[a]:
            lo, hi = chain_bounds(a, b)
            if lo != hi:
                chains = p.maximal_chains_down(b, a)
                lens = {len(c): c for c in chains}
                two = sorted(lens.values(), key=len)
                return False, (two[0], two[-1])
    return True, None


def check_thin(p: FinitePoset):
    """Every rank-2 subinterval must have exactly 4 elements."""
    ok, _ = check_pure(p)
    if not ok:
        raise ValueError("thinness is only defined for pure posets")
    n = len(p.elements)
    for a in range(n):
        for m in p.up[a]:
            for b in p.up[m]:
                size = len(p.interval(a, b))
                if size != 4:
                    return False, (a, b, size)
    return True, None


# -- reflection orders ----------------------------------------------------

def root_of_reflection(t: WeylElement) -> tuple:
    """The positive root vector beta with t(beta) = -beta, primitive and integral."""
    g = t.group
    n = g.n
    m = t.mat
    rows = [[Fraction(m[i][j] + (1 if i == j else 0)) for j in range(n)] for i in range(n)]
    # null space of (t + id), expected one-dimensional
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise ValueError("element is not a reflection")
    f = free[0]
    vec = [Fraction(0)] * n
    vec[f] = Fraction(1)
    for row_idx, c in enumerate(pivots):
        vec[c] = -rows[row_idx][f]
    lcm = 1
    for x in vec:
        lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in vec]
    gg = 0
    for x in ints:
        gg = _gcd(gg, abs(x))
    ints = [x // gg for x in ints]
    if any(x < 0 for x in ints):
        if any(x > 0 for x in ints):
            raise ValueError("root vector is not sign-coherent")
        ints = [-x for x in ints]
    return tuple(ints)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _in_open_cone(beta, b1, b2):
    """Solve beta = x*b1 + y*b2 exactly; True iff consistent with x,y > 0."""
    n = len(beta)
    cols = None
    for i in range(n):
        for j in range(i + 1, n):
            det = b1[i] * b2[j] - b1[j] * b2[i]
            if det != 0:
                cols = (i, j, det)
                break
        if cols:
            break
    if cols is None:
        return False  # b1, b2 parallel
    i, j, det = cols
    x = Fraction(beta[i] * b2[j] - beta[j] * b2[i], det)
    y = Fraction(b1[i] * beta[j] - b1[j] * beta[i], det)
    if x <= 0 or y <= 0:
        return False
    for k in range(n):
        if x * b1[k] + y * b2[k] != beta[k]:
            return False
    return True


def _dihedral_reflections(t1: WeylElement, t2: WeylElement, max_count: int):
    """Reflections of <t1,t2>: the conjugation orbit of {t1,t2} under t1*t2.

    Returns (reflections, exhausted); exhausted is False when the count
    bound was hit while the subgroup was still producing new elements
    (an infinite dihedral pair).
    """
    rot = t1 * t2
    rotinv = t2 * t1
    seen = {t1: None, t2: None}
    frontier = [t1, t2]
    while frontier and len(seen) <= max_count:
        nxt = []
        for c in frontier:
            for left, right in ((rot, rotinv), (rotinv, rot)):
                cc = left * c * right
                if cc not in seen:
                    seen[cc] = None
                    nxt.append(cc)
        frontier = nxt
    return list(seen), not frontier


class ReflectionOrder:
    """An ordered list of reflections, certified pairwise dihedral-consistent.

    ``initial_segment`` marks lists built as the inversion sequence of a
    single reduced word; those must also be convexly closed (no unlisted
    reflection may sit strictly between two listed ones in its plane).
    """

    def __init__(self, group: WeylGroup, reflections: Sequence[WeylElement],
                 initial_segment: bool = False, check: bool = True):
        self.group = group
        self.reflections = list(reflections)
        self.initial_segment = initial_segment
        self._pos = {}
        for k, t in enumerate(self.reflections):
            if t in self._pos:
                raise ValueError("duplicate reflection in order")
            if not (t * t).is_identity() or t.is_identity():
                raise ValueError("order entry is not a reflection")
            self._pos[t] = k
        self._roots = [root_of_reflection(t) for t in self.reflections]
        if check:
            bad = self.dihedral_violation()
            if bad is not None:
                raise NonReducedWord(f"dihedral condition violated at {bad}")

    def __len__(self) -> int:
        return len(self.reflections)

    def contains(self, t: WeylElement) -> bool:
        return t in self._pos

    def position(self, t: WeylElement) -> int:
        try:
            return self._pos[t]
        except KeyError:
            raise MissingReflection(f"reflection {t!r} not covered by the order") from None

    def dihedral_violation(self):
        """First pair breaking the monotone-traversal condition, or None.

        For every listed pair, every listed reflection of their dihedral
        subgroup must sit between them exactly when its root lies in the
        open cone of their roots; for initial segments, cone reflections
        may not be missing from the list either.
        """
        L = len(self.reflections)
        bound = 2 * L + 4
        for i in range(L):
            for j in range(i + 1, L):
                t1, t2 = self.reflections[i], self.reflections[j]
                b1, b2 = self._roots[i], self._roots[j]
                refs, exhausted = _dihedral_reflections(t1, t2, bound)
                for c in refs:
                    if c == t1 or c == t2:
                        continue
                    inside = _in_open_cone(root_of_reflection(c), b1, b2)
                    if c in self._pos:
                        between = i < self._pos[c] < j
                        if between != inside:
                            return (t1, t2, c)
                    elif inside and self.initial_segment:
                        # an inversion sequence is convexly closed
                        return (t1, t2, c)
        return None


def reflection_order_from_word(group: WeylGroup, word: Sequence[int]) -> ReflectionOrder:
    """Inversion-sequence order t_k = s_{i_1}..s_{i_{k-1}} s_{i_k} s_{i_{k-1}}..s_{i_1}."""
    word = tuple(word)
    if group.length(group.from_word(word)) != len(word):
        raise NonReducedWord("word is not reduced")
    prefix = group.identity
    refs = []
    for i in word:
        refs.append(prefix * group.simple(i) * prefix.inverse())
        prefix = prefix * group.simple(i)
    return ReflectionOrder(group, refs, initial_segment=True)


def reflection_order_covering(group: WeylGroup, needed: Iterable[WeylElement],
                              first_nodes: Optional[Iterable[int]] = None) -> ReflectionOrder:
    """A reflection order on a given finite set, built from slope functionals.

    Roots are sorted by the ratio <y,beta>/<x,beta> with x strictly
    positive; the mediant property makes any such order automatically
    monotone along dihedral strings.  When ``first_nodes`` is given,
    reflections supported on those nodes are forced ahead of all others
    (used for the thickened-group labeling, where the finite-part
    reflections must come first).
    """
    needed = list(dict.fromkeys(needed))
    n = group.n
    roots = {t: root_of_reflection(t) for t in needed}
    # Each key component is <y, beta>/<x, beta> with x strictly positive;
    # a lexicographic tuple of such slopes still satisfies the mediant
    # property, so betweenness along every dihedral string is automatic.
    primary = None
    if first_nodes is not None:
        outside = [k for k in range(n) if k not in set(first_nodes)]
        primary = tuple(1 if k in outside else 0 for k in range(n))
    for attempt in range(1, 50):
        y = tuple(pow(attempt + 1, k + 1, 10 ** 9 + 7) for k in range(n))
        keys = {}
        for t, beta in roots.items():
            denom = sum(beta)
            key = (Fraction(sum(y[k] * beta[k] for k in range(n)), denom),)
            if primary is not None:
                lead = Fraction(sum(primary[k] * beta[k] for k in range(n)), denom)
                key = (lead,) + key
            keys[t] = key
        if len(set(keys.values())) == len(needed):
            ordered = sorted(needed, key=lambda t: keys[t])
            return ReflectionOrder(group, ordered, initial_segment=False)
    raise MissingReflection("could not separate reflection slopes")


# -- edge labels and EL verification --------------------------------------

BOTTOM = "bottom"
LEFT = "reflection-left"
RIGHT = "reflection-right"


class EdgeLabel:
    """A label in Lambda = {(t,l), (t,r) : t a reflection} + {empty}."""

    __slots__ = ("tag", "reflection")

    def __init__(self, tag: str, reflection: Optional[WeylElement] = None):
        if tag not in (BOTTOM, LEFT, RIGHT):
            raise ValueError(f"unknown tag {tag!r}")
        if (reflection is None) != (tag == BOTTOM):
            raise ValueError("reflection present iff tag is not bottom")
        if reflection is not None:
            if reflection.is_identity() or not (reflection * reflection).is_identity():
                raise ValueError("label element is not a reflection")
        self.tag = tag
        self.reflection = reflection

    def __eq__(self, other):
        return (isinstance(other, EdgeLabel) and self.tag == other.tag
                and self.reflection == other.reflection)

    def __hash__(self):
        return hash((self.tag, self.reflection))

    def __repr__(self):
        if self.tag == BOTTOM:
            return "Label(empty)"
        side = "l" if self.tag == LEFT else "r"
        return f"Label({self.reflection!r},{side})"


class LabeledPoset:
    """A finite poset with Lambda-valued cover labels.

    The label order is (t1,r) < empty < (t2,l) for all reflections, and
    within one side labels compare through the reflection order.
    """

    def __init__(self, poset: FinitePoset, labels: dict, order: ReflectionOrder):
        self.poset = poset
        self.labels = dict(labels)
        self.order = order
        if set(self.labels) != poset.covers:
            raise ValueError("labels must decorate exactly the cover pairs")
        self._key = {}
        for cover, lab in self.labels.items():
            if lab.tag == BOTTOM:
                self._key[cover] = (1,)
            elif lab.tag == RIGHT:
                self._key[cover] = (0, order.position(lab.reflection))
            else:
                self._key[cover] = (2, order.position(lab.reflection))

    def label_key(self, a: int, b: int):
        return self._key[(a, b)]


def el_label_twisted_interval(interval, order: ReflectionOrder) -> LabeledPoset:
    """Label each cover w1 < w2 of a twisted interval by the reflection w2*w1^{-1}."""
    fp = interval.to_finite_poset()
    index = {el: k for k, el in enumerate(interval.elements)}
    labels = {}
    for (w1, w2) in interval.covers:
        t = w2 * w1.inverse()
        if not order.contains(t):
            raise MissingReflection("cover reflection missing from the supplied order")
        labels[(index[w1], index[w2])] = EdgeLabel(LEFT, t)
    return LabeledPoset(fp, labels, order)


class ELReport:
    def __init__(self, ok: bool, reason: Optional[str] = None, interval=None):
        self.ok = ok
        self.reason = reason
        self.interval = interval

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return "EL(ok)" if self.ok else f"EL(fail {self.reason} at {self.interval})"


def verify_el(lp: LabeledPoset) -> ELReport:
    """Exhaustive EL check over every subinterval.

    Requires, per interval: exactly one maximal chain with strictly
    increasing labels; that chain lexicographically first among all
    maximal chains, with ties reported as failures; and the local
    criterion that its first edge beats every alternative first edge.
    """
    p = lp.poset
    n = len(p.elements)
    for x in range(n):
        for y in p._leq[x]:
            if x == y:
                continue
            chains = p.maximal_chains_down(y, x)
            seqs = []
            for ch in chains:
                seqs.append((tuple(lp.label_key(ch[k + 1], ch[k]) for k in range(len(ch) - 1)), ch))
            rising = [(s, ch) for s, ch in seqs
                      if all(s[k] < s[k + 1] for k in range(len(s) - 1))]
            if len(rising) != 1:
                return ELReport(False, f"{len(rising)} increasing chains", (x, y))
            rseq, rchain = rising[0]
            for s, ch in seqs:
                if ch is rchain:
                    continue
                if s <= rseq:
                    reason = "lex tie" if s == rseq else "increasing chain not lex-minimal"
                    return ELReport(False, reason, (x, y))
            # local criterion: the increasing chain's first edge beats
            # every alternative first edge out of y
            z1 = rchain[1]
            first = rseq[0]
            for yp in p.down[y]:
                if yp != z1 and p.leq(x, yp):
                    if not first < lp.label_key(yp, y):
                        return ELReport(False, "first edge not strictly smallest", (x, y))
    return ELReport(True)


def shelling_order(lp: LabeledPoset) -> list:
    """Diagnostic: maximal chains of the full poset, lex-sorted by labels."""
    p = lp.poset
    mins, maxs = p.minimal_elements(), p.maximal_elements()
    if len(mins) != 1 or len(maxs) != 1:
        raise ValueError("shelling order needs a bounded poset")
    chains = p.maximal_chains_down(maxs[0], mins[0])
    keyed = [(tuple(lp.label_key(ch[k + 1], ch[k]) for k in range(len(ch) - 1)), ch)
             for ch in chains]
    keyed.sort()
    return [ch for _, ch in keyed]


# -- order complexes -------------------------------------------------------

class SimplicialComplex:
    """Facet description of a finite simplicial complex (faces downward closed)."""

    def __init__(self, vertices: int, facets: Iterable):
        self.vertices = int(vertices)
        fs = {tuple(sorted(set(f))) for f in facets}
        self.facets = sorted(f for f in fs
                             if not any(set(f) < set(g) for g in fs if g != f))
        for f in self.facets:
            if f and not (0 <= f[0] and f[-1] < self.vertices):
                raise ValueError("facet vertex out of range")

    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-1)

    def faces(self) -> dict:
        """All faces by dimension, sorted vertex tuples."""
        from itertools import combinations
        out: dict = {}
        seen = set()
        for f in self.facets:
            for k in range(1, len(f) + 1):
                for sub in combinations(f, k):
                    if sub not in seen:
                        seen.add(sub)
                        out.setdefault(k - 1, []).append(sub)
        for k in out:
            out[k].sort()
        return out

    def to_json(self) -> dict:
        return {"vertices": self.vertices, "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        return cls(data["vertices"], [tuple(f) for f in data["facets"]])


def order_complex(p: FinitePoset, mode: str = "full") -> SimplicialComplex:
    """Simplicial complex of chains; open-interval mode strips the unique
    minimum and maximum first."""
    if mode not in ("full", "open-interval"):
        raise ValueError("mode must be 'full' or 'open-interval'")
    keep = list(range(len(p.elements)))
    if mode == "open-interval":
        mins, maxs = p.minimal_elements(), p.maximal_elements()
        if len(mins) != 1 or len(maxs) != 1:
            raise ValueError("open-interval mode needs unique min and max")
        keep = [i for i in keep if i not in (mins[0], maxs[0])]
    keep_set = set(keep)
    renum = {v: k for k, v in enumerate(keep)}
    # induced covers: a < b adjacent iff nothing of the subset lies between
    sub_leq = {a: (p._leq[a] & keep_set) - {a} for a in keep}
    induced = {}
    for a in keep:
        direct = set(sub_leq[a])
        for b in sub_leq[a]:
            direct -= sub_leq[b]
        induced[a] = sorted(direct)
    if not keep:
        return SimplicialComplex(0, [])
    facets = []
    starts = [a for a in keep if not any(a in sub_leq[b] for b in keep)]
    stack = [(a, (a,)) for a in starts]
    while stack:
        cur, path = stack.pop()
        nxt = induced[cur]
        if not nxt:
            facets.append(tuple(renum[v] for v in path))
            continue
        for b in nxt:
            stack.append((b, path + (b,)))
    return SimplicialComplex(len(keep), facets)


# -- interval poset of (W, <=J) --------------------------------------------

def assemble_QJ_interval(bottom_pair, top_pair, J) -> FinitePoset:
    """An interval of the poset of twisted intervals, ordered by containment.

    ``bottom_pair`` may be None, which adjoins the extra minimum below
    all singleton intervals.  Keys are pairs of canonical words, with
    ZERO_HAT for the adjoined minimum.
    """
    from .twisted import j_interval, j_leq

    x_top, y_top = top_pair
    if not j_leq(x_top, y_top, J):
        raise ValueError("top pair is not a twisted interval")
    universe = j_interval(x_top, y_top, J)
    els = universe.elements
    jl = universe.jlengths
    leq = {(a, b): (a == b) or ((a, b) in universe.covers) for a in els for b in els}
    for a in els:
        for b in els:
            if jl[b] > jl[a] + 1:
                leq[(a, b)] = j_leq(a, b, J)
    if bottom_pair is None:
        pairs = [(a, b) for a in els for b in els if leq[(a, b)]]
        augmented = True
    else:
        xb, yb = bottom_pair
        for rel in ((x_top, xb), (xb, yb), (yb, y_top)):
            if not j_leq(rel[0], rel[1], J):
                raise ValueError("bottom pair is not contained in the top pair")
        pairs = [(a, b) for a in els for b in els
                 if leq[(a, b)] and leq[(a, xb)] and leq[(yb, b)]]
        augmented = False

    def rank(pair):
        return jl[pair[1]] - jl[pair[0]] + (1 if augmented else 0)

    pairs.sort(key=lambda q: (rank(q), q[0].canonical_word(), q[1].canonical_word()))
    keys = [(tuple(a.canonical_word()), tuple(b.canonical_word())) for a, b in pairs]
    ranks = [rank(q) for q in pairs]
    offset = 0
    if augmented:
        keys = [ZERO_HAT] + keys
        ranks = [0] + ranks
        offset = 1
    covers = set()
    for i, (a1, b1) in enumerate(pairs):
        for j, (a2, b2) in enumerate(pairs):
            if ranks[offset + j] - ranks[offset + i] != 1:
                continue
            # one endpoint moves by one cover, the other stays
            if (a1 == a2 and leq[(b1, b2)]) or (b1 == b2 and leq[(a2, a1)]):
                covers.add((offset + i, offset + j))
    if augmented:
        for i, q in enumerate(pairs):
            if ranks[offset + i] == 1:
                covers.add((0, offset + i))
    base = min(ranks)
    ranks = [r - base for r in ranks]
    return FinitePoset(keys, covers, ranks)


def el_label_qj_interval(fp: FinitePoset, group: WeylGroup,
                         order: ReflectionOrder) -> LabeledPoset:
    """Two-sided labeling of an interval-poset interval.

    Top-endpoint covers get (t, r), bottom-endpoint covers get (t, l),
    and the adjoined-minimum covers get the empty label.
    """
    def decode(key):
        if key == ZERO_HAT:
            return None
        return group.from_word(key[0]), group.from_word(key[1])

    labels = {}
    for (i, j) in fp.covers:
        lo, hi = decode(fp.elements[i]), decode(fp.elements[j])
        if lo is None:
            labels[(i, j)] = EdgeLabel(BOTTOM)
            continue
        (a1, b1), (a2, b2) = lo, hi
        if a1 == a2:
            labels[(i, j)] = EdgeLabel(RIGHT, b2 * b1.inverse())
        elif b1 == b2:
            labels[(i, j)] = EdgeLabel(LEFT, a1 * a2.inverse())
        else:
            raise ValueError("cover moves both endpoints")
    return LabeledPoset(fp, labels, order)


# -- serialization ----------------------------------------------------------

def _jsonable(key):
    if isinstance(key, tuple):
        return [_jsonable(k) for k in key]
    return key


def poset_to_json(p: FinitePoset) -> dict:
    out = {"elements": [_jsonable(k) for k in p.elements],
           "covers": sorted([a, b] for a, b in p.covers)}
    if p.rank is not None:
        out["rank"] = list(p.rank)
    return out


def poset_from_json(data: dict) -> FinitePoset:
    elements = [tuple(e) if isinstance(e, list) else e for e in data["elements"]]

    def detuple(e):
        if isinstance(e, list):
            return tuple(detuple(x) for x in e)
        return e

    elements = [detuple(e) for e in data["elements"]]
    return FinitePoset(elements, [tuple(c) for c in data["covers"]], data.get("rank"))


def poset_to_dot(p: FinitePoset, name: str = "hasse") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, key in enumerate(p.elements):
        lines.append(f'  n{i} [label="{key}"];')
    for a, b in sorted(p.covers):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines)
