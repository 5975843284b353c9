"""Minors and Laplace products of a generic matrix, their exact polynomial
expansions (the brute-force oracle used to certify every identity), the
permutation-matrix criterion for linear relations, and the generators of the
relation families the straightening algorithms consume."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

from .indexsets import (
    EMPTY,
    IndexSet,
    MAX_GROUND,
    complement,
    full_set,
    laplace_sign,
    parity_sign,
    permutation_sign,
    subsets,
    subsets_between,
    supersets,
)
from .polynomials import Polynomial, monomial, xvar

# Ground bound for the permutation criterion (n! enumeration).
SIGMA_CHECK_MAX_GROUND = 8
# Matching-permutation lists are cached up to this ground size; beyond it
# they are streamed to keep memory flat.
_SIGMA_CACHE_MAX_GROUND = 6


class Minor:
    """The minor with row set A and column set B of a generic matrix.

    When |A| != |B| the minor denotes the zero element; ([|]) with both sets
    empty denotes the constant 1.
    """

    __slots__ = ("rows", "cols", "_hash")

    def __init__(self, rows, cols):
        self.rows = rows if isinstance(rows, IndexSet) else IndexSet(rows)
        self.cols = cols if isinstance(cols, IndexSet) else IndexSet(cols)
        self._hash = hash((self.rows.elements, self.cols.elements))

    @property
    def is_zero(self) -> bool:
        return len(self.rows) != len(self.cols)

    @property
    def is_unit(self) -> bool:
        return not self.rows and not self.cols

    @property
    def order(self) -> int:
        return len(self.rows)

    def sort_key(self):
        return (self.rows.elements, self.cols.elements)

    def __eq__(self, other) -> bool:
        if isinstance(other, Minor):
            return self.rows == other.rows and self.cols == other.cols
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        r = " ".join(map(str, self.rows.elements))
        c = " ".join(map(str, self.cols.elements))
        return f"[{r}|{c}]"

    def __repr__(self) -> str:
        return f"Minor({self.rows!r}, {self.cols!r})"


class LaplaceProduct:
    """The signed two-minor product (A|B)(A~|B~) on an n x n matrix, where
    A~, B~ are complements in {1..n} and the sign is (-1)**(sum A + sum B)."""

    __slots__ = ("rows", "cols", "ground")

    def __init__(self, rows, cols, ground: int):
        if not isinstance(ground, int) or ground < 0 or ground > MAX_GROUND:
            raise ValueError(f"ground size must be an integer in 0..{MAX_GROUND}, got {ground!r}")
        self.rows = rows if isinstance(rows, IndexSet) else IndexSet(rows)
        self.cols = cols if isinstance(cols, IndexSet) else IndexSet(cols)
        for s in (self.rows, self.cols):
            if s.elements and s.elements[-1] > ground:
                raise ValueError(f"element {s.elements[-1]} exceeds ground size {ground}")
        self.ground = ground

    @property
    def is_zero(self) -> bool:
        return len(self.rows) != len(self.cols)

    def sign(self) -> int:
        return laplace_sign(self.rows, self.cols)

    def complement_pair(self) -> Minor:
        return Minor(complement(self.rows, self.ground), complement(self.cols, self.ground))

    def __eq__(self, other) -> bool:
        if isinstance(other, LaplaceProduct):
            return (self.rows, self.cols, self.ground) == (other.rows, other.cols, other.ground)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.ground))

    def __str__(self) -> str:
        r = " ".join(map(str, self.rows.elements))
        c = " ".join(map(str, self.cols.elements))
        return f"{{{r}|{c}}}"

    def __repr__(self) -> str:
        return f"LaplaceProduct({self.rows!r}, {self.cols!r}, ground={self.ground})"


@lru_cache(maxsize=None)
def _expand_minor(rows: IndexSet, cols: IndexSet) -> Polynomial:
    if len(rows) != len(cols):
        return Polynomial.zero()
    if not rows:
        return Polynomial.one()
    terms = {}
    for perm in itertools.permutations(cols.elements):
        mono = monomial({xvar(r, c): 1 for r, c in zip(rows.elements, perm)})
        terms[mono] = terms.get(mono, 0) + permutation_sign(perm)
    return Polynomial(terms)


def expand_minor(minor: Minor, m: int | None = None, n: int | None = None) -> Polynomial:
    """Leibniz expansion of a minor: the signed sum over all bijections from
    its row set to its column set; 1 for ([|]), 0 on a size mismatch."""
    if m is not None and minor.rows.elements and minor.rows.elements[-1] > m:
        raise ValueError(f"row index {minor.rows.elements[-1]} exceeds m={m}")
    if n is not None and minor.cols.elements and minor.cols.elements[-1] > n:
        raise ValueError(f"column index {minor.cols.elements[-1]} exceeds n={n}")
    return _expand_minor(minor.rows, minor.cols)


@lru_cache(maxsize=None)
def _expand_laplace(rows: IndexSet, cols: IndexSet, ground: int) -> Polynomial:
    if len(rows) != len(cols):
        return Polynomial.zero()
    inner = _expand_minor(rows, cols)
    outer = _expand_minor(complement(rows, ground), complement(cols, ground))
    return (inner * outer) * laplace_sign(rows, cols)


def expand_laplace(lp: LaplaceProduct) -> Polynomial:
    """Signed product of a minor and its complementary minor."""
    return _expand_laplace(lp.rows, lp.cols, lp.ground)


def eval_on_permutation(lp: LaplaceProduct, sigma) -> int:
    """Value of a Laplace product on the 0/1 matrix with entry 1 at
    (i, sigma(i)): the sign of sigma if sigma maps the row set onto the
    column set, 0 otherwise."""
    sigma = tuple(sigma)
    n = lp.ground
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {sigma!r}")
    if lp.is_zero:
        return 0
    image = {sigma[a - 1] for a in lp.rows}
    if image != set(lp.cols.elements):
        return 0
    return permutation_sign(sigma)


class LaplaceCombination:
    """Integer linear combination of Laplace products over one ground size.

    Keys are (row set, column set) pairs; size-mismatched pairs denote zero
    and are never stored, nor are zero coefficients.
    """

    __slots__ = ("ground", "_terms")

    def __init__(self, ground: int, terms=None):
        if not isinstance(ground, int) or ground < 0 or ground > MAX_GROUND:
            raise ValueError(f"ground size must be an integer in 0..{MAX_GROUND}, got {ground!r}")
        self.ground = ground
        data: dict[tuple[IndexSet, IndexSet], int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (a, b), coeff in items:
                a = a if isinstance(a, IndexSet) else IndexSet(a)
                b = b if isinstance(b, IndexSet) else IndexSet(b)
                for s in (a, b):
                    if s.elements and s.elements[-1] > ground:
                        raise ValueError(f"element {s.elements[-1]} exceeds ground size {ground}")
                if len(a) != len(b) or not coeff:
                    continue
                c = data.get((a, b), 0) + coeff
                if c:
                    data[(a, b)] = c
                elif (a, b) in data:
                    del data[(a, b)]
        self._terms = data

    def items(self) -> list[tuple[tuple[IndexSet, IndexSet], int]]:
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0].elements, kv[0][1].elements))

    def coefficient(self, rows, cols) -> int:
        rows = rows if isinstance(rows, IndexSet) else IndexSet(rows)
        cols = cols if isinstance(cols, IndexSet) else IndexSet(cols)
        return self._terms.get((rows, cols), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaplaceCombination):
            return self.ground == other.ground and self._terms == other._terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def expand(self) -> Polynomial:
        total = Polynomial.zero()
        for (a, b), coeff in self._terms.items():
            total = total + _expand_laplace(a, b, self.ground) * coeff
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (a, b), coeff in self.items():
            r = " ".join(map(str, a.elements))
            c = " ".join(map(str, b.elements))
            body = f"{{{r}|{c}}}"
            mag = abs(coeff)
            text = body if mag == 1 else f"{mag}{body}"
            if not pieces:
                pieces.append(text if coeff > 0 else f"-{text}")
            else:
                pieces.append(("+ " if coeff > 0 else "- ") + text)
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaplaceCombination(n={self.ground}, {self})"


def _matching_perms_stream(rows: IndexSet, cols: IndexSet, n: int) -> Iterator[tuple[int, ...]]:
    if len(rows) != len(cols):
        return
    rows_c = complement(rows, n)
    cols_c = complement(cols, n)
    base = [0] * n
    for p1 in itertools.permutations(cols.elements):
        for r, c in zip(rows.elements, p1):
            base[r - 1] = c
        for p2 in itertools.permutations(cols_c.elements):
            img = list(base)
            for r, c in zip(rows_c.elements, p2):
                img[r - 1] = c
            yield tuple(img)


@lru_cache(maxsize=None)
def _matching_perms_cached(rows: IndexSet, cols: IndexSet, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_matching_perms_stream(rows, cols, n))


def matching_permutations(rows: IndexSet, cols: IndexSet, n: int):
    """All permutations of {1..n} mapping the row set onto the column set."""
    if n <= _SIGMA_CACHE_MAX_GROUND:
        return _matching_perms_cached(rows, cols, n)
    return _matching_perms_stream(rows, cols, n)


def check_relation(rel: LaplaceCombination, max_ground: int = SIGMA_CHECK_MAX_GROUND) -> bool:
    """Permutation criterion: the combination vanishes identically iff for
    every permutation sigma the coefficients of the terms whose row set maps
    onto their column set sum to zero.

    Every sigma in S_n is covered: sigmas matched by no term have an empty
    sum. Refuses ground sizes above max_ground (n! blow-up guard).
    """
    n = rel.ground
    if n > max_ground:
        raise ValueError(
            f"permutation criterion refused for ground size {n} > {max_ground}"
        )
    totals: dict[tuple[int, ...], int] = {}
    for (a, b), coeff in rel._terms.items():
        for sig in matching_permutations(a, b, n):
            c = totals.get(sig, 0) + coeff
            if c:
                totals[sig] = c
            elif sig in totals:
                del totals[sig]
    return not totals


def relation_fundamental(a: IndexSet, b: IndexSet, n: int) -> LaplaceCombination:
    """The basic vanishing combination for a pair (a, b): summing over column
    subsets of b minus summing over row supersets of a.

    Only size-matched terms are materialized; the result always expands to
    the zero polynomial.
    """
    acc: dict[tuple[IndexSet, IndexSet], int] = {}
    for v in subsets(b, size=len(a)):
        acc[(a, v)] = acc.get((a, v), 0) + 1
    for u in supersets(a, n, size=len(b)):
        acc[(u, b)] = acc.get((u, b), 0) - 1
    return LaplaceCombination(n, acc)


def relation_inclusion_exclusion(a: IndexSet, b: IndexSet, c: IndexSet, n: int) -> LaplaceCombination:
    """Signed refinement of the fundamental relation by a pinned subset c of
    b: column sets range over c <= v <= b on one side, while the other side
    alternates over subsets w of c removed from b."""
    if not c.issubset(b):
        raise ValueError(f"{c} is not contained in {b}")
    acc: dict[tuple[IndexSet, IndexSet], int] = {}
    for v in subsets_between(c, b, size=len(a)):
        acc[(a, v)] = acc.get((a, v), 0) + 1
    for w in subsets(c):
        sign = parity_sign(len(w))
        bw = b.difference(w)
        for u in supersets(a, n, size=len(bw)):
            acc[(u, bw)] = acc.get((u, bw), 0) - sign
    return LaplaceCombination(n, acc)


def relation_complementary(a: IndexSet, b: IndexSet, n: int) -> LaplaceCombination:
    """Superset-against-complement form: alternating sum over supersets
    (u, w) of (a, b) minus the sum over column subsets v of b taken against
    the complement of v."""
    acc: dict[tuple[IndexSet, IndexSet], int] = {}
    for w in supersets(b, n):
        sign = parity_sign(n - len(w))
        for u in supersets(a, n, size=len(w)):
            acc[(u, w)] = acc.get((u, w), 0) + sign
    for v in subsets(b):
        if n - len(v) == len(a):
            key = (a, complement(v, n))
            acc[key] = acc.get(key, 0) - 1
    return LaplaceCombination(n, acc)


def laplace_expansion(fixed: IndexSet, n: int, side: str = "cols") -> LaplaceCombination:
    """Determinant minus its expansion over all complementary minors against
    a fixed column set (side="cols") or a fixed row set (side="rows")."""
    acc: dict[tuple[IndexSet, IndexSet], int] = {(EMPTY, EMPTY): 1}
    if side == "cols":
        for s in subsets(n, size=len(fixed)):
            acc[(s, fixed)] = acc.get((s, fixed), 0) - 1
    elif side == "rows":
        for t in subsets(n, size=len(fixed)):
            acc[(fixed, t)] = acc.get((fixed, t), 0) - 1
    else:
        raise ValueError(f"side must be 'rows' or 'cols', got {side!r}")
    return LaplaceCombination(n, acc)


RELATION_FAMILIES = ("theorem1", "cor1", "cor2", "laplace")


def relation_family(n: int, family: str) -> Iterator[tuple[str, LaplaceCombination]]:
    """Every instance of one relation family on ground size n, as
    (label, combination) pairs."""
    if family == "theorem1":
        for a in subsets(n):
            for b in subsets(n):
                yield f"A={a} B={b}", relation_fundamental(a, b, n)
    elif family == "cor1":
        for b in subsets(n):
            for c in subsets(b):
                for a in subsets(n):
                    yield f"A={a} B={b} C={c}", relation_inclusion_exclusion(a, b, c, n)
    elif family == "cor2":
        for a in subsets(n):
            for b in subsets(n):
                yield f"A={a} B={b}", relation_complementary(a, b, n)
    elif family == "laplace":
        for side in ("cols", "rows"):
            for fixed in subsets(n):
                yield f"side={side} fixed={fixed}", laplace_expansion(fixed, n, side)
    else:
        raise ValueError(f"unknown relation family {family!r}; expected one of {RELATION_FAMILIES}")
