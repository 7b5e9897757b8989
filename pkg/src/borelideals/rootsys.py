"""Irreducible root systems in Bourbaki labelling, with exact rational arithmetic.

Points of the Cartan subalgebra are stored in simple-root coordinates.  The
invariant form is normalized so that the highest root has squared length 2,
which identifies coroots of long roots with the roots themselves.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import cached_property
from typing import Iterable, Sequence

Root = tuple[int, ...]

_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class InvalidType(ValueError):
    pass


@dataclass(frozen=True)
class Point:
    """A vector in simple-root coordinates."""

    coords: tuple[Q, ...]

    @classmethod
    def of(cls, values: Iterable) -> "Point":
        return cls(tuple(Q(v) for v in values))

    @classmethod
    def zero(cls, n: int) -> "Point":
        return cls((Q(0),) * n)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other) -> "Point":
        return Point(tuple(a + b for a, b in zip(self.coords, other)))

    def __sub__(self, other) -> "Point":
        return Point(tuple(a - b for a, b in zip(self.coords, other)))

    def __neg__(self) -> "Point":
        return Point(tuple(-a for a in self.coords))

    def __mul__(self, c) -> "Point":
        c = Q(c)
        return Point(tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coords]

    def __repr__(self) -> str:
        return "Point(" + ", ".join(str(a) for a in self.coords) + ")"


# -- small exact linear algebra ------------------------------------------------

def mat_inverse(m: Sequence[Sequence]) -> tuple[tuple[Q, ...], ...]:
    n = len(m)
    a = [[Q(x) for x in row] + [Q(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def solve_in_span(basis: Sequence[Sequence], v: Sequence) -> tuple[Q, ...] | None:
    """Coefficients c with sum c_k basis[k] == v, or None if v is outside the span.

    The basis vectors are assumed linearly independent.
    """
    k = len(basis)
    n = len(v)
    rows = [[Q(basis[j][i]) for j in range(k)] + [Q(v[i])] for i in range(n)]
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, n) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        rows[r] = [x / p for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, n)):
        return None
    out = [Q(0)] * k
    for i, col in enumerate(pivots):
        out[col] = rows[i][k]
    return tuple(out)


# -- Dynkin data -----------------------------------------------------------------

def _dynkin(kind: str, n: int) -> tuple[list[Q], list[tuple[int, int]]]:
    """Squared lengths of simple roots and the Dynkin edges (0-based)."""
    two, one = Q(2), Q(1)
    chain = [(i, i + 1) for i in range(n - 1)]
    if kind == "A":
        return [two] * n, chain
    if kind == "B":
        return [two] * (n - 1) + [one], chain
    if kind == "C":
        return [one] * (n - 1) + [two], chain
    if kind == "D":
        return [two] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if kind == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
        return [two] * n, edges
    if kind == "F":
        return [two, two, one, one], chain
    if kind == "G":
        return [Q(2, 3), two], chain
    raise InvalidType(kind)


def parse_type(text: str, rank: int | None = None) -> tuple[str, int]:
    """Accept ('A', 3), ('A3', None) or ('a3', None)."""
    text = text.strip().upper()
    kind = text[:1]
    rest = text[1:]
    if rest:
        if rank is not None and int(rest) != rank:
            raise InvalidType(f"conflicting rank in {text!r} and {rank}")
        rank = int(rest)
    if kind not in _VALID_RANKS or rank is None or not _VALID_RANKS[kind](rank):
        raise InvalidType(f"no irreducible root system of type {kind}{rank}")
    return kind, rank


class RootSystem:
    """Finite irreducible root system with its root poset and coweight data."""

    def __init__(self, kind: str, rank: int):
        kind, rank = parse_type(kind, rank)
        self.kind = kind
        self.rank = rank
        n = rank
        lengths, edges = _dynkin(kind, n)
        form = [[Q(0)] * n for _ in range(n)]
        for i in range(n):
            form[i][i] = lengths[i]
        for i, j in edges:
            form[i][j] = form[j][i] = -max(lengths[i], lengths[j]) / 2
        self.form: tuple[tuple[Q, ...], ...] = tuple(tuple(r) for r in form)
        self.lengths = tuple(lengths)
        # cartan[i][j] = <alpha_i, alpha_j^vee>
        self.cartan: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(2 * form[i][j] / lengths[j]) for j in range(n)) for i in range(n)
        )
        self.positive_roots: tuple[Root, ...] = self._generate_roots()
        self.index: dict[Root, int] = {r: k for k, r in enumerate(self.positive_roots)}
        self.root_set = frozenset(self.positive_roots) | frozenset(
            tuple(-c for c in r) for r in self.positive_roots
        )

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RootSystem) and self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)

    def _generate_roots(self) -> tuple[Root, ...]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        found = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for beta in layer:
                for i in range(n):
                    # p = how far the alpha_i string extends downwards from beta
                    p = 0
                    cur = list(beta)
                    while True:
                        cur[i] -= 1
                        if tuple(cur) in found:
                            p += 1
                        else:
                            break
                    q = p - self.coroot_pairing(beta, i)
                    if q > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in found:
                            found.add(up)
                            nxt.append(up)
            layer = nxt
        return tuple(sorted(found, key=lambda r: (sum(r), r)))

    # -- basic invariants ---------------------------------------------------

    def simple_root(self, i: int) -> Root:
        return tuple(int(i == j) for j in range(self.rank))

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(self.simple_root(i) for i in range(self.rank))

    @cached_property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    @cached_property
    def marks(self) -> tuple[int, ...]:
        return self.highest_root

    @cached_property
    def minuscule_indices(self) -> tuple[int, ...]:
        """Indices i (0-based) with mark 1."""
        return tuple(i for i, m in enumerate(self.marks) if m == 1)

    @cached_property
    def coxeter_number(self) -> int:
        return 1 + sum(self.marks)

    @cached_property
    def negative_roots(self) -> tuple[Root, ...]:
        return tuple(tuple(-c for c in r) for r in self.positive_roots)

    @cached_property
    def all_roots(self) -> tuple[Root, ...]:
        return self.positive_roots + self.negative_roots

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.root_set

    def height(self, v: Sequence) -> int:
        return sum(v)

    def norm2(self, v: Sequence) -> Q:
        return self.pairing(v, v)

    # -- pairings -----------------------------------------------------------

    def dual_coords(self, x: Sequence) -> tuple[Q, ...]:
        """The values (x, alpha_i)."""
        f = self.form
        n = self.rank
        return tuple(sum((f[i][j] * x[j] for j in range(n) if x[j]), Q(0)) for i in range(n))

    def pairing(self, x: Sequence, y: Sequence) -> Q:
        d = self.dual_coords(y)
        return sum((Q(a) * b for a, b in zip(x, d) if a), Q(0))

    def coroot_pairing(self, x: Sequence, i: int) -> int | Q:
        """<x, alpha_i^vee> = 2 (x, alpha_i) / (alpha_i, alpha_i)."""
        v = 2 * sum((self.form[i][j] * x[j] for j in range(self.rank) if x[j]), Q(0)) / self.lengths[i]
        return int(v) if v.denominator == 1 else v

    def coroot(self, alpha: Sequence[int]) -> Point:
        c = 2 / self.norm2(alpha)
        return Point(tuple(c * a for a in alpha))

    def reflect(self, x: Sequence, alpha: Sequence[int]) -> Point:
        """s_alpha(x) = x - (x, alpha^vee) alpha."""
        c = 2 * self.pairing(x, alpha) / self.norm2(alpha)
        return Point(tuple(Q(a) - c * b for a, b in zip(x, alpha)))

    def reflect_root(self, beta: Sequence[int], alpha: Sequence[int]) -> Root:
        c = 2 * self.pairing(beta, alpha) / self.norm2(alpha)
        return tuple(int(a - c * b) for a, b in zip(beta, alpha))

    # -- weights and coweights ----------------------------------------------

    @cached_property
    def form_inverse(self) -> tuple[tuple[Q, ...], ...]:
        return mat_inverse(self.form)

    @cached_property
    def fundamental_coweights(self) -> tuple[Point, ...]:
        inv = self.form_inverse
        return tuple(Point(tuple(inv[r][i] for r in range(self.rank))) for i in range(self.rank))

    @cached_property
    def fundamental_weights(self) -> tuple[Point, ...]:
        return tuple(w * (self.lengths[i] / 2) for i, w in enumerate(self.fundamental_coweights))

    @cached_property
    def minuscule_vertices(self) -> tuple[Point, ...]:
        """omega_i^vee / m_i: the nonzero vertices of the fundamental alcove."""
        return tuple(w * Q(1, m) for w, m in zip(self.fundamental_coweights, self.marks))

    @cached_property
    def rho(self) -> Point:
        return Point(tuple(sum((Q(r[i]) for r in self.positive_roots), Q(0)) / 2 for i in range(self.rank)))

    @cached_property
    def rho_vee(self) -> Point:
        return self.coweight_point([1] * self.rank)

    def coweight_point(self, coeffs: Sequence) -> Point:
        """sum_i coeffs[i] omega_i^vee."""
        inv = self.form_inverse
        n = self.rank
        return Point(tuple(sum((inv[r][i] * coeffs[i] for i in range(n) if coeffs[i]), Q(0)) for r in range(n)))

    def in_coweight_lattice(self, x: Sequence) -> bool:
        return all(c.denominator == 1 for c in self.dual_coords(x))

    def in_coroot_lattice(self, x: Sequence) -> bool:
        return all((Q(x[i]) * self.lengths[i] / 2).denominator == 1 for i in range(self.rank))

    def in_weight_lattice(self, x: Sequence) -> bool:
        return all(Q(self.coroot_pairing(x, i)).denominator == 1 for i in range(self.rank))

    def is_dominant(self, x: Sequence) -> bool:
        return all(c >= 0 for c in self.dual_coords(x))

    @cached_property
    def center_order(self) -> int:
        """|P^vee / Q^vee|, equal to the number of marks equal to 1 plus one."""
        return len(self.minuscule_indices) + 1

    def coset_label(self, x: Sequence) -> int:
        """Index j such that x - omega_j^vee lies in the coroot lattice, or -1 for the
        zero coset."""
        if self.in_coroot_lattice(x):
            return -1
        for j in self.minuscule_indices:
            if self.in_coroot_lattice(Point.of(x) - self.fundamental_coweights[j]):
                return j
        raise ValueError("point is not in the coweight lattice")

    # -- root poset -----------------------------------------------------------

    @staticmethod
    def leq(a: Sequence[int], b: Sequence[int]) -> bool:
        return all(x <= y for x, y in zip(a, b))

    def dual_order_ideal(self, alpha: Root) -> frozenset[Root]:
        """All positive roots above alpha."""
        return frozenset(b for b in self.positive_roots if self.leq(alpha, b))

    @cached_property
    def upper_masks(self) -> tuple[int, ...]:
        """Bitmask of the roots above each positive root."""
        out = []
        for a in self.positive_roots:
            m = 0
            for k, b in enumerate(self.positive_roots):
                if self.leq(a, b):
                    m |= 1 << k
            out.append(m)
        return tuple(out)

    def chain_between(self, alpha: Root, beta: Root) -> list[Root]:
        """Simple-root steps leading from alpha up to beta through positive roots."""
        if not self.leq(alpha, beta):
            raise ValueError("chain requires alpha <= beta")
        path: list[Root] = []
        cur = alpha
        while cur != beta:
            for i in range(self.rank):
                nxt = tuple(c + int(i == j) for j, c in enumerate(cur))
                if nxt in self.index and self.leq(nxt, beta):
                    path.append(self.simple_root(i))
                    cur = nxt
                    break
            else:  # pragma: no cover - ruled out by the root poset being graded
                raise RuntimeError(f"no chain from {alpha} to {beta}")
        return path

    # -- classification data --------------------------------------------------

    @cached_property
    def weyl_order(self) -> int:
        return product_of_exponents_plus_one([self.height(r) for r in self.positive_roots])

    def info(self) -> dict:
        return {
            "type": self.name,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "marks": list(self.marks),
            "minuscule": [i + 1 for i in self.minuscule_indices],
            "coxeter_number": self.coxeter_number,
            "positive_roots": [list(r) for r in self.positive_roots],
            "num_positive_roots": len(self.positive_roots),
            "weyl_order": self.weyl_order,
            "center_order": self.center_order,
        }


def product_of_exponents_plus_one(heights: Iterable[int]) -> int:
    """|W| from the heights of the positive roots (any reduced root system).

    The number of exponents >= k equals the number of positive roots of height k.
    """
    counts: dict[int, int] = {}
    for h in heights:
        counts[h] = counts.get(h, 0) + 1
    order = 1
    for k, c in counts.items():
        e = c - counts.get(k + 1, 0)
        order *= (k + 1) ** e
    return order


_CACHE: dict[tuple[str, int], RootSystem] = {}


def build_root_system(kind: str, rank: int | None = None) -> RootSystem:
    key = parse_type(kind, rank)
    if key not in _CACHE:
        _CACHE[key] = RootSystem(*key)
    return _CACHE[key]
