"""Finite groups as dense multiplication tables.

Elements are indices 0..n-1 with 0 the identity; table[a][b] is the product
a*b. Tables are validated on construction (Latin property, identity,
associativity) and element subsets travel as int bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _core
from .bitset import bits, from_bool, mask_of, to_bool

FULL_ASSOC_LIMIT = 512  # exhaustive associativity check up to this order
ASSOC_SAMPLES = 100_000


class GroupError(Exception):
    pass


class TableError(GroupError):
    """The supplied table is not a group multiplication table."""


def _find_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    hits = np.nonzero((table == np.arange(n, dtype=table.dtype)).all(axis=1))[0]
    for e in hits:
        if (table[:, e] == np.arange(n)).all():
            return int(e)
    raise TableError("no identity element")


def _relabel(table: np.ndarray, e: int) -> np.ndarray:
    # swap labels 0 and e so the identity sits at index 0
    n = table.shape[0]
    perm = np.arange(n)
    perm[0], perm[e] = e, 0
    return perm[table[np.ix_(perm, perm)]]


def _check_associativity(table: np.ndarray) -> None:
    n = table.shape[0]
    if n <= FULL_ASSOC_LIMIT:
        for a in range(n):
            lhs = table[table[a]]
            rhs = table[a][table]
            if not (lhs == rhs).all():
                b, c = map(int, np.argwhere(lhs != rhs)[0])
                raise TableError(f"associativity fails at ({a}, {b}, {c})")
    else:
        rng = np.random.default_rng(0)
        a, b, c = rng.integers(0, n, size=(3, ASSOC_SAMPLES))
        lhs = table[table[a, b], c]
        rhs = table[a, table[b, c]]
        if not (lhs == rhs).all():
            k = int(np.nonzero(lhs != rhs)[0][0])
            raise TableError(
                f"associativity fails at ({int(a[k])}, {int(b[k])}, {int(c[k])})"
            )


class Group:
    """Immutable finite group over a validated Cayley table."""

    def __init__(
        self,
        table,
        name: str = "G",
        words: dict[int, str] | None = None,
        validate: bool = True,
        direct_factors: tuple[Group, Group] | None = None,
    ):
        table = np.ascontiguousarray(table, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise TableError("table must be square")
        n = table.shape[0]
        if n == 0:
            raise TableError("empty table")
        if validate:
            if table.min() < 0 or table.max() >= n:
                raise TableError("entries out of range")
            e = _find_identity(table)
            if e != 0:
                table = _relabel(table, e)
                if words is not None:
                    words = {(0 if i == e else e if i == 0 else i): w for i, w in words.items()}
            srt = np.sort(table, axis=1)
            if not (srt == np.arange(n)).all():
                r = int(np.nonzero((srt != np.arange(n)).any(axis=1))[0][0])
                raise TableError(f"row {r} is not a permutation")
            srt = np.sort(table, axis=0)
            if not (srt == np.arange(n)[:, None]).all():
                c = int(np.nonzero((srt != np.arange(n)[:, None]).any(axis=0))[0][0])
                raise TableError(f"column {c} is not a permutation")
            _check_associativity(table)
        table.setflags(write=False)
        self.table = table
        self.order = n
        self.name = name
        self.words = words
        self.direct_factors = direct_factors
        inv = np.empty(n, dtype=np.int32)
        cols = np.argwhere(table == 0)
        inv[cols[:, 0]] = cols[:, 1]
        inv.setflags(write=False)
        self.inv = inv
        self._memo: dict = {}  # single-writer cache for derived data
        self._kctx = None

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order})"

    def kernel_ctx(self):
        if self._kctx is None:
            self._kctx = _core.kernels.prepare(self.table, self.inv)
        return self._kctx

    # -- element operations ------------------------------------------------

    def multiply(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def conjugate(self, a: int, g: int) -> int:
        """g^-1 a g."""
        t = self.table
        return int(t[t[self.inv[g], a], g])

    def commutator(self, a: int, b: int) -> int:
        t = self.table
        return int(t[t[self.inv[a], self.inv[b]], t[a, b]])

    def power(self, a: int, k: int) -> int:
        o = self.element_order(a)
        k %= o
        t = self.table
        acc = 0
        base = a
        while k:
            if k & 1:
                acc = int(t[acc, base])
            base = int(t[base, base])
            k >>= 1
        return acc

    def element_order(self, a: int) -> int:
        return int(self._orders()[a])

    def element_orders(self) -> np.ndarray:
        return self._orders().copy()

    def _orders(self) -> np.ndarray:
        if "orders" not in self._memo:
            self._power_scan()
        return self._memo["orders"]

    def _power_scan(self) -> None:
        # one sweep computes every element's order and its cyclic subgroup
        n, t = self.order, self.table
        idx = np.arange(n)
        cur = idx.copy()
        orders = np.zeros(n, dtype=np.int64)
        hull = np.zeros((n, n), dtype=bool)
        k = 1
        while True:
            hull[idx, cur] = True
            orders[(cur == 0) & (orders == 0)] = k
            if orders.all():
                break
            cur = t[idx, cur]
            k += 1
        packed = np.packbits(hull, axis=1, bitorder="little")
        masks = [int.from_bytes(row.tobytes(), "little") for row in packed]
        self._memo["orders"] = orders
        self._memo["cyclic_masks"] = masks

    def cyclic_masks(self) -> list[int]:
        if "cyclic_masks" not in self._memo:
            self._power_scan()
        return self._memo["cyclic_masks"]

    # -- subsets -----------------------------------------------------------

    def subgroup(self, mask: int) -> Subgroup:
        return Subgroup(self, mask)

    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def cyclic_subgroup(self, a: int) -> Subgroup:
        return Subgroup(self, self.cyclic_masks()[a])

    def generated_subgroup(self, gens) -> Subgroup:
        mask = _core.kernels.closure(self.kernel_ctx(), mask_of(gens))
        return Subgroup(self, mask)

    def closure_mask(self, seed: int) -> int:
        return _core.kernels.closure(self.kernel_ctx(), seed)

    def normalizer_mask(self, mask: int) -> int:
        return _core.kernels.normalizer(self.kernel_ctx(), mask)

    def normalizer_of_cyclic(self, a: int) -> Subgroup:
        key = ("norm_cyc", self.cyclic_masks()[a])
        if key not in self._memo:
            self._memo[key] = self.normalizer_mask(key[1])
        return Subgroup(self, self._memo[key])

    def centralizer(self, a: int) -> Subgroup:
        t = self.table
        return Subgroup(self, from_bool(t[:, a] == t[a, :]))

    def centralizer_of_set(self, elems) -> Subgroup:
        mask = self.full_mask()
        for a in elems:
            mask &= self.centralizer(a).mask
        return Subgroup(self, mask)

    def conjugate_set(self, mask: int, g: int) -> int:
        t = self.table
        ig = int(self.inv[g])
        out = 0
        for m in bits(mask):
            out |= 1 << int(t[t[ig, m], g])
        return out

    # -- p-parts -----------------------------------------------------------

    def p_component(self, a: int, p: int) -> int:
        """The p-part of a: the power of a of order p^v_p(o(a))."""
        o = self.element_order(a)
        e = 0
        m = o
        while m % p == 0:
            m //= p
            e += 1
        if e == 0:
            return 0
        t = pow(m, -1, p**e)
        return self.power(a, m * t)

    def p_power_part(self, a: int, p: int) -> int:
        """a^(o(a)/p), the canonical power of prime order p. Requires p | o(a)."""
        o = self.element_order(a)
        if o % p:
            raise ValueError(f"{p} does not divide the order {o} of element {a}")
        return self.power(a, o // p)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as an element bitset; assumed closed (use Group.generated_subgroup)."""

    group: Group
    mask: int

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, a: int) -> bool:
        return bool(self.mask >> a & 1)

    def members(self) -> list[int]:
        return list(bits(self.mask))

    def is_whole_group(self) -> bool:
        return self.mask == self.group.full_mask()

    def intersect(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.group, self.mask & other.mask)

    def join(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.group, self.group.closure_mask(self.mask | other.mask))

    def is_normal_in(self, other: Subgroup) -> bool:
        """Whether self is normal in other; requires self <= other."""
        if self.mask & ~other.mask:
            raise ValueError("is_normal_in requires the first subgroup inside the second")
        g = self.group
        for b in bits(other.mask & ~self.mask):
            for m in bits(self.mask):
                if not self.mask >> g.conjugate(m, b) & 1:
                    return False
        return True

    def is_normal(self) -> bool:
        return self.is_normal_in(Subgroup(self.group, self.group.full_mask()))

    def is_abelian(self) -> bool:
        mem = self.members()
        t = self.group.table
        sub = t[np.ix_(mem, mem)]
        return bool((sub == sub.T).all())

    def as_group(self) -> tuple[Group, np.ndarray]:
        """Extract a standalone Group; returns (subgroup, member indices)."""
        key = ("as_group", self.mask)
        memo = self.group._memo
        if key not in memo:
            mem = np.array(self.members(), dtype=np.int32)
            pos = np.full(self.group.order, -1, dtype=np.int32)
            pos[mem] = np.arange(mem.size, dtype=np.int32)
            sub = pos[self.group.table[np.ix_(mem, mem)]]
            if (sub < 0).any():
                raise ValueError("subset is not closed under multiplication")
            words = self.group.words
            swords = None
            if words is not None:
                swords = {int(pos[i]): words[int(i)] for i in mem if int(i) in words}
            memo[key] = (
                Group(sub, name=f"{self.group.name}|{len(self)}", words=swords, validate=False),
                mem,
            )
        return memo[key]


def is_normal_in(a: Subgroup, b: Subgroup) -> bool:
    return a.is_normal_in(b)
