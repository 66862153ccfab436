"""Group constructors: families, presentations, products, semidirect
products with validated actions, and file ingestion."""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from pathlib import Path

import numpy as np

from .group import Group, GroupError

DEFAULT_ORDER_CAP = 4096


class OrderCapError(GroupError):
    pass


def order_cap() -> int:
    raw = os.environ.get("NORMGRAPH_ORDER_CAP")
    return DEFAULT_ORDER_CAP if raw is None else int(raw)


def _check_cap(n: int, what: str) -> None:
    cap = order_cap()
    if n > cap:
        raise OrderCapError(f"{what} has order {n}, above the cap {cap}")


def _pow_word(sym: str, e: int) -> str:
    if e == 0:
        return ""
    return sym if e == 1 else f"{sym}^{e}"


def _join_word(*parts: str) -> str:
    word = "".join(p for p in parts if p)
    return word or "1"


# -- permutation utilities --------------------------------------------------


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Product p*q: apply q first, then p."""
    return tuple(p[q[i]] for i in range(len(p)))


def cycle_notation(p: tuple[int, ...]) -> str:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append("(" + " ".join(str(i + 1) for i in cyc) + ")")
    return "".join(out) or "e"


def group_from_permutations(
    gens: list[tuple[int, ...]], name: str, degree: int
) -> Group:
    ident = tuple(range(degree))
    for g in gens:
        if sorted(g) != list(ident):
            raise GroupError(f"not a permutation of 1..{degree}: {g}")
    elems = [ident]
    index = {ident: 0}
    head = 0
    while head < len(elems):
        p = elems[head]
        head += 1
        for g in gens:
            r = compose(p, g)
            if r not in index:
                index[r] = len(elems)
                elems.append(r)
                _check_cap(len(elems), name)
    n = len(elems)
    table = np.empty((n, n), dtype=np.int32)
    for a, pa in enumerate(elems):
        row = table[a]
        for b, pb in enumerate(elems):
            row[b] = index[compose(pa, pb)]
    words = {i: cycle_notation(p) for i, p in enumerate(elems)}
    return Group(table, name=name, words=words)


# -- standard families ------------------------------------------------------


@lru_cache(maxsize=None)
def cyclic(n: int, symbol: str = "g") -> Group:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    _check_cap(n, f"C{n}")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    words = {i: _join_word(_pow_word(symbol, i)) for i in range(n)}
    return Group(table, name=f"C{n}", words=words)


@lru_cache(maxsize=None)
def dihedral(order: int) -> Group:
    if order < 4 or order % 2:
        raise GroupError("dihedral order must be an even number >= 4")
    _check_cap(order, f"D{order}")
    n = order // 2
    table = np.empty((order, order), dtype=np.int32)
    words = {}
    for i in range(n):
        for f in range(2):
            a = i * 2 + f
            words[a] = _join_word(_pow_word("r", i), "s" if f else "")
            for j in range(n):
                for g in range(2):
                    k = (i + j) % n if f == 0 else (i - j) % n
                    table[a, j * 2 + g] = k * 2 + (f ^ g)
    return Group(table, name=f"D{order}", words=words)


@lru_cache(maxsize=None)
def quaternion(order: int) -> Group:
    if order < 8 or order & (order - 1):
        raise GroupError("generalized quaternion order must be 2^k with k >= 3")
    _check_cap(order, f"Q{order}")
    m = order // 2
    table = np.empty((order, order), dtype=np.int32)
    words = {}
    for i in range(m):
        for f in range(2):
            a = i * 2 + f
            words[a] = _join_word(_pow_word("a", i), "b" if f else "")
            for j in range(m):
                for g in range(2):
                    k = (i + j) % m if f == 0 else (i - j) % m
                    if f and g:  # b^2 = a^(m/2)
                        table[a, j * 2 + g] = ((k + m // 2) % m) * 2
                    else:
                        table[a, j * 2 + g] = k * 2 + (f ^ g)
    return Group(table, name=f"Q{order}", words=words)


@lru_cache(maxsize=None)
def symmetric(m: int) -> Group:
    if not 1 <= m <= 6:
        raise GroupError("symmetric groups are supported for degree 1..6")
    gens = []
    if m >= 2:
        t = list(range(m))
        t[0], t[1] = 1, 0
        gens.append(tuple(t))
    if m >= 3:
        gens.append(tuple(range(1, m)) + (0,))
    # building from all m! tuples at once beats BFS here
    elems = [tuple(p) for p in permutations(range(m))]
    index = {p: i for i, p in enumerate(elems)}
    n = len(elems)
    _check_cap(n, f"S{m}")
    table = np.empty((n, n), dtype=np.int32)
    for a, pa in enumerate(elems):
        row = table[a]
        for b, pb in enumerate(elems):
            row[b] = index[compose(pa, pb)]
    words = {i: cycle_notation(p) for i, p in enumerate(elems)}
    return Group(table, name=f"S{m}", words=words)


@lru_cache(maxsize=None)
def mod16() -> Group:
    """Order 16, generators x (order 8) and y (order 2) with x^y = x^5."""
    table = np.empty((16, 16), dtype=np.int32)
    words = {}
    for a in range(8):
        for b in range(2):
            u = a * 2 + b
            words[u] = _join_word(_pow_word("x", a), "y" if b else "")
            for c in range(8):
                for d in range(2):
                    table[u, c * 2 + d] = ((a + c * 5**b) % 8) * 2 + (b ^ d)
    return Group(table, name="Mod16", words=words)


# -- composite constructions ------------------------------------------------


def product(h: Group, k: Group, name: str | None = None) -> Group:
    n = h.order * k.order
    name = name or f"{h.name}x{k.name}"
    _check_cap(n, name)
    table = (
        h.table[:, None, :, None].astype(np.int64) * k.order
        + k.table[None, :, None, :]
    ).reshape(n, n)
    words = None
    if h.words is not None and k.words is not None:
        words = {
            a * k.order + b: f"({h.words[a]},{k.words[b]})"
            for a in range(h.order)
            for b in range(k.order)
        }
    g = Group(table, name=name, words=words, direct_factors=(h, k))
    return g


def product_embed(g: Group, a: int, b: int) -> int:
    """Index of the pair (a, b) in a group built by `product`."""
    if g.direct_factors is None:
        raise ValueError("group was not built as a direct product")
    return a * g.direct_factors[1].order + b


def semidirect(
    normal: Group,
    acting: Group,
    action: dict[int, tuple[int, ...]],
    name: str | None = None,
) -> Group:
    """Semidirect product normal x| acting.

    `action` maps generator indices of the acting group to permutations of
    the normal group's indices; each must be an automorphism, and the whole
    assignment must extend to a homomorphism (checked during extension).
    """
    nN, nH = normal.order, acting.order
    name = name or f"{normal.name}:{acting.name}"
    _check_cap(nN * nH, name)
    tN = normal.table
    for gidx, perm in action.items():
        p = np.asarray(perm, dtype=np.int32)
        if p.shape != (nN,) or sorted(p.tolist()) != list(range(nN)):
            raise GroupError(f"action of generator {gidx} is not a permutation")
        if p[0] != 0 or not (p[tN] == tN[np.ix_(p, p)]).all():
            raise GroupError(f"action of generator {gidx} is not an automorphism")
    phi: dict[int, np.ndarray] = {0: np.arange(nN, dtype=np.int32)}
    queue = [0]
    while queue:
        hcur = queue.pop()
        for gidx, perm in action.items():
            h2 = acting.multiply(hcur, gidx)
            cand = phi[hcur][np.asarray(perm, dtype=np.int32)]
            if h2 in phi:
                if not (phi[h2] == cand).all():
                    raise GroupError("action does not extend to a homomorphism")
            else:
                phi[h2] = cand
                queue.append(h2)
    if len(phi) != nH:
        raise GroupError("action generators do not generate the acting group")
    n = nN * nH
    table = np.empty((n, n), dtype=np.int32)
    tH = acting.table
    for hh in range(nH):
        ph = phi[hh]
        moved = tN[:, ph]  # x * phi_h(y)
        for kk in range(nH):
            table[hh::nH, kk::nH] = moved * nH + tH[hh, kk]
    words = None
    if normal.words is not None and acting.words is not None:
        words = {
            x * nH + hh: f"({normal.words[x]},{acting.words[hh]})"
            for x in range(nN)
            for hh in range(nH)
        }
    return Group(table, name=name, words=words)


@lru_cache(maxsize=None)
def c3_semidirect_q8() -> Group:
    """C3 x| Q8 where both quaternion units i and j invert the C3 factor."""
    q8 = quaternion(8)
    invert = (0, 2, 1)
    return semidirect(cyclic(3, "z"), q8, {2: invert, 1: invert}, name="C3xQ8")


@lru_cache(maxsize=None)
def two_frob_294() -> Group:
    """(C7 x C7) x| S3: the 3-cycle scales the factors by 2 and 4, the
    transposition swaps them."""
    n = product(cyclic(7, "a"), cyclic(7, "b"))
    s3 = symmetric(3)
    scale = tuple((2 * u) % 7 * 7 + (4 * v) % 7 for u in range(7) for v in range(7))
    swap = tuple(v * 7 + u for u in range(7) for v in range(7))
    three_cycle = 3  # permutation (1 2 3) in lexicographic indexing
    transposition = 2  # permutation (1 2)
    action = {three_cycle: scale, transposition: swap}
    return semidirect(n, s3, action, name="TwoFrob294")


@lru_cache(maxsize=None)
def frobenius20() -> Group:
    """C5 x| C4 with the generator acting as multiplication by 2."""
    act = tuple((2 * v) % 5 for v in range(5))
    return semidirect(cyclic(5, "z"), cyclic(4, "h"), {1: act}, name="F20")


@lru_cache(maxsize=None)
def frobenius21() -> Group:
    """C7 x| C3 with the generator acting as multiplication by 2."""
    act = tuple((2 * v) % 7 for v in range(7))
    return semidirect(cyclic(7, "z"), cyclic(3, "h"), {1: act}, name="F21")


# -- ingestion ---------------------------------------------------------------


def ingest_cayley(path: str | Path) -> Group:
    with open(path) as fh:
        data = json.load(fh)
    try:
        name = data["name"]
        n = data["order"]
        table = data["table"]
    except (TypeError, KeyError) as exc:
        raise GroupError(f"missing field in Cayley file: {exc}") from exc
    if not isinstance(n, int) or len(table) != n:
        raise GroupError("declared order does not match the table")
    _check_cap(n, name)
    return Group(np.asarray(table, dtype=np.int64), name=str(name))


def export_cayley(g: Group, path: str | Path) -> None:
    """Write a group in the JSON format ingest_cayley reads."""
    data = {"name": g.name, "order": g.order, "table": g.table.tolist()}
    Path(path).write_text(json.dumps(data))


def ingest_permutations(path: str | Path) -> Group:
    path = Path(path)
    lines = [ln.strip() for ln in path.read_text().splitlines() if ln.strip()]
    if not lines or not lines[0].lower().startswith("degree"):
        raise GroupError("permutation file must start with 'degree N'")
    degree = int(lines[0].split()[1])
    gens = []
    for ln in lines[1:]:
        gens.append(_parse_cycles(ln, degree))
    if not gens:
        raise GroupError("no generators in permutation file")
    return group_from_permutations(gens, name=path.stem, degree=degree)


def _parse_cycles(line: str, degree: int) -> tuple[int, ...]:
    body = line.replace(",", " ")
    chunks = re.findall(r"\(([^()]*)\)", body)
    if not chunks and body.strip() != "()":
        raise GroupError(f"cannot parse cycle line: {line!r}")
    perm = list(range(degree))
    for chunk in chunks:
        pts = [int(tok) - 1 for tok in chunk.split()]
        if not pts:
            continue
        if any(p < 0 or p >= degree for p in pts):
            raise GroupError(f"cycle entry out of range in {line!r}")
        if len(set(pts)) != len(pts):
            raise GroupError(f"repeated point within a cycle in {line!r}")
        # cycles on one line are applied left to right
        cyc = {pts[i]: pts[(i + 1) % len(pts)] for i in range(len(pts))}
        perm = [cyc.get(v, v) for v in perm]
    return tuple(perm)


def cayley_payload(g: Group) -> dict:
    return {"name": g.name, "order": g.order, "table": g.table.tolist()}


# -- group specifications -----------------------------------------------------


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Dihedral:
    order: int


@dataclass(frozen=True)
class Quaternion:
    order: int


@dataclass(frozen=True)
class Symmetric:
    m: int


@dataclass(frozen=True)
class Mod16:
    pass


@dataclass(frozen=True)
class C3SemidirectQ8:
    pass


@dataclass(frozen=True)
class TwoFrob294:
    pass


@dataclass(frozen=True)
class Product:
    left: "GroupSpec"
    right: "GroupSpec"


@dataclass(frozen=True)
class Semidirect:
    normal: "GroupSpec"
    acting: "GroupSpec"
    action: tuple[tuple[int, tuple[int, ...]], ...]


@dataclass(frozen=True)
class CayleyFile:
    path: str


@dataclass(frozen=True)
class PermFile:
    path: str


GroupSpec = (
    Cyclic
    | Dihedral
    | Quaternion
    | Symmetric
    | Mod16
    | C3SemidirectQ8
    | TwoFrob294
    | Product
    | Semidirect
    | CayleyFile
    | PermFile
)


def build(spec: GroupSpec) -> Group:
    match spec:
        case Cyclic(n):
            return cyclic(n)
        case Dihedral(order):
            return dihedral(order)
        case Quaternion(order):
            return quaternion(order)
        case Symmetric(m):
            return symmetric(m)
        case Mod16():
            return mod16()
        case C3SemidirectQ8():
            return c3_semidirect_q8()
        case TwoFrob294():
            return two_frob_294()
        case Product(left, right):
            return product(build(left), build(right))
        case Semidirect(normal, acting, action):
            return semidirect(build(normal), build(acting), dict(action))
        case CayleyFile(path):
            return ingest_cayley(path)
        case PermFile(path):
            return ingest_permutations(path)
    raise GroupError(f"unknown group spec {spec!r}")


@lru_cache(maxsize=1)
def catalog() -> tuple[Group, ...]:
    """The built-in verification catalog."""
    groups: list[Group] = []
    groups += [cyclic(n) for n in range(1, 25)]
    groups += [dihedral(m) for m in range(4, 41, 2)]
    groups += [quaternion(8), quaternion(16)]
    groups += [symmetric(3), symmetric(4), symmetric(5)]
    groups += [mod16(), c3_semidirect_q8(), two_frob_294()]
    groups += [
        product(symmetric(3), symmetric(3)),
        product(cyclic(3), symmetric(3)),
        product(quaternion(8), dihedral(10)),
        product(quaternion(8), quaternion(8)),
        product(mod16(), c3_semidirect_q8()),
    ]
    groups += [frobenius21(), frobenius20()]
    return tuple(groups)


def catalog_names() -> list[str]:
    return [g.name for g in catalog()]


def catalog_group(name: str) -> Group:
    for g in catalog():
        if g.name == name:
            return g
    raise GroupError(f"no catalog group named {name!r}")
