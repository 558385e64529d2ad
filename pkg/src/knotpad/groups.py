"""Finite groups with a marked conjugacy class.

The Dijkgraaf-Witten style oracle counts homomorphisms of the knot group
into a finite group G sending meridians into a fixed conjugacy class C.
Groups are given by raw multiplication tables, so arbitrary user groups can
be loaded from JSON; the built-in presets (A5 and PSL(2,7)) are constructed
programmatically from permutation representations.
"""

from __future__ import annotations

import itertools
import json
import random

from .pd import DiagramError


class FiniteGroupWithClass:
    """Multiplication table group with a marked conjugacy class.

    Elements are indices 0..order-1.  The table is validated on
    construction: total inverses, a two-sided identity, spot-checked
    associativity, and closure of the class under conjugation.
    """

    def __init__(self, table, class_indices, name: str = "custom"):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.order = len(self.table)
        self.name = name
        n = self.order
        if n == 0 or any(len(row) != n for row in self.table):
            raise DiagramError("multiplication table must be square and nonempty")
        if any(x < 0 or x >= n for row in self.table for x in row):
            raise DiagramError("table entries out of range")
        self.identity = self._find_identity()
        self.inv = self._build_inverses()
        self._spot_check_associativity()
        self.class_indices = tuple(sorted(set(int(i) for i in class_indices)))
        if not self.class_indices:
            raise DiagramError("marked class is empty")
        if any(i < 0 or i >= n for i in self.class_indices):
            raise DiagramError("class indices out of range")
        self._check_class_closed()

    def _find_identity(self) -> int:
        for e in range(self.order):
            if all(
                self.table[e][x] == x and self.table[x][e] == x
                for x in range(self.order)
            ):
                return e
        raise DiagramError("table has no identity element")

    def _build_inverses(self) -> tuple[int, ...]:
        inv = [-1] * self.order
        for x in range(self.order):
            for y in range(self.order):
                if self.table[x][y] == self.identity:
                    inv[x] = y
                    break
            if inv[x] < 0:
                raise DiagramError(f"element {x} has no inverse")
        return tuple(inv)

    def _spot_check_associativity(self, trials: int = 200) -> None:
        rng = random.Random(0)
        n = self.order
        for _ in range(trials):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise DiagramError("multiplication table is not associative")

    def _check_class_closed(self) -> None:
        cls = set(self.class_indices)
        for g in range(self.order):
            for x in self.class_indices:
                if self.conj(g, x) not in cls:
                    raise DiagramError("marked class is not closed under conjugation")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inv[g]]

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.table[y][x]
            k += 1
        return k

    def exponent(self) -> int:
        from math import lcm

        out = 1
        for x in range(self.order):
            out = lcm(out, self.element_order(x))
        return out

    def conjugacy_class(self, x: int) -> tuple[int, ...]:
        return tuple(sorted({self.conj(g, x) for g in range(self.order)}))

    def to_json_obj(self) -> dict:
        return {
            "type": "group",
            "order": self.order,
            "table": [list(row) for row in self.table],
            "class": list(self.class_indices),
        }

    def serialize(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":")) + "\n"

    def __repr__(self) -> str:
        return (
            f"FiniteGroupWithClass({self.name}, |G|={self.order}, "
            f"|C|={len(self.class_indices)})"
        )


def parse_group(text: str) -> FiniteGroupWithClass:
    """Parse a group-JSON document."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict) or obj.get("type") != "group":
        raise DiagramError('expected {"type":"group",...}')
    if not isinstance(obj.get("table"), list) or not isinstance(obj.get("class"), list):
        raise DiagramError('group document needs "table" and "class"')
    gc = FiniteGroupWithClass(obj["table"], obj["class"])
    if "order" in obj and obj["order"] != gc.order:
        raise DiagramError("declared order disagrees with table size")
    return gc


# ---------------------------------------------------------------------------
# Presets from permutation representations
# ---------------------------------------------------------------------------


def _group_from_permutations(perms, class_rep, name: str) -> FiniteGroupWithClass:
    elems = sorted(set(perms))
    index = {p: i for i, p in enumerate(elems)}
    n = len(elems)
    table = [[0] * n for _ in range(n)]
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            # (p*q)(x) = p(q(x))
            table[i][j] = index[tuple(p[x] for x in q)]
    rep = index[class_rep]
    inv = {index[p]: index[tuple(sorted(range(len(p)), key=p.__getitem__))] for p in elems}
    cls = sorted({table[table[g][rep]][inv[g]] for g in range(n)})
    return FiniteGroupWithClass(table, cls, name=name)


def _a5_elements():
    out = []
    for p in itertools.permutations(range(5)):
        inversions = sum(
            1 for i in range(5) for j in range(i + 1, 5) if p[i] > p[j]
        )
        if inversions % 2 == 0:
            out.append(p)
    return out


def _a5_preset(which: str) -> FiniteGroupWithClass:
    five = (1, 2, 3, 4, 0)  # the 5-cycle (0 1 2 3 4)
    five_sq = tuple(five[five[i]] for i in range(5))
    three = (1, 2, 0, 3, 4)  # the 3-cycle (0 1 2)
    rep = {"5cycle-a": five, "5cycle-b": five_sq, "3cycle": three}[which]
    return _group_from_permutations(_a5_elements(), rep, name=f"a5/{which}")


def _psl27_elements():
    """PSL(2,7) acting on the projective line over F7 (point 7 is infinity)."""
    inf = 7
    seen = set()
    for a, b, c, d in itertools.product(range(7), repeat=4):
        if (a * d - b * c) % 7 != 1:
            continue
        perm = []
        for x in range(8):
            if x == inf:
                perm.append(inf if c == 0 else (a * pow(c, 5, 7)) % 7)
            else:
                num, den = (a * x + b) % 7, (c * x + d) % 7
                perm.append(inf if den == 0 else (num * pow(den, 5, 7)) % 7)
        seen.add(tuple(perm))
    return sorted(seen)


def _psl27_preset() -> FiniteGroupWithClass:
    # class of the translation x -> x+1, an order-7 element
    rep = (1, 2, 3, 4, 5, 6, 0, 7)
    return _group_from_permutations(_psl27_elements(), rep, name="psl27/7a")


_PRESET_BUILDERS = {
    "a5/5cycle-a": lambda: _a5_preset("5cycle-a"),
    "a5/5cycle-b": lambda: _a5_preset("5cycle-b"),
    "a5/3cycle": lambda: _a5_preset("3cycle"),
    "psl27/7a": _psl27_preset,
}

_preset_cache: dict[str, FiniteGroupWithClass] = {}


def preset_names() -> tuple[str, ...]:
    return tuple(sorted(_PRESET_BUILDERS))


def load_preset(name: str) -> FiniteGroupWithClass:
    if name not in _PRESET_BUILDERS:
        raise DiagramError(
            f"unknown group preset {name!r}; available: {', '.join(preset_names())}"
        )
    if name not in _preset_cache:
        _preset_cache[name] = _PRESET_BUILDERS[name]()
    return _preset_cache[name]
