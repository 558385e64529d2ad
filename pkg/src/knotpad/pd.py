"""Planar diagram (PD) model for oriented knot diagrams.

A crossing is a quadruple of edge labels listed counterclockwise starting at
the incoming under-strand edge, the usual tabulation convention.  Slots are
numbered 0..3, so slot 0 is the incoming under edge and slot 2 the outgoing
under edge; which of slots 1/3 carries the incoming over edge is recovered by
a traversal, and determines the crossing sign (+1 when the over strand enters
at slot 3).

Diagrams live on the 2-sphere: the outer face is an ordinary face, and
planarity is checked by an Euler count on the faces produced by dart tracing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class DiagramError(ValueError):
    """Malformed diagram data (bad labels, non-planar map, bad orientation)."""


class NotAKnotError(DiagramError):
    """Valid link diagram, but not a single component."""


class BudgetError(RuntimeError):
    """Computation exceeds a configured size cap."""


Dart = tuple[int, int]  # (crossing id, slot)


class OrientedPDDiagram:
    """Immutable oriented knot diagram given by a PD code.

    The 0-crossing unknot is the special instance with an empty crossing list
    and the ``unknotted`` flag set.
    """

    def __init__(self, crossings, unknotted: bool = False):
        self.crossings: tuple[tuple[int, int, int, int], ...] = tuple(
            tuple(int(x) for x in q) for q in crossings
        )
        self.unknotted = bool(unknotted)
        if self.unknotted and self.crossings:
            raise DiagramError("unknotted flag requires an empty crossing list")
        if not self.unknotted and not self.crossings:
            raise DiagramError("empty crossing list requires the unknotted flag")
        for q in self.crossings:
            if len(q) != 4:
                raise DiagramError("crossing quadruple must have 4 edge labels")
        self._build()

    # -- construction ---------------------------------------------------

    def _build(self) -> None:
        n = len(self.crossings)
        self.edge_count = 2 * n
        ends: dict[int, list[Dart]] = {}
        for c, q in enumerate(self.crossings):
            for s, e in enumerate(q):
                ends.setdefault(e, []).append((c, s))
        for e, occ in ends.items():
            if len(occ) != 2:
                raise DiagramError(f"edge multiplicity: label {e} appears {len(occ)} times")
        self.edge_ends: dict[int, tuple[Dart, Dart]] = {
            e: (occ[0], occ[1]) for e, occ in ends.items()
        }
        self._twin: dict[Dart, Dart] = {}
        for a, b in self.edge_ends.values():
            self._twin[a] = b
            self._twin[b] = a
        self._edge_at: dict[Dart, int] = {}
        for e, (a, b) in self.edge_ends.items():
            self._edge_at[a] = e
            self._edge_at[b] = e

        if n:
            self._trace_faces()
            self._orient()
        else:
            self.faces = ()
            self.face_of_dart = {}
            self.head = {}
            self.tail = {}
            self.over_in = {}
            self.signs = ()
            self._components = 1

    def _trace_faces(self) -> None:
        n = len(self.crossings)
        seen: set[Dart] = set()
        faces: list[tuple[Dart, ...]] = []
        face_of: dict[Dart, int] = {}
        for c in range(n):
            for s in range(4):
                start = (c, s)
                if start in seen:
                    continue
                orbit = []
                d = start
                while True:
                    orbit.append(d)
                    seen.add(d)
                    tc, ts = self._twin[d]
                    d = (tc, (ts + 1) % 4)
                    if d == start:
                        break
                    if d in seen:
                        raise DiagramError("face tracing failed (corrupt pairing)")
                fid = len(faces)
                faces.append(tuple(orbit))
                for d in orbit:
                    face_of[d] = fid
        if len(faces) != n + 2:
            raise DiagramError(
                f"non-planar or split map: {n} crossings need {n + 2} faces, "
                f"traced {len(faces)}"
            )
        self.faces = tuple(faces)
        self.face_of_dart = face_of

    def _orient(self) -> None:
        """Walk every strand, fixing edge directions and over-entry slots.

        Each crossing carries two strand passes: the under pass through slots
        {0,2} (entering at 0 by convention) and the over pass through {1,3}.
        Leaving a crossing at some slot, the strand arrives at the twin dart
        and exits at the opposite slot there.
        """
        n = len(self.crossings)
        head: dict[int, Dart] = {}
        tail: dict[int, Dart] = {}
        over_in: dict[int, int] = {}
        remaining = {(c, u) for c in range(n) for u in (0, 1)}
        components = 0
        while remaining:
            # seed under passes first: their direction is forced, while a
            # component passing only over gets an arbitrary orientation
            c0, u0 = min(remaining, key=lambda t: (t[1], t[0]))
            start = (c0, 2) if u0 == 0 else (c0, 3)
            components += 1
            d = start
            while True:
                c, s = d
                remaining.discard((c, 0 if s in (0, 2) else 1))
                e = self._edge_at[d]
                if e in tail:
                    raise DiagramError("orientation walk revisited an edge")
                tail[e] = d
                arr = self._twin[d]
                head[e] = arr
                ac, asl = arr
                if asl == 2:
                    raise DiagramError(
                        "orientation conflict: edge arrives at an under-out slot"
                    )
                if asl in (1, 3):
                    if over_in.get(ac, asl) != asl:
                        raise DiagramError("orientation conflict at a crossing")
                    over_in[ac] = asl
                d = (ac, (asl + 2) % 4)
                if d == start:
                    break
        if len(over_in) != n:
            raise DiagramError("orientation walk missed a crossing")
        self.head = head
        self.tail = tail
        self.over_in = over_in
        self.signs = tuple(1 if over_in[c] == 3 else -1 for c in range(n))
        self._components = components

    # -- queries ---------------------------------------------------------

    def component_count(self) -> int:
        return self._components

    def writhe(self) -> int:
        return sum(self.signs)

    def crossing_count(self) -> int:
        return len(self.crossings)

    def sign(self, c: int) -> int:
        return self.signs[c]

    @staticmethod
    def is_under_end(dart: Dart) -> bool:
        return dart[1] in (0, 2)

    def is_alternating(self) -> bool:
        """True iff every edge joins an under-strand end to an over-strand end."""
        for a, b in self.edge_ends.values():
            if self.is_under_end(a) == self.is_under_end(b):
                return False
        return True

    def corner_face(self, c: int, s: int) -> int:
        """Face at the corner of crossing c between slots s and s+1."""
        return self.face_of_dart[(c, (s + 1) % 4)]

    def edges(self) -> list[int]:
        return sorted(self.edge_ends)

    # -- serialization ---------------------------------------------------

    def to_json_obj(self) -> dict:
        if self.unknotted:
            return {"type": "pd", "crossings": [], "unknot": True}
        return {"type": "pd", "crossings": [list(q) for q in self.crossings]}

    def serialize(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":")) + "\n"

    def relabeled(self) -> "OrientedPDDiagram":
        """Canonical relabeling: edges numbered 1.. along the traversal."""
        if self.unknotted:
            return self
        if self._components != 1:
            raise NotAKnotError("relabeling requires a single component")
        order: dict[int, int] = {}
        d = (0, 2)
        k = 0
        while True:
            e = self._edge_at[d]
            if e in order:
                break
            k += 1
            order[e] = k
            ac, asl = self._twin[d]
            d = (ac, (asl + 2) % 4)
        new = [tuple(order[e] for e in q) for q in self.crossings]
        return OrientedPDDiagram(new)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrientedPDDiagram)
            and self.crossings == other.crossings
            and self.unknotted == other.unknotted
        )

    def __hash__(self) -> int:
        return hash((self.crossings, self.unknotted))

    def __repr__(self) -> str:
        if self.unknotted:
            return "OrientedPDDiagram(unknot)"
        return f"OrientedPDDiagram({len(self.crossings)} crossings)"


def parse_pd(text: str) -> OrientedPDDiagram:
    """Parse a PD-JSON document into a validated knot diagram."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict) or obj.get("type") != "pd":
        raise DiagramError('expected {"type":"pd",...}')
    crossings = obj.get("crossings")
    if not isinstance(crossings, list):
        raise DiagramError('missing "crossings" list')
    if not crossings:
        if not obj.get("unknot"):
            raise DiagramError("empty crossing list requires unknot flag")
        return OrientedPDDiagram([], unknotted=True)
    diagram = OrientedPDDiagram(crossings)
    if diagram.component_count() != 1:
        raise NotAKnotError(
            f"diagram has {diagram.component_count()} components, expected a knot"
        )
    return diagram


def unknot_diagram() -> OrientedPDDiagram:
    return OrientedPDDiagram([], unknotted=True)


# ---------------------------------------------------------------------------
# Surgery builder
# ---------------------------------------------------------------------------

Port = tuple  # ("x", cid, slot) or ("j", jid, side)


@dataclass
class _Crossing:
    under_axis: int  # 0: under diagonal is slots {0,2}; 1: slots {1,3}


class DiagramBuilder:
    """Mutable port graph used to perform diagram surgery.

    Crossings have four ports in counterclockwise order 0..3 (read as
    SW, SE, NE, NW when drawn upright); the strand passes straight through,
    0<->2 and 1<->3.  ``under_axis`` records which diagonal goes under.
    A twist box of coefficient +1 is the crossing where the 0-2 diagonal
    (lower-left to upper-right) passes over, i.e. under_axis == 1.

    Two-port junction nodes stand in for bare arcs (plat cups and caps,
    smoothing arcs); they are dissolved when the PD code is extracted.
    """

    def __init__(self):
        self.crossings: dict[int, _Crossing] = {}
        self.junctions: set[int] = set()
        self.conn: dict[Port, Port] = {}
        self._next_x = 0
        self._next_j = 0

    # -- node management -------------------------------------------------

    def add_crossing(self, box_sign: int) -> int:
        cid = self._next_x
        self._next_x += 1
        self.crossings[cid] = _Crossing(under_axis=1 if box_sign > 0 else 0)
        return cid

    def add_junction(self) -> int:
        jid = self._next_j
        self._next_j += 1
        self.junctions.add(jid)
        return jid

    @staticmethod
    def xport(cid: int, slot: int) -> Port:
        return ("x", cid, slot)

    @staticmethod
    def jport(jid: int, side: int) -> Port:
        return ("j", jid, side)

    def connect(self, a: Port, b: Port) -> None:
        if a in self.conn or b in self.conn:
            raise DiagramError("port already connected")
        if a == b:
            raise DiagramError("cannot connect a port to itself")
        self.conn[a] = b
        self.conn[b] = a

    def disconnect(self, a: Port) -> Port:
        b = self.conn.pop(a)
        del self.conn[b]
        return b

    # -- importing an existing diagram ------------------------------------

    @classmethod
    def from_diagram(cls, K: OrientedPDDiagram):
        """Builder plus an edge map: label -> (tail port, head port)."""
        b = cls()
        for _ in range(len(K.crossings)):
            b.add_crossing(-1)  # PD convention: under diagonal {0,2}
        edge_ports: dict[int, tuple[Port, Port]] = {}
        for e in K.edge_ends:
            tc, ts = K.tail[e]
            hc, hs = K.head[e]
            tp, hp = cls.xport(tc, ts), cls.xport(hc, hs)
            b.connect(tp, hp)
            edge_ports[e] = (tp, hp)
        return b, edge_ports

    # -- surgery primitives ------------------------------------------------

    def twist_chain(self, coeff: int) -> tuple[Port, Port, Port, Port]:
        """Build |coeff| stacked crossings of box sign sign(coeff).

        Returns (bottom-left, bottom-right, top-left, top-right) loose ports.
        For coeff == 0 the identity tangle (two junction wires) is returned.
        """
        if coeff == 0:
            j1 = self.add_junction()
            j2 = self.add_junction()
            return (
                self.jport(j1, 0),
                self.jport(j2, 0),
                self.jport(j1, 1),
                self.jport(j2, 1),
            )
        s = 1 if coeff > 0 else -1
        cids = [self.add_crossing(s) for _ in range(abs(coeff))]
        for lo, hi in zip(cids, cids[1:]):
            self.connect(self.xport(lo, 3), self.xport(hi, 0))
            self.connect(self.xport(lo, 2), self.xport(hi, 1))
        first, last = cids[0], cids[-1]
        return (
            self.xport(first, 0),
            self.xport(first, 1),
            self.xport(last, 3),
            self.xport(last, 2),
        )

    def splice_twist_into_pair(self, wire_a: Port, wire_b: Port, coeff: int) -> None:
        """Insert a twist region across two parallel wires.

        The box is inserted so wire_a feeds the left side (bottom-left in,
        top-left out) and wire_b the right side.
        """
        a0, a1 = wire_a, self.disconnect(wire_a)
        b0, b1 = wire_b, self.disconnect(wire_b)
        bl, br, tl, tr = self.twist_chain(coeff)
        self.connect(a0, bl)
        self.connect(tl, a1)
        self.connect(b0, br)
        self.connect(tr, b1)

    def _detach_with_substitution(self, cid: int, port_sub: dict[Port, Port]) -> None:
        """Delete crossing cid, reattaching its four wires per port_sub."""
        wires = []
        done: set[Port] = set()
        for s in range(4):
            p = self.xport(cid, s)
            if p in done:
                continue
            q = self.conn[p]
            done.add(p)
            done.add(q)
            wires.append((p, q))
        for p, q in wires:
            self.disconnect(p)
        del self.crossings[cid]
        for p, q in wires:
            self.connect(port_sub.get(p, p), port_sub.get(q, q))

    def replace_crossing_with_twists(self, cid: int, coeff: int) -> None:
        """Replace crossing cid by a twist chain of the given coefficient.

        The chain occupies the same four boundary ports: 0 -> bottom-left,
        1 -> bottom-right, 3 -> top-left, 2 -> top-right.
        """
        bl, br, tl, tr = self.twist_chain(coeff)
        sub = {
            self.xport(cid, 0): bl,
            self.xport(cid, 1): br,
            self.xport(cid, 3): tl,
            self.xport(cid, 2): tr,
        }
        self._detach_with_substitution(cid, sub)

    def remove_crossing_smoothed(self, cid: int, pairing) -> None:
        """Delete a crossing, joining its neighbor wires per ``pairing``.

        ``pairing`` is two disjoint slot pairs, e.g. ((0, 3), (1, 2)); each
        pair is bridged by a junction arc.
        """
        sub: dict[Port, Port] = {}
        for a, b in pairing:
            j = self.add_junction()
            sub[self.xport(cid, a)] = self.jport(j, 0)
            sub[self.xport(cid, b)] = self.jport(j, 1)
        self._detach_with_substitution(cid, sub)

    def insert_kink(self, wire: Port, sign: int, flip_side: bool | None = None) -> None:
        """Insert an R1 kink of the given crossing sign on a wire.

        The oriented sign equals the box sign either way; the loop side only
        decides whether the strand meets the kink over-first or under-first.
        The default side (loop to the right of a negative kink, left of a
        positive one) makes chained kinks alternate regardless of signs.
        """
        a0, a1 = wire, self.disconnect(wire)
        cid = self.add_crossing(1 if sign > 0 else -1)
        if flip_side is None:
            flip_side = sign < 0
        if flip_side:
            # loop joins ports 3 and 0; strand runs in at 1, out at 2
            self.connect(self.xport(cid, 3), self.xport(cid, 0))
            self.connect(a0, self.xport(cid, 1))
            self.connect(self.xport(cid, 2), a1)
        else:
            # loop joins ports 1 and 2; strand runs in at 0, out at 3
            self.connect(self.xport(cid, 1), self.xport(cid, 2))
            self.connect(a0, self.xport(cid, 0))
            self.connect(self.xport(cid, 3), a1)

    # -- extraction --------------------------------------------------------

    def _resolved_connections(self) -> tuple[dict[Port, Port], int]:
        """Dissolve junctions; returns crossing-port pairing and free-loop count."""
        pair: dict[Port, Port] = {}
        visited_j: set[int] = set()
        for c in sorted(self.crossings):
            for s in range(4):
                p = self.xport(c, s)
                if p in pair:
                    continue
                if p not in self.conn:
                    raise DiagramError("dangling crossing port")
                q = self.conn[p]
                hops = 0
                while q[0] == "j":
                    visited_j.add(q[1])
                    other = self.jport(q[1], 1 - q[2])
                    if other not in self.conn:
                        raise DiagramError("dangling junction port")
                    q = self.conn[other]
                    hops += 1
                    if hops > 2 * len(self.conn):
                        raise DiagramError("junction cycle reached from a crossing")
                pair[p] = q
                pair[q] = p
        free_loops = 0
        unvisited = self.junctions - visited_j
        while unvisited:
            j0 = unvisited.pop()
            free_loops += 1
            port = self.conn.get(self.jport(j0, 1))
            guard = 0
            while port is not None and port[0] == "j" and port[1] in unvisited:
                unvisited.discard(port[1])
                port = self.conn.get(self.jport(port[1], 1 - port[2]))
                guard += 1
                if guard > 2 * len(self.conn):
                    raise DiagramError("runaway junction walk")
            if port is None or port[0] != "j":
                raise DiagramError("dangling junction wire")
        return pair, free_loops

    def _strand_flow(self, pair: dict[Port, Port]) -> dict[Port, bool]:
        """Orient every strand; True marks a port where the strand arrives."""
        incoming: dict[Port, bool] = {}
        all_ports = [self.xport(c, s) for c in sorted(self.crossings) for s in range(4)]
        for start in all_ports:
            if start in incoming:
                continue
            d = start
            while True:
                incoming[d] = False
                arr = pair[d]
                if arr in incoming:
                    raise DiagramError("orientation conflict in surgery graph")
                incoming[arr] = True
                d = self.xport(arr[1], (arr[2] + 2) % 4)
                if d == start:
                    break
                if d in incoming:
                    raise DiagramError("strand walk collision")
        return incoming

    def to_diagram(self, require_knot: bool = True) -> OrientedPDDiagram:
        """Extract the oriented PD diagram, relabeled canonically."""
        pair, free_loops = self._resolved_connections()
        if not self.crossings:
            if free_loops == 1:
                return unknot_diagram()
            raise NotAKnotError(f"{free_loops} crossingless circles")
        if free_loops:
            raise NotAKnotError("free circles alongside crossings")
        incoming = self._strand_flow(pair)
        cid_index = {c: i for i, c in enumerate(sorted(self.crossings))}
        quad = [[0, 0, 0, 0] for _ in cid_index]
        label = 0
        for c in sorted(self.crossings):
            for s in range(4):
                p = self.xport(c, s)
                if quad[cid_index[c]][s]:
                    continue
                q = pair[p]
                label += 1
                quad[cid_index[c]][s] = label
                quad[cid_index[q[1]]][q[2]] = label
        rotated = []
        for c in sorted(self.crossings):
            under_slots = (0, 2) if self.crossings[c].under_axis == 0 else (1, 3)
            ins = [s for s in under_slots if incoming[self.xport(c, s)]]
            if len(ins) != 1:
                raise DiagramError("under strand direction ambiguous")
            r = ins[0]
            i = cid_index[c]
            rotated.append(tuple(quad[i][(r + k) % 4] for k in range(4)))
        diagram = OrientedPDDiagram(rotated)
        if require_knot and diagram.component_count() != 1:
            raise NotAKnotError(
                f"surgery produced {diagram.component_count()} components"
            )
        return diagram.relabeled() if diagram.component_count() == 1 else diagram


# ---------------------------------------------------------------------------
# Derived diagram operations
# ---------------------------------------------------------------------------


def apply_r1_pair(K: OrientedPDDiagram, edge: int) -> OrientedPDDiagram:
    """Insert two kinks of opposite sign on an edge (regular isotopy)."""
    if K.unknotted:
        return kinked_unknot([1, -1])
    if edge not in K.edge_ends:
        raise DiagramError(f"no edge labeled {edge}")
    b, edge_ports = DiagramBuilder.from_diagram(K)
    tp, _hp = edge_ports[edge]
    b.insert_kink(tp, +1)
    b.insert_kink(tp, -1)
    return b.to_diagram()


def kinked_unknot(signs) -> OrientedPDDiagram:
    """Unknot diagram consisting of a chain of kinks with the given signs."""
    if not signs:
        return unknot_diagram()
    b = DiagramBuilder()
    j = b.add_junction()
    b.connect(b.jport(j, 0), b.jport(j, 1))
    wire = b.jport(j, 0)
    for s in signs:
        b.insert_kink(wire, s)
    return b.to_diagram()


def connect_sum(
    K1: OrientedPDDiagram,
    K2: OrientedPDDiagram,
    e1: int | None = None,
    e2: int | None = None,
) -> OrientedPDDiagram:
    """Diagrammatic connected sum, splicing edge e1 of K1 to edge e2 of K2."""
    if K1.unknotted:
        return K2
    if K2.unknotted:
        return K1
    e1 = e1 if e1 is not None else min(K1.edge_ends)
    if e2 is None:
        # pick a splice edge whose tail end matches e1's in over/under type,
        # so that two alternating summands stay alternating after the splice
        t1_under = OrientedPDDiagram.is_under_end(K1.tail[e1])
        candidates = [
            e for e in sorted(K2.edge_ends)
            if OrientedPDDiagram.is_under_end(K2.tail[e]) == t1_under
        ]
        e2 = candidates[0] if candidates else min(K2.edge_ends)
    b = DiagramBuilder()
    offsets = []
    for K in (K1, K2):
        offsets.append(b._next_x)
        for _ in range(len(K.crossings)):
            b.add_crossing(-1)
    ports = []
    for K, off in zip((K1, K2), offsets):
        eports = {}
        for e in K.edge_ends:
            tc, ts = K.tail[e]
            hc, hs = K.head[e]
            tp = b.xport(tc + off, ts)
            hp = b.xport(hc + off, hs)
            b.connect(tp, hp)
            eports[e] = (tp, hp)
        ports.append(eports)
    t1, h1 = ports[0][e1]
    t2, h2 = ports[1][e2]
    b.disconnect(t1)
    b.disconnect(t2)
    b.connect(t1, h2)
    b.connect(t2, h1)
    return b.to_diagram()


def switch_crossing(K: OrientedPDDiagram, c: int) -> OrientedPDDiagram:
    """Exchange over and under strands at one crossing."""
    quads = [list(q) for q in K.crossings]
    r = K.over_in[c]  # the incoming over edge becomes the incoming under edge
    quads[c] = [quads[c][(r + k) % 4] for k in range(4)]
    return OrientedPDDiagram([tuple(q) for q in quads])


def mirror(K: OrientedPDDiagram) -> OrientedPDDiagram:
    """Mirror image: every crossing switched, projection unchanged."""
    if K.unknotted:
        return K
    quads = []
    for c, q in enumerate(K.crossings):
        r = K.over_in[c]
        quads.append(tuple(q[(r + k) % 4] for k in range(4)))
    return OrientedPDDiagram(quads)


def component_count(K: OrientedPDDiagram) -> int:
    return K.component_count()


def writhe(K: OrientedPDDiagram) -> int:
    return K.writhe()


def is_alternating(K: OrientedPDDiagram) -> bool:
    return K.is_alternating()


# ---------------------------------------------------------------------------
# Checkerboard (Tait) graphs
# ---------------------------------------------------------------------------


class CheckerboardGraph:
    """Tait graph of a diagram for one of the two checkerboard shadings.

    Vertices are the shaded faces; each crossing contributes one edge
    joining the two shaded faces meeting at it (a loop when they coincide),
    tagged with the crossing id and the crossing's sign.
    """

    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)  # face ids
        self.edges = tuple(edges)  # (face_a, face_b, crossing id, sign)

    def edge_count(self) -> int:
        return len(self.edges)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b, _c, _s in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


def face_two_coloring(K: OrientedPDDiagram) -> dict[int, int]:
    """2-color the faces so faces sharing an edge get opposite colors."""
    color: dict[int, int] = {}
    nfaces = len(K.faces)
    if nfaces == 0:
        return color
    adj: dict[int, set[int]] = {f: set() for f in range(nfaces)}
    for a, b in K.edge_ends.values():
        fa = K.face_of_dart[a]
        fb = K.face_of_dart[b]
        adj[fa].add(fb)
        adj[fb].add(fa)
    color[0] = 0
    stack = [0]
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if g not in color:
                color[g] = 1 - color[f]
                stack.append(g)
            elif color[g] == color[f]:
                raise DiagramError("faces not 2-colorable; corrupt planar map")
    return color


def checkerboard(K: OrientedPDDiagram, shading: str) -> CheckerboardGraph:
    """Tait graph for the requested shading ("black" or "white").

    Black is the color class containing face 0 (the face traced first from
    crossing 0), a deterministic but otherwise arbitrary choice.
    """
    if shading not in ("black", "white"):
        raise ValueError("shading must be 'black' or 'white'")
    if K.unknotted:
        return CheckerboardGraph((0,), ())
    color = face_two_coloring(K)
    want = 0 if shading == "black" else 1
    verts = tuple(sorted(f for f, col in color.items() if col == want))
    edges = []
    for c in range(len(K.crossings)):
        # corner colors alternate around a crossing; the two corners of the
        # wanted color are the opposite pair
        corner_faces = [K.corner_face(c, s) for s in range(4)]
        shaded = [f for f in corner_faces if color[f] == want]
        edges.append((shaded[0], shaded[1], c, K.signs[c]))
    return CheckerboardGraph(verts, edges)
