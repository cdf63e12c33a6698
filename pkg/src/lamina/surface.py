"""Compact orientable surfaces and their standard pants decompositions.

A pants piece has three boundary slots numbered 0, 1, 2.  A decomposition
is a list of pants together with a pairing of slots (one pair per pants
curve) and an assignment of the remaining slots to the boundary components
of the surface.

Standard layout for ``(g, r)``: ``g`` handle pants come first, each glued
to itself along slots 0 and 1 (that pants curve is the handle curve) and
exposing slot 2 as its stem.  The ``L = g + r`` leaves (handle stems
first, then boundary components) are joined by a left-to-right chain of
``L - 2`` connector pants, connector ``i`` using slot 0 for its left
neighbour, slot 1 for leaf ``i + 1`` and slot 2 for its right neighbour
(the first connector takes leaf 0 in slot 0, the last one takes the last
leaf in slot 2).  Pants curves are numbered in the order the gluings are
made: handle curve then stem curve for each handle, then the chain curves
left to right.  When ``L == 2`` the two leaves are glued directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field

Slot = tuple[int, int]


class NonHyperbolicSurface(ValueError):
    """The surface has non-negative Euler characteristic."""


class NoPantsCurve(ValueError):
    """The surface is a pair of pants and has no pants curves."""


class InvalidDecomposition(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceKind:
    genus: int
    boundary_count: int

    def __post_init__(self):
        if self.genus < 0 or self.boundary_count < 0:
            raise ValueError("genus and boundary count must be non-negative")
        if self.euler_characteristic >= 0:
            raise NonHyperbolicSurface(
                f"surface ({self.genus},{self.boundary_count}) has "
                f"Euler characteristic {self.euler_characteristic} >= 0")

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.boundary_count

    @property
    def ml_dimension(self) -> int:
        return 6 * self.genus - 6 + 2 * self.boundary_count

    @property
    def pants_curve_count(self) -> int:
        return 3 * self.genus - 3 + self.boundary_count

    @property
    def pants_count(self) -> int:
        return -self.euler_characteristic

    def __str__(self):
        return f"S_{self.genus},{self.boundary_count}"


def make_surface(genus: int, boundary_count: int) -> SurfaceKind:
    return SurfaceKind(genus, boundary_count)


def ml_dimension(s: SurfaceKind) -> int:
    return s.ml_dimension


@dataclass(frozen=True)
class PantsDecomposition:
    """Pants pieces glued along slot pairs.

    ``gluing[i]`` is the pair of slots identified along pants curve ``i``;
    the first slot is called side A of the curve, the second side B.
    ``outer[j]`` is the slot forming boundary component ``j``.
    """

    surface: SurfaceKind
    pants_count: int
    gluing: tuple[tuple[Slot, Slot], ...]
    outer: tuple[Slot, ...]
    _slot_index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index = {}
        for c, (a, b) in enumerate(self.gluing):
            index[a] = ("curve", c, 0)
            index[b] = ("curve", c, 1)
        for j, s in enumerate(self.outer):
            index[s] = ("outer", j, 0)
        object.__setattr__(self, "_slot_index", index)

    @property
    def curve_count(self) -> int:
        return len(self.gluing)

    def slot_role(self, slot: Slot) -> tuple[str, int, int]:
        """``("curve", c, side)`` or ``("outer", j, 0)`` for a slot."""
        return self._slot_index[slot]

    def curve_of(self, slot: Slot) -> int | None:
        kind, idx, _ = self._slot_index[slot]
        return idx if kind == "curve" else None

    def pants_of_curve(self, c: int) -> tuple[int, int]:
        (p, _), (q, _) = self.gluing[c]
        return p, q

    def validate(self) -> None:
        s = self.surface
        if self.pants_count != s.pants_count:
            raise InvalidDecomposition(
                f"expected {s.pants_count} pants, got {self.pants_count}")
        if len(self.gluing) != s.pants_curve_count:
            raise InvalidDecomposition(
                f"expected {s.pants_curve_count} glued pairs, got {len(self.gluing)}")
        if len(self.outer) != s.boundary_count:
            raise InvalidDecomposition(
                f"expected {s.boundary_count} outer slots, got {len(self.outer)}")
        seen = []
        for a, b in self.gluing:
            if a == b:
                raise InvalidDecomposition(f"slot {a} glued to itself")
            seen += [a, b]
        seen += list(self.outer)
        everything = [(p, k) for p in range(self.pants_count) for k in range(3)]
        if sorted(seen) != everything:
            raise InvalidDecomposition("slots are not used exactly once")
        # connectivity of the pants adjacency multigraph
        parent = list(range(self.pants_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (p, _), (q, _) in self.gluing:
            parent[find(p)] = find(q)
        if len({find(p) for p in range(self.pants_count)}) != 1:
            raise InvalidDecomposition("pants adjacency graph is disconnected")
        # Euler reconstruction: pants contribute -1 each, circles 0
        chi = -self.pants_count
        genus2 = 2 - chi - len(self.outer)
        if genus2 != 2 * s.genus:
            raise InvalidDecomposition("reglued surface has the wrong genus")

    def gluing_table(self) -> list[dict]:
        rows = []
        for c, ((p, k), (q, l)) in enumerate(self.gluing):
            rows.append({"curve": c, "a": [p, k], "b": [q, l]})
        for j, (p, k) in enumerate(self.outer):
            rows.append({"boundary": j, "slot": [p, k]})
        return rows


def standard_pants_decomposition(s: SurfaceKind) -> PantsDecomposition:
    g, r = s.genus, s.boundary_count
    if s.pants_curve_count == 0:
        raise NoPantsCurve(f"{s} has no pants curves")
    gluing: list[tuple[Slot, Slot]] = []
    outer: list[Slot | None] = [None] * r
    leaves: list[tuple[str, int]] = []
    for h in range(g):
        gluing.append(((h, 0), (h, 1)))
        leaves.append(("stem", h))
    leaves += [("outer", j) for j in range(r)]

    def attach(leaf, slot):
        kind, idx = leaf
        if kind == "stem":
            gluing.append(((idx, 2), slot))
        else:
            outer[idx] = slot

    # the handle curve of handle h must precede its stem curve; stems are
    # attached below, so reorder afterwards by a stable key
    n_handles = g
    L = len(leaves)
    if L == 2:
        # two leaves glued directly: either two stems (closed genus 2) or a
        # stem and a boundary (one-holed torus)
        (k0, i0), (k1, i1) = leaves
        if k0 == "stem" and k1 == "stem":
            gluing.append(((i0, 2), (i1, 2)))
        else:
            outer[i1] = (i0, 2)
        pants_count = n_handles
    else:
        base = n_handles
        chain = L - 2
        for i in range(chain):
            p = base + i
            if i == 0:
                attach(leaves[0], (p, 0))
            else:
                gluing.append(((p - 1, 2), (p, 0)))
            attach(leaves[i + 1], (p, 1))
            if i == chain - 1:
                attach(leaves[L - 1], (p, 2))
        pants_count = n_handles + chain

    ordered = _order_curves(gluing, n_handles)
    pd = PantsDecomposition(s, pants_count, tuple(ordered), tuple(outer))
    pd.validate()
    return pd


def _order_curves(gluing, n_handles):
    """Handle curve, then stem curve for each handle; chain curves last."""
    def key(pair):
        (p, k), (q, l) = pair
        if p == q and p < n_handles:
            return (p, 0)
        for (a, b) in ((p, k), (q, l)):
            if a < n_handles and b == 2:
                return (a, 1)
        return (n_handles + min(p, q), 2)

    return sorted(gluing, key=key)
