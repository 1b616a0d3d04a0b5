"""Finite categories as explicit data, with validation and standard constructions.

A category is stored as object list, arrow list, identity table and a total
composition table keyed by arrow-name pairs (g, f) with tgt(f) = src(g),
mapping to the name of g after f.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BudgetExceeded, MalformedInput, UnknownObject


@dataclass(frozen=True)
class Arrow:
    name: object
    src: object
    tgt: object


@dataclass(frozen=True)
class DirectedGraph:
    vertices: tuple
    edges: tuple  # of Arrow

    def __post_init__(self):
        vs = set(self.vertices)
        for e in self.edges:
            if e.src not in vs or e.tgt not in vs:
                raise MalformedInput(f"edge {e.name!r} has an endpoint outside the vertex list")

    def edge_count(self, a, b) -> int:
        return sum(1 for e in self.edges if e.src == a and e.tgt == b)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    law: str = ""
    witness: str = ""

    def message(self) -> str:
        return "valid" if self.ok else f"{self.law}: {self.witness}"


class FinCategory:
    """Immutable finite category; construct then treat as read-only.

    The constructor performs structural checks only (names resolve, tables
    reference known arrows); the category *laws* are the business of
    validate(), which reports rather than raises.
    """

    def __init__(self, objects, arrows, identity, compose):
        objects = tuple(objects)
        arrows = tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in arrows)
        if len(set(objects)) != len(objects):
            raise MalformedInput("duplicate object identifiers")
        names = [a.name for a in arrows]
        if len(set(names)) != len(names):
            raise MalformedInput("duplicate arrow names")
        by_name = {a.name: a for a in arrows}
        obj_set = set(objects)
        for a in arrows:
            if a.src not in obj_set or a.tgt not in obj_set:
                raise MalformedInput(f"arrow {a.name!r} has an endpoint outside the object list")
        identity = dict(identity)
        if set(identity) != obj_set:
            raise MalformedInput("identity table must cover exactly the objects")
        for obj, name in identity.items():
            if name not in by_name:
                raise MalformedInput(f"identity of {obj!r} names unknown arrow {name!r}")
        compose = dict(compose)
        for (g, f), gf in compose.items():
            if g not in by_name or f not in by_name or gf not in by_name:
                raise MalformedInput(f"compose entry ({g!r},{f!r})->{gf!r} names unknown arrows")
        self.objects = objects
        self.arrows = arrows
        self.identity = identity
        self.compose = compose
        self._by_name = by_name
        self._identity_names = set(identity.values())
        hom: dict = {}
        for a in arrows:
            hom.setdefault((a.src, a.tgt), []).append(a.name)
        self._hom = {k: tuple(v) for k, v in hom.items()}
        self._factorizations = None

    # basic lookups

    def arrow(self, name) -> Arrow:
        return self._by_name[name]

    def has_arrow(self, name) -> bool:
        return name in self._by_name

    def src(self, name):
        return self._by_name[name].src

    def tgt(self, name):
        return self._by_name[name].tgt

    def hom(self, a, b) -> tuple:
        return self._hom.get((a, b), ())

    def is_identity(self, name) -> bool:
        return name in self._identity_names

    def arrow_names(self) -> tuple:
        return tuple(a.name for a in self.arrows)

    def nonidentity_arrows(self) -> tuple:
        return tuple(a.name for a in self.arrows if not self.is_identity(a.name))

    def composable_pairs(self) -> Iterator[tuple]:
        """All (g, f) with tgt(f) = src(g)."""
        for g in self.arrows:
            for f in self.arrows:
                if f.tgt == g.src:
                    yield g.name, f.name

    def compose_names(self, g, f):
        return self.compose[(g, f)]

    def factorizations(self) -> dict:
        """composite -> list of (first, second) with second o first = composite."""
        if self._factorizations is None:
            table: dict = {name: [] for name in self._by_name}
            for (outer, inner), composite in self.compose.items():
                table[composite].append((inner, outer))
            self._factorizations = table
        return self._factorizations

    def validate(self) -> ValidationReport:
        return validate_category(self)

    def __repr__(self):
        return f"FinCategory({len(self.objects)} objects, {len(self.arrows)} arrows)"


def validate_category(c: FinCategory) -> ValidationReport:
    """Check the category laws, returning the first violation with witnesses."""
    for obj, name in c.identity.items():
        a = c.arrow(name)
        if a.src != obj or a.tgt != obj:
            return ValidationReport(False, "identity-endpoints", f"1_{obj!r} = {name!r}: {a.src!r} -> {a.tgt!r}")
    expected = set(c.composable_pairs())
    actual = set(c.compose)
    missing = expected - actual
    if missing:
        g, f = sorted(missing, key=repr)[0]
        return ValidationReport(False, "composition-totality", f"missing compose({g!r}, {f!r})")
    extra = actual - expected
    if extra:
        g, f = sorted(extra, key=repr)[0]
        return ValidationReport(False, "composition-typing", f"compose({g!r}, {f!r}) defined for non-composable pair")
    for (g, f), gf in c.compose.items():
        if c.src(gf) != c.src(f) or c.tgt(gf) != c.tgt(g):
            return ValidationReport(
                False, "composite-endpoints",
                f"compose({g!r}, {f!r}) = {gf!r} has endpoints {c.src(gf)!r} -> {c.tgt(gf)!r}",
            )
    for a in c.arrows:
        left = c.compose[(c.identity[a.tgt], a.name)]
        if left != a.name:
            return ValidationReport(False, "left-unit", f"1 o {a.name!r} = {left!r}")
        right = c.compose[(a.name, c.identity[a.src])]
        if right != a.name:
            return ValidationReport(False, "right-unit", f"{a.name!r} o 1 = {right!r}")
    for h in c.arrows:
        for g in c.arrows:
            if g.tgt != h.src:
                continue
            for f in c.arrows:
                if f.tgt != g.src:
                    continue
                one = c.compose[(h.name, c.compose[(g.name, f.name)])]
                two = c.compose[(c.compose[(h.name, g.name)], f.name)]
                if one != two:
                    return ValidationReport(
                        False, "associativity",
                        f"h={h.name!r}, g={g.name!r}, f={f.name!r}: {one!r} != {two!r}",
                    )
    return ValidationReport(True)


def underlying_graph(c: FinCategory) -> DirectedGraph:
    """Vertices = objects, edges = all arrows (identities included)."""
    return DirectedGraph(c.objects, c.arrows)


def graphs_equal(g1: DirectedGraph, g2: DirectedGraph) -> bool:
    return set(g1.vertices) == set(g2.vertices) and set(g1.edges) == set(g2.edges)


def codiscrete_completion(c: FinCategory):
    """The codiscrete category on the same objects plus the canonical functor."""
    objects = c.objects
    arrows = [Arrow(("co", a, b), a, b) for a in objects for b in objects]
    identity = {a: ("co", a, a) for a in objects}
    compose = {}
    for g in arrows:
        for f in arrows:
            if f.tgt == g.src:
                compose[(g.name, f.name)] = ("co", f.src, g.tgt)
    cod = FinCategory(objects, arrows, identity, compose)
    functor = Functor(
        source=c,
        target=cod,
        object_map={a: a for a in objects},
        arrow_map={a.name: ("co", a.src, a.tgt) for a in c.arrows},
    )
    return cod, functor


def preorder_reflection(c: FinCategory):
    """Collapse each nonempty hom-set to a single arrow; canonical functor along."""
    objects = c.objects
    pairs = [(a, b) for a in objects for b in objects if c.hom(a, b)]
    arrows = [Arrow(("le", a, b), a, b) for (a, b) in pairs]
    identity = {a: ("le", a, a) for a in objects}
    compose = {}
    for (b, c2) in pairs:
        for (a, b2) in pairs:
            if b2 == b:
                compose[(("le", b, c2), ("le", a, b))] = ("le", a, c2)
    ref = FinCategory(objects, arrows, identity, compose)
    functor = Functor(
        source=c,
        target=ref,
        object_map={a: a for a in objects},
        arrow_map={a.name: ("le", a.src, a.tgt) for a in c.arrows},
    )
    return ref, functor


def poset_to_category(elements, relation: Iterable[tuple]) -> FinCategory:
    """Category of a finite partial order; relation pairs mean a <= b.

    Reflexive pairs may be omitted.  Raises MalformedInput unless the
    completed relation is transitive and antisymmetric.
    """
    elements = tuple(elements)
    leq = set((a, a) for a in elements) | set(relation)
    for (a, b) in leq:
        if a not in elements or b not in elements:
            raise MalformedInput(f"relation pair ({a!r},{b!r}) uses unknown elements")
    for (a, b) in leq:
        if (b, a) in leq and a != b:
            raise MalformedInput(f"antisymmetry fails at ({a!r},{b!r})")
    for (a, b) in leq:
        for (b2, c) in leq:
            if b2 == b and (a, c) not in leq:
                raise MalformedInput(f"transitivity fails at ({a!r},{b!r},{c!r})")
    arrows = [Arrow(("le", a, b), a, b) for (a, b) in sorted(leq, key=repr)]
    identity = {a: ("le", a, a) for a in elements}
    compose = {}
    for (b, c) in leq:
        for (a, b2) in leq:
            if b2 == b:
                compose[(("le", b, c), ("le", a, b))] = ("le", a, c)
    return FinCategory(elements, arrows, identity, compose)


def monoid_to_category(elements, unit, table: dict) -> FinCategory:
    """One-object category of a finite monoid given by its multiplication table."""
    elements = tuple(elements)
    if unit not in elements:
        raise MalformedInput(f"unit {unit!r} is not an element")
    for x in elements:
        for y in elements:
            if (x, y) not in table:
                raise MalformedInput(f"multiplication table missing ({x!r},{y!r})")
            if table[(x, y)] not in elements:
                raise MalformedInput(f"table entry ({x!r},{y!r}) leaves the element set")
    for x in elements:
        if table[(unit, x)] != x or table[(x, unit)] != x:
            raise MalformedInput(f"unit law fails at {x!r}")
    for x in elements:
        for y in elements:
            for z in elements:
                if table[(table[(x, y)], z)] != table[(x, table[(y, z)])]:
                    raise MalformedInput(f"associativity fails at ({x!r},{y!r},{z!r})")
    obj = "*"
    arrows = [Arrow(("el", x), obj, obj) for x in elements]
    identity = {obj: ("el", unit)}
    compose = {
        (("el", g), ("el", f)): ("el", table[(g, f)]) for g in elements for f in elements
    }
    return FinCategory((obj,), arrows, identity, compose)


def product(c: FinCategory, d: FinCategory) -> FinCategory:
    """Product category; objects and arrows are pairs, composition componentwise."""
    objects = [(a, b) for a in c.objects for b in d.objects]
    arrows = [Arrow((f.name, g.name), (f.src, g.src), (f.tgt, g.tgt)) for f in c.arrows for g in d.arrows]
    identity = {(a, b): (c.identity[a], d.identity[b]) for a in c.objects for b in d.objects}
    compose = {}
    for (g1, f1), h1 in c.compose.items():
        for (g2, f2), h2 in d.compose.items():
            compose[((g1, g2), (f1, f2))] = (h1, h2)
    return FinCategory(objects, arrows, identity, compose)


def coproduct(c: FinCategory, d: FinCategory) -> FinCategory:
    """Disjoint union, objects and arrows tagged L/R."""
    objects = [("L", a) for a in c.objects] + [("R", b) for b in d.objects]
    arrows = [Arrow(("L", a.name), ("L", a.src), ("L", a.tgt)) for a in c.arrows]
    arrows += [Arrow(("R", a.name), ("R", a.src), ("R", a.tgt)) for a in d.arrows]
    identity = {("L", o): ("L", c.identity[o]) for o in c.objects}
    identity.update({("R", o): ("R", d.identity[o]) for o in d.objects})
    compose = {(("L", g), ("L", f)): ("L", h) for (g, f), h in c.compose.items()}
    compose.update({(("R", g), ("R", f)): ("R", h) for (g, f), h in d.compose.items()})
    return FinCategory(objects, arrows, identity, compose)


def full_subcategory(c: FinCategory, objs) -> FinCategory:
    objs = [o for o in c.objects if o in set(objs)]
    keep = set(objs)
    arrows = [a for a in c.arrows if a.src in keep and a.tgt in keep]
    names = {a.name for a in arrows}
    identity = {o: c.identity[o] for o in objs}
    compose = {k: v for k, v in c.compose.items() if k[0] in names and k[1] in names}
    return FinCategory(objs, arrows, identity, compose)


def patch(c: FinCategory, a, b) -> FinCategory:
    """Full subcategory on the objects through which some map a -> z -> b passes."""
    if a not in set(c.objects) or b not in set(c.objects):
        raise UnknownObject(f"patch endpoints {a!r}, {b!r} must be objects")
    objs = [z for z in c.objects if c.hom(a, z) and c.hom(z, b)]
    return full_subcategory(c, objs)


def patch_objects(c: FinCategory, a, b) -> tuple:
    if a not in set(c.objects) or b not in set(c.objects):
        raise UnknownObject(f"patch endpoints {a!r}, {b!r} must be objects")
    return tuple(z for z in c.objects if c.hom(a, z) and c.hom(z, b))


def subcategory(c: FinCategory, objs, arrow_names) -> FinCategory:
    """Subcategory on the given objects and arrows (assumed closed)."""
    objs = [o for o in c.objects if o in set(objs)]
    names = set(arrow_names)
    arrows = [a for a in c.arrows if a.name in names]
    identity = {o: c.identity[o] for o in objs}
    compose = {k: v for k, v in c.compose.items() if k[0] in names and k[1] in names}
    return FinCategory(objs, arrows, identity, compose)


def iso_witnesses(c: FinCategory):
    """All (f, g) with g o f and f o g identities."""
    out = []
    for f in c.arrows:
        for g_name in c.hom(f.tgt, f.src):
            if (
                c.compose[(g_name, f.name)] == c.identity[f.src]
                and c.compose[(f.name, g_name)] == c.identity[f.tgt]
            ):
                out.append((f.name, g_name))
    return out


def is_skeletal(c: FinCategory) -> bool:
    """No isomorphisms between distinct objects."""
    for f_name, _ in iso_witnesses(c):
        f = c.arrow(f_name)
        if f.src != f.tgt:
            return False
    return True


@dataclass(frozen=True)
class EndomorphismReport:
    nontrivial_isos: tuple
    nontrivial_idempotents: tuple
    nontrivial_endos: tuple


def endomorphism_report(c: FinCategory) -> EndomorphismReport:
    """Brute-force search for non-identity isos, idempotents and endos."""
    isos = tuple(
        f for f, _ in iso_witnesses(c) if not c.is_identity(f)
    )
    idempotents = tuple(
        a.name
        for a in c.arrows
        if a.src == a.tgt and not c.is_identity(a.name) and c.compose[(a.name, a.name)] == a.name
    )
    endos = tuple(a.name for a in c.arrows if a.src == a.tgt and not c.is_identity(a.name))
    return EndomorphismReport(isos, idempotents, endos)


def enumerate_subcategories(c: FinCategory, max_count: int = 100000) -> Iterator[FinCategory]:
    """All nonempty subcategories: object subsets plus arrow subsets that
    contain the identities of the chosen objects, stay within them, and are
    closed under composition.  The empty subcategory is excluded.
    """
    count = 0
    objs = list(c.objects)
    for obj_mask in range(1, 1 << len(objs)):
        chosen = [o for i, o in enumerate(objs) if obj_mask >> i & 1]
        chosen_set = set(chosen)
        required = {c.identity[o] for o in chosen}
        optional = [
            a.name
            for a in c.arrows
            if a.src in chosen_set and a.tgt in chosen_set and a.name not in required
        ]
        for arr_mask in range(1 << len(optional)):
            names = set(required)
            names.update(n for i, n in enumerate(optional) if arr_mask >> i & 1)
            closed = True
            for g in names:
                for f in names:
                    if c.tgt(f) == c.src(g) and c.compose[(g, f)] not in names:
                        closed = False
                        break
                if not closed:
                    break
            if not closed:
                continue
            count += 1
            if count > max_count:
                raise BudgetExceeded(f"more than {max_count} subcategories")
            yield subcategory(c, chosen, names)


@dataclass
class Functor:
    """Functor between finite categories as explicit object and arrow tables."""

    source: FinCategory
    target: FinCategory
    object_map: dict
    arrow_map: dict

    def validate(self) -> ValidationReport:
        for o in self.source.objects:
            if o not in self.object_map:
                return ValidationReport(False, "object-map-totality", repr(o))
            if self.object_map[o] not in set(self.target.objects):
                return ValidationReport(False, "object-map-range", repr(o))
        for a in self.source.arrows:
            if a.name not in self.arrow_map:
                return ValidationReport(False, "arrow-map-totality", repr(a.name))
            image = self.arrow_map[a.name]
            if not self.target.has_arrow(image):
                return ValidationReport(False, "arrow-map-range", repr(a.name))
            img = self.target.arrow(image)
            if img.src != self.object_map[a.src] or img.tgt != self.object_map[a.tgt]:
                return ValidationReport(
                    False, "endpoint-preservation", f"{a.name!r} -> {image!r}"
                )
        for o in self.source.objects:
            if self.arrow_map[self.source.identity[o]] != self.target.identity[self.object_map[o]]:
                return ValidationReport(False, "identity-preservation", repr(o))
        for (g, f), gf in self.source.compose.items():
            composed = self.target.compose[(self.arrow_map[g], self.arrow_map[f])]
            if composed != self.arrow_map[gf]:
                return ValidationReport(
                    False, "composition-preservation", f"({g!r}, {f!r})"
                )
        return ValidationReport(True)

    def apply_object(self, o):
        return self.object_map[o]

    def apply_arrow(self, name):
        return self.arrow_map[name]


def identity_functor(c: FinCategory) -> Functor:
    return Functor(c, c, {o: o for o in c.objects}, {a.name: a.name for a in c.arrows})


def compose_functors(outer: Functor, inner: Functor) -> Functor:
    if outer.source is not inner.target and not categories_equal(outer.source, inner.target):
        raise MalformedInput("functors are not composable")
    return Functor(
        inner.source,
        outer.target,
        {o: outer.object_map[inner.object_map[o]] for o in inner.source.objects},
        {a.name: outer.arrow_map[inner.arrow_map[a.name]] for a in inner.source.arrows},
    )


def categories_equal(c: FinCategory, d: FinCategory) -> bool:
    """Strict equality of the presenting data (names included)."""
    return (
        set(c.objects) == set(d.objects)
        and set(c.arrows) == set(d.arrows)
        and c.identity == d.identity
        and c.compose == d.compose
    )
