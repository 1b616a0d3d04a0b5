"""Functor predicates and the maps they induce on incidence algebras.

Covers bijectivity-on-objects and fibre sizes, unique lifting of
factorizations (directly and through the two pullback squares of the free
path construction), pushforward and pullback of fine elements, pullbacks
of categories, the Beck-Chevalley square, span composition, adjunction
validation with the adjoint-pair Mobius identity, and the classifier that
characterizes categories whose every subcategory inverts over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .category import (
    Arrow,
    FinCategory,
    Functor,
    categories_equal,
    endomorphism_report,
    enumerate_subcategories,
)
from .errors import BudgetExceeded, MalformedInput, NotInvertible, RigMismatch
from .incidence import (
    FineElement,
    coarse_mobius,
    fine_basis,
    fine_convolve,
    fine_delta,
    fine_mobius,
)
from .rigs import INT, RAT, Rig


def is_bijective_on_objects(f: Functor) -> bool:
    images = [f.object_map[o] for o in f.source.objects]
    return len(set(images)) == len(images) and set(images) == set(f.target.objects)


def fibre_sizes(f: Functor) -> dict:
    """Arrow-fibre cardinalities, one entry per arrow of the target."""
    sizes = {a.name: 0 for a in f.target.arrows}
    for a in f.source.arrows:
        sizes[f.arrow_map[a.name]] += 1
    return sizes


def is_ulf(f: Functor):
    """Unique lifting of factorizations.

    For every arrow h of the source and factorization F(h) = g2 o g1 in the
    target there must be exactly one pair (h1, h2) with h2 o h1 = h over
    (g1, g2).  Returns (True, None) or (False, (h, g1, g2, lift_count)).
    """
    src, tgt = f.source, f.target
    target_factorizations = tgt.factorizations()
    source_factorizations = src.factorizations()
    for h in src.arrow_names():
        image = f.arrow_map[h]
        lifts_by_image_pair: dict = {}
        for (h1, h2) in source_factorizations[h]:
            key = (f.arrow_map[h1], f.arrow_map[h2])
            lifts_by_image_pair[key] = lifts_by_image_pair.get(key, 0) + 1
        for (g1, g2) in target_factorizations[image]:
            count = lifts_by_image_pair.get((g1, g2), 0)
            if count != 1:
                return False, (h, g1, g2, count)
    return True, None


def reflects_identities(f: Functor) -> bool:
    """Length-0 square: arrows over identities are exactly the identities."""
    src, tgt = f.source, f.target
    identity_preimage = {h for h in src.arrow_names() if tgt.is_identity(f.arrow_map[h])}
    return identity_preimage == {src.identity[o] for o in src.objects}


def composable_pairs_square_is_pullback(f: Functor) -> bool:
    """Length-2 square: composable pairs of the source must biject with
    pairs (target factorization, source arrow over its composite)."""
    src, tgt = f.source, f.target
    image_of_pairs = {}
    for (g, h) in src.compose:
        key = ((f.arrow_map[h], f.arrow_map[g]), src.compose[(g, h)])
        image_of_pairs[key] = image_of_pairs.get(key, 0) + 1
    for h in src.arrow_names():
        for (g1, g2) in tgt.factorizations()[f.arrow_map[h]]:
            if image_of_pairs.get(((g1, g2), h), 0) != 1:
                return False
    return True


def ulf_via_pullback_squares(f: Functor) -> bool:
    """ULF by the two finite pullback-square conditions of the free path
    construction: identity reflection (length 0) and the composable-pairs
    square (length 2)."""
    return reflects_identities(f) and composable_pairs_square_is_pullback(f)


def pushforward(f: Functor, x: FineElement) -> FineElement:
    """(F_! x)(g) = sum of x over the fibre of g."""
    if x.category is not f.source and not categories_equal(x.category, f.source):
        raise RigMismatch("element does not live on the functor's source")
    rig = x.rig
    values = {a.name: rig.zero for a in f.target.arrows}
    for a in f.source.arrows:
        image = f.arrow_map[a.name]
        values[image] = rig.add(values[image], x.values[a.name])
    return FineElement(f.target, rig, values)


def pullback_transform(f: Functor, y: FineElement) -> FineElement:
    """(F* y)(h) = y(F h)."""
    if y.category is not f.target and not categories_equal(y.category, f.target):
        raise RigMismatch("element does not live on the functor's target")
    values = {a.name: y.values[f.arrow_map[a.name]] for a in f.source.arrows}
    return FineElement(f.source, y.rig, values)


def pushforward_is_homomorphism(f: Functor, rig: Rig):
    """Definitional check: F_! preserves delta and all basis products."""
    delta_target = fine_delta(f.target, rig)
    if not pushforward(f, fine_delta(f.source, rig)).equal(delta_target):
        return False, ("delta",)
    for a in f.source.arrow_names():
        ea = fine_basis(f.source, rig, a)
        for b in f.source.arrow_names():
            eb = fine_basis(f.source, rig, b)
            lhs = pushforward(f, fine_convolve(ea, eb))
            rhs = fine_convolve(pushforward(f, ea), pushforward(f, eb))
            if not lhs.equal(rhs):
                return False, (a, b)
    return True, None


def pullback_is_homomorphism(f: Functor, rig: Rig):
    """Definitional check: F* preserves delta and all basis products."""
    delta_source = fine_delta(f.source, rig)
    if not pullback_transform(f, fine_delta(f.target, rig)).equal(delta_source):
        return False, ("delta",)
    for a in f.target.arrow_names():
        ea = fine_basis(f.target, rig, a)
        for b in f.target.arrow_names():
            eb = fine_basis(f.target, rig, b)
            lhs = pullback_transform(f, fine_convolve(ea, eb))
            rhs = fine_convolve(pullback_transform(f, ea), pullback_transform(f, eb))
            if not lhs.equal(rhs):
                return False, (a, b)
    return True, None


def category_pullback(f: Functor, g: Functor):
    """Pullback of two functors with a common codomain.

    Objects and arrows are the matching pairs; returns the pullback
    category and the two projection functors.
    """
    if f.target is not g.target and not categories_equal(f.target, g.target):
        raise MalformedInput("pullback needs a common codomain")
    objects = [
        (a, b)
        for a in f.source.objects
        for b in g.source.objects
        if f.object_map[a] == g.object_map[b]
    ]
    arrows = []
    for p in f.source.arrows:
        for q in g.source.arrows:
            if f.arrow_map[p.name] == g.arrow_map[q.name]:
                arrows.append(Arrow((p.name, q.name), (p.src, q.src), (p.tgt, q.tgt)))
    names = {a.name for a in arrows}
    identity = {
        (a, b): (f.source.identity[a], g.source.identity[b]) for (a, b) in objects
    }
    compose = {}
    for (p2, q2) in names:
        for (p1, q1) in names:
            if f.source.tgt(p1) == f.source.src(p2) and g.source.tgt(q1) == g.source.src(q2):
                compose[((p2, q2), (p1, q1))] = (
                    f.source.compose[(p2, p1)],
                    g.source.compose[(q2, q1)],
                )
    pullback_cat = FinCategory(objects, arrows, identity, compose)
    proj1 = Functor(
        pullback_cat,
        f.source,
        {(a, b): a for (a, b) in objects},
        {(p, q): p for (p, q) in names},
    )
    proj2 = Functor(
        pullback_cat,
        g.source,
        {(a, b): b for (a, b) in objects},
        {(p, q): q for (p, q) in names},
    )
    return pullback_cat, proj1, proj2


@dataclass(frozen=True)
class BeckChevalleyReport:
    hypotheses_ok: bool
    detail: str
    square_commutes: bool | None


def beck_chevalley_check(f: Functor, g: Functor, rig: Rig = RAT) -> BeckChevalleyReport:
    """Verify the pullback square of F (ULF) against G (bijective on objects).

    Builds the pullback, re-checks that the induced legs inherit ULF and
    bijectivity-on-objects, then tests G* F_! = F'_! G'* on the basis of
    the fine algebra of F's source.
    """
    ulf_ok, witness = is_ulf(f)
    if not ulf_ok:
        return BeckChevalleyReport(False, f"F is not ULF at {witness!r}", None)
    if not is_bijective_on_objects(g):
        return BeckChevalleyReport(False, "G is not bijective on objects", None)
    pullback_cat, proj_to_a, proj_to_b = category_pullback(f, g)
    f_prime = proj_to_b  # pullback of F along G
    g_prime = proj_to_a  # pullback of G along F
    ulf_prime, witness = is_ulf(f_prime)
    if not ulf_prime:
        return BeckChevalleyReport(False, f"F' failed ULF at {witness!r}", None)
    if not is_bijective_on_objects(g_prime):
        return BeckChevalleyReport(False, "G' is not bijective on objects", None)
    for name in f.source.arrow_names():
        e = fine_basis(f.source, rig, name)
        west_then_north = pushforward(f_prime, pullback_transform(g_prime, e))
        south_then_east = pullback_transform(g, pushforward(f, e))
        if not west_then_north.equal(south_then_east):
            return BeckChevalleyReport(True, f"square fails at basis arrow {name!r}", False)
    return BeckChevalleyReport(True, "", True)


@dataclass
class Span:
    """Span of categories: ULF left leg, bijective-on-objects right leg."""

    apex: FinCategory
    left: Functor
    right: Functor

    def __post_init__(self):
        if self.left.source is not self.apex or self.right.source is not self.apex:
            raise MalformedInput("span legs must start at the apex")
        if not self.left.validate().ok or not self.right.validate().ok:
            raise MalformedInput("span legs must be functors")
        ok, witness = is_ulf(self.left)
        if not ok:
            raise MalformedInput(f"span left leg is not ULF, witness {witness!r}")
        if not is_bijective_on_objects(self.right):
            raise MalformedInput("span right leg is not bijective on objects")

    def algebra_map(self, x: FineElement) -> FineElement:
        """Induced map along the span: pull back, then push forward."""
        return pushforward(self.right, pullback_transform(self.left, x))


def identity_span(c: FinCategory) -> Span:
    from .category import identity_functor

    ident = identity_functor(c)
    return Span(c, ident, ident)


def compose_spans(s: Span, t: Span) -> Span:
    """Composite span through the pullback of the middle cospan."""
    if not categories_equal(s.right.target, t.left.target):
        raise MalformedInput("spans are not composable: middle categories differ")
    _, proj_to_s_apex, proj_to_t_apex = category_pullback(s.right, t.left)
    apex = proj_to_s_apex.source
    left = _compose(s.left, proj_to_s_apex)
    right = _compose(t.right, proj_to_t_apex)
    return Span(apex, left, right)


def _compose(outer: Functor, inner: Functor) -> Functor:
    return Functor(
        inner.source,
        outer.target,
        {o: outer.object_map[inner.object_map[o]] for o in inner.source.objects},
        {a.name: outer.arrow_map[inner.arrow_map[a.name]] for a in inner.source.arrows},
    )


@dataclass
class Adjunction:
    """Adjunction F -| G given by explicit unit and counit arrow tables."""

    left: Functor   # F : A -> B
    right: Functor  # G : B -> A
    unit: dict      # object a -> arrow a -> GFa in A
    counit: dict    # object b -> arrow FGb -> b in B


def validate_adjunction(adj: Adjunction):
    """Check naturality of unit/counit and both triangle identities."""
    f, g = adj.left, adj.right
    a_cat, b_cat = f.source, g.source
    if f.target is not b_cat and not categories_equal(f.target, b_cat):
        return False, "F must land in G's source"
    if g.target is not a_cat and not categories_equal(g.target, a_cat):
        return False, "G must land in F's source"
    if not f.validate().ok:
        return False, "F is not a functor"
    if not g.validate().ok:
        return False, "G is not a functor"
    for a in a_cat.objects:
        eta = adj.unit.get(a)
        if eta is None or not a_cat.has_arrow(eta):
            return False, f"unit missing at {a!r}"
        arr = a_cat.arrow(eta)
        expected_tgt = g.object_map[f.object_map[a]]
        if arr.src != a or arr.tgt != expected_tgt:
            return False, f"unit at {a!r} is not an arrow {a!r} -> GF{a!r}"
    for b in b_cat.objects:
        eps = adj.counit.get(b)
        if eps is None or not b_cat.has_arrow(eps):
            return False, f"counit missing at {b!r}"
        arr = b_cat.arrow(eps)
        expected_src = f.object_map[g.object_map[b]]
        if arr.src != expected_src or arr.tgt != b:
            return False, f"counit at {b!r} is not an arrow FG{b!r} -> {b!r}"
    for arrow in a_cat.arrows:
        lhs = a_cat.compose[(adj.unit[arrow.tgt], arrow.name)]
        gf_arrow = g.arrow_map[f.arrow_map[arrow.name]]
        rhs = a_cat.compose[(gf_arrow, adj.unit[arrow.src])]
        if lhs != rhs:
            return False, f"unit not natural at {arrow.name!r}"
    for arrow in b_cat.arrows:
        lhs = b_cat.compose[(arrow.name, adj.counit[arrow.src])]
        fg_arrow = f.arrow_map[g.arrow_map[arrow.name]]
        rhs = b_cat.compose[(adj.counit[arrow.tgt], fg_arrow)]
        if lhs != rhs:
            return False, f"counit not natural at {arrow.name!r}"
    for a in a_cat.objects:
        fa = f.object_map[a]
        composite = b_cat.compose[(adj.counit[fa], f.arrow_map[adj.unit[a]])]
        if composite != b_cat.identity[fa]:
            return False, f"first triangle identity fails at {a!r}"
    for b in b_cat.objects:
        gb = g.object_map[b]
        composite = a_cat.compose[(g.arrow_map[adj.counit[b]], adj.unit[gb])]
        if composite != a_cat.identity[gb]:
            return False, f"second triangle identity fails at {b!r}"
    return True, None


def rota_check(adj: Adjunction, a, b, rig: Rig = RAT):
    """Adjoint-pair Mobius identity at (a, b).

    sum over a' with F(a') = b of mu_A(a, a') must equal the sum over b'
    with G(b') = a of mu_B(b', b).  Returns (equal, lhs, rhs).
    """
    f, g = adj.left, adj.right
    mu_a = coarse_mobius(f.source, rig)
    mu_b = coarse_mobius(g.source, rig)
    lhs = rig.sum(
        mu_a.value(a, a_prime)
        for a_prime in f.source.objects
        if f.object_map[a_prime] == b
    )
    rhs = rig.sum(
        mu_b.value(b_prime, b)
        for b_prime in g.source.objects
        if g.object_map[b_prime] == a
    )
    return rig.eq(lhs, rhs), lhs, rhs


# Mobius-category classification


def is_mobius_category(c: FinCategory) -> bool:
    """Every isomorphism and idempotent is an identity."""
    report = endomorphism_report(c)
    return not report.nontrivial_isos and not report.nontrivial_idempotents


def mobius_by_subcategories(c: FinCategory, max_arrows: int = 8):
    """Exhaustive test: every subcategory has fine inversion over the integers.

    Returns (True, None) or (False, witness_subcategory).  Intentionally
    brute-force, so restricted to small categories.
    """
    if len(c.arrows) > max_arrows:
        raise BudgetExceeded(f"subcategory search limited to {max_arrows} arrows")
    for sub in enumerate_subcategories(c):
        try:
            fine_mobius(sub, INT)
        except NotInvertible:
            return False, sub
    return True, None
