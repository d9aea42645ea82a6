"""Coloring procedures for the small base graph and every catalog entry.

Each procedure receives a :class:`CaseContext` over the labelled catalog
graph, works through its decision tree and leaves every vertex colored.
All residual bounds stated along the way are checked at runtime by
``ctx.require`` / ``ctx.requires``; the greedy steps check themselves.

Branch labels recorded with ``ctx.branch`` and triangle labels passed to
``ctx.P`` are what the coverage tests look for.
"""

from __future__ import annotations

from .context import CaseContext


def xs(prefix: str, lo: int, hi: int) -> list:
    """``xs('x', 1, 3)`` -> ['x1', 'x2', 'x3']; empty when hi < lo."""
    return [f"{prefix}{i}" for i in range(lo, hi + 1)]


def down(prefix: str, hi: int, lo: int) -> list:
    """``down('x', 3, 1)`` -> ['x3', 'x2', 'x1']; empty when hi < lo."""
    return [f"{prefix}{i}" for i in range(hi, lo - 1, -1)]


# ---------------------------------------------------------------------------
# K5 minus an edge

def color_k5e(ctx: CaseContext) -> None:
    ctx.straighten("u w1 v")
    ctx.same_color("u", "v")
    ctx.greedy("w2 w3 w1")


# ---------------------------------------------------------------------------
# H1: two octahedra sharing the face y1 y2 y3

def _h1_outer_not_P(ctx: CaseContext) -> None:
    # the triangle x3 y2 y3 fails P
    ctx.exploit("y3", "y2", "x3")
    ctx.requires(y1=2, z1=3, z2=2)
    ctx.path_ends("y1", "z1", "z2")
    ctx.require("z1", 2)
    ctx.greedy("z3 z1 x1 x2 x3")


H1_OUTER = [("C2", "x3 y2 y3"), ("C3", "z2 y2 y3"), ("C4", "x2 y1 y2"),
            ("C5", "z1 y1 y2"), ("C6", "x1 y1 y3"), ("C7", "z3 y1 y3")]


def color_H1(ctx: CaseContext) -> None:
    if not ctx.P("C1", "y1 y2 y3"):
        ctx.branch("C1 not P")
        ctx.exploit("y3", "y2", "y1")
        ctx.requires(z2=2, z1=3)
        ctx.choose("z1", keep={"z2": 2})
        ctx.choose("x2", keep={"x3": 2})
        ctx.greedy("y1 x1 x3 z3 z2")
        return
    ctx.branch("C1 P")
    ctx.straighten("y1 y2 y3 y1")
    for label, tri in H1_OUTER:
        if not ctx.P(label, tri):
            ctx.branch(f"{label} not P")
            _h1_outer_not_P(ctx.symmetric("x3 y2 y3", tri))
            return
        a, b, c = tri.split()
        ctx.straighten(f"{a} {b} {c} {a}")
    ctx.branch("C2-C7 P")
    ctx.same_color("y2", "x1", "z3")
    ctx.requires(z1=2, y1=3, x2=2)
    ctx.path_ends("z1", "y1", "x2")
    ctx.requires(y1=2, y3=3)
    ctx.greedy("x3 z2 y3 y1")


# ---------------------------------------------------------------------------
# G1: bipyramid over the cycle x0 ... x_{k-1}

def color_G1(ctx: CaseContext, n: int) -> None:
    ctx.straighten("y x1 z")
    ctx.same_color("y", "z")
    ctx.greedy(xs("x", 2, n - 1) + ["x0", "x1"])


# ---------------------------------------------------------------------------
# G2

def _g2_not_P(ctx: CaseContext) -> None:
    ctx.exploit("v", "v3", "v2")
    ctx.requires(v4=2, y2=3)
    ctx.choose("y2", keep={"v4": 2})
    ctx.choose("y1", keep={"x1": 2})
    ctx.greedy("w z v4 x2 x1 v1 v2")


def color_G2(ctx: CaseContext) -> None:
    if not ctx.P("C1", "v v2 v3"):
        ctx.branch("C1 not P")
        _g2_not_P(ctx)
        return
    ctx.straighten("v v2 v3 v")
    if not ctx.P("C2", "w v2 v3"):
        ctx.branch("C2 not P")
        _g2_not_P(ctx.symmetric("v v2 v3", "w v2 v3"))
        return
    ctx.branch("C1 C2 P")
    ctx.straighten("w v2", "w v3")
    ctx.same_color("v", "w")
    ctx.requires(y1=2, x1=3, y2=2)
    ctx.path_ends("y1", "x1", "y2")
    ctx.requires(x1=2, v2=3, v3=3)
    ctx.greedy("x2 x1 v1 z v4 v3 v2")


# ---------------------------------------------------------------------------
# G3

def _g3_not_P(ctx: CaseContext) -> None:
    ctx.exploit("v", "v2", "v1")
    ctx.requires(v3=2, y2=3)
    ctx.choose("y2", keep={"v3": 2})
    ctx.choose("y1", keep={"x1": 2})
    ctx.greedy("w v1 x2 x1 z v3")


def color_G3(ctx: CaseContext) -> None:
    if not ctx.P("C1", "v v1 v2"):
        ctx.branch("C1 not P")
        _g3_not_P(ctx)
        return
    ctx.straighten("v v1 v2 v")
    if not ctx.P("C2", "w v1 v2"):
        ctx.branch("C2 not P")
        _g3_not_P(ctx.symmetric("v v1 v2", "w v1 v2"))
        return
    ctx.branch("C1 C2 P")
    ctx.straighten("w v1", "w v2")
    ctx.same_color("v", "w")
    ctx.requires(y1=2, x1=3, y2=2)
    ctx.path_ends("y1", "x1", "y2")
    ctx.requires(x1=2, v1=2, v2=3)
    ctx.greedy("x2 x1 z v3 v2 v1")


# ---------------------------------------------------------------------------
# G4

def _g4_not_P(ctx: CaseContext) -> None:
    ctx.exploit("v", "y1", "x1")
    ctx.requires(v1=2, v2=3)
    ctx.choose("v2", keep={"v1": 2})
    ctx.choose("y2", keep={"v3": 2})
    ctx.greedy("w x2 x1 z v3 p v1")


def color_G4(ctx: CaseContext) -> None:
    if not ctx.P("C1", "v y1 x1"):
        ctx.branch("C1 not P")
        _g4_not_P(ctx)
        return
    ctx.straighten("v y1 x1 v")
    if not ctx.P("C2", "v y2 x1"):
        ctx.branch("C2 not P")
        _g4_not_P(ctx.symmetric("v y1 x1", "v y2 x1"))
        return
    ctx.branch("C1 C2 P")
    ctx.straighten("v y2 x1")
    ctx.straighten("y1 v1 v2")
    ctx.same_color("y1", "y2", "v2")
    ctx.requires(v1=3, v=2, x1=3)
    ctx.greedy("w x2 z v3 v x1 p v1")


# ---------------------------------------------------------------------------
# G5(n)

def color_G5(ctx: CaseContext, n: int) -> None:
    ctx.straighten("y1 x1 y2")
    ctx.same_color("y1", "y2")
    ctx.requires(v=2, v2=3, w=2)
    ctx.path_ends("v", "v2", "w")
    ctx.requires(v2=2, x1=2)
    ctx.greedy(down("x", n, 2) + ["x1", "v1", "v2"])


# ---------------------------------------------------------------------------
# G6(n, m)

def color_G6(ctx: CaseContext, n: int, m: int) -> None:
    ctx.straighten("y1 x1 y2")
    ctx.same_color("y1", "y2")
    ctx.requires(w=2, v2=3)
    ctx.choose("v2", keep={"w": 2})
    ctx.require("x1", 3)
    ctx.greedy(["v", "v1"] + xs("z", 1, m) + ["w"] + down("x", n, 2) + ["x1"])


# ---------------------------------------------------------------------------
# G7(n, m, l): paths x1..xn, q1..qm and p1..pl

def color_G7(ctx: CaseContext, n: int, m: int, l: int) -> None:
    pl, pk = f"p{l}", f"p{l - 1}"
    X, Q = xs("x", 1, n), xs("q", 1, m)
    if not ctx.P("C1", f"{pl} y2 {pk}"):
        ctx.branch("C1 not P")
        ctx.exploit(pl, "y2", pk)
        ctx.requires(**{f"q{m}": 2, "z1": 3})
        ctx.choose("z1", keep={f"q{m}": 2})
        ctx.choose("y1", keep={"w": 2})
        ctx.greedy(["v1", "v"] + X + ["w"] + Q + ["v2"] + xs("p", 1, l - 1))
        return
    ctx.straighten(f"{pl} {pk} y2 {pl}")
    tail = down("x", n, 1) + ["v", "v2"] + [f"p{i}" for i in range(1, l - 1)] + Q + [pl, pk]
    if ctx.P("C2", f"v1 {pl} {pk}"):
        ctx.branch("C1 C2 P")
        ctx.straighten(f"v1 {pl}", f"v1 {pk}")
        ctx.same_color("v1", "y2")
        ctx.requires(**{pl: 3, pk: 3, "v": 2, "y1": 3})
        ctx.choose("y1", keep={"v": 2})
        ctx.greedy(["z1", "w"] + tail)
        return
    ctx.straighten("y1 v v1", "v y2 w")
    a1, a2 = ctx.exploit("v1", pl, pk)
    if a1 == a2:
        ctx.branch("C2 not P, equal colors")
        ctx.uncolor(pl)
        ctx.match_color("y2", "v1")
        ctx.requires(**{pk: 3, "v": 3, pl: 2, "z1": 3})
        ctx.choose("z1", keep={pl: 2})
        ctx.greedy(["y1", "w"] + tail)
        return
    ctx.branch("C2 not P, distinct colors")
    ctx.match_color("y2", "v1")
    ctx.requires(**{"v": 3, pk: 2})
    ctx.greedy(["z1"] + Q[::-1] + ["w", "y1"] + down("x", n, 1) + ["v", "v2"]
               + xs("p", 1, l - 1))


# ---------------------------------------------------------------------------
# G8(n, m): x1..xn fan between y1 and y2, z1..zm fan between y1 and p.
#
# ``tau`` is an automorphism (v<->w, v1<->p1, v2<->p2, both paths reversed).
# ``sigma`` carries names of G8(m, n) onto G8(n, m) (y2<->p, x<->z,
# v<->v1, w<->p1); the "analogous" sub-arguments run through it.

def _g8_tau(n: int, m: int) -> dict:
    t = {"v": "w", "w": "v", "v1": "p1", "p1": "v1", "v2": "p2", "p2": "v2"}
    t.update({f"x{i}": f"x{n + 1 - i}" for i in range(1, n + 1)})
    t.update({f"z{i}": f"z{m + 1 - i}" for i in range(1, m + 1)})
    return t


def _g8_sigma(n: int, m: int) -> dict:
    s = {"y2": "p", "p": "y2", "v": "v1", "v1": "v", "w": "p1", "p1": "w"}
    s.update({f"x{i}": f"z{i}" for i in range(1, m + 1)})
    s.update({f"z{i}": f"x{i}" for i in range(1, n + 1)})
    return s


def _g8_start_at_p(ctx, n, m):
    # p y2 v2 fails P: start from p and y2
    ctx.reset()
    ctx.exploit("p", "y2", "v2")
    ctx.requires(p2=2, w=3)
    ctx.choose("w", keep={"p2": 2})
    ctx.choose("y1", keep={f"x{n}": 2})
    ctx.greedy(["p1", "p2"] + down("z", m, 1) + ["v1", "v", "v2"] + xs("x", 1, n))


def _g8_hubs(ctx, n, m, a1, a2, i, other="w"):
    """y1 <- a1 and y2 <- a2 leave x_i and ``other`` (w, or v through
    tau) with three colors each."""
    if other == "v":
        return _g8_hubs(ctx.view(_g8_tau(n, m)), n, m, a1, a2, n + 1 - i)
    ctx.branch("y1 y2 pair")
    ctx.reset()
    ctx.color("y1", a1)
    ctx.color("y2", a2)
    ctx.requires(**{f"x{i}": 3, "w": 3, "v": 2, "v2": 3})
    ctx.choose("v2", keep={"v": 2})
    ctx.greedy(["p", "v1", "v"] + xs("x", 1, i - 1) + xs("z", 1, m) + ["p1", "p2", "w"]
               + down("x", n, i))


def _g8_hubs_at_p(ctx, n, m, a1, a2, i, other="p1"):
    # the same argument with y1 <- a1, p <- a2, guarding z_i and p1 (or v1)
    ctx.branch("y1 p pair")
    _g8_hubs(ctx.view(_g8_sigma(n, m)), m, n, a1, a2, i, "w" if other == "p1" else "v")


def _g8_both_sides(ctx, n, m, a1, a2):
    """y1 <- a1, y2 <- a2 leave both v and w with three colors."""
    ctx.branch("v w both kept")
    ctx.reset()
    ctx.color("y1", a1)
    ctx.color("y2", a2)
    ctx.requires(v=3, w=3, **{f"x{n}": 2})
    ctx.choose("w", keep={f"x{n}": 2})
    ctx.choose("p", keep={"p1": 2})
    ctx.greedy(["p2", "p1"] + down("z", m, 1) + ["v1", "v2", "v"] + xs("x", 1, n))


def _g8_both_sides_at_p(ctx, n, m, a1, a2):
    ctx.branch("v1 p1 both kept")
    _g8_both_sides(ctx.view(_g8_sigma(n, m)), m, n, a1, a2)


G8_TREE = ("y1 v1", "y1 z{m}", "y1 p1", "y1 w", "w y2", "y2 x{n}", "y2 v", "y2 v2",
           "y2 p2", "y2 p")


def _g8_tree(ctx, n, m):
    ctx.straighten(*[e.format(n=n, m=m) for e in G8_TREE])
    ctx.straighten("v2 p", "p2 p")


def _g8_place_p(ctx, n, m, a, taken, late_zm, late_v1):
    """Color p once y1 carries ``a``; ``taken`` are the colors p already
    cannot use.  Falls back on the y1-p arguments when the matchings at p
    line up.  Returns the branch used: 'p1', 'zm' or 'v1'."""
    zm = f"z{m}"
    alpha = ctx.partner("p1", a, "p")
    if alpha not in taken:
        ctx.branch("p takes the p1 partner")
        ctx.color("p", alpha)
        return "p1"
    beta = ctx.partner(zm, a, "p")
    if beta == alpha:
        _g8_hubs_at_p(ctx, n, m, a, alpha, m)
        return None
    if beta not in taken:
        ctx.branch("p takes the zm partner")
        ctx.color("p", beta)
        ctx.require(zm, 3)
        return "zm"
    if ctx.matched("p", alpha, "v1", a):
        _g8_both_sides_at_p(ctx, n, m, a, alpha)
        return None
    if ctx.matched("p", beta, "v1", a):
        _g8_hubs_at_p(ctx, n, m, a, beta, m, other="v1")
        return None
    gamma = ctx.partner("v1", a, "p")
    if gamma in taken:
        ctx.fail(f"p has no usable partner of v1's color {a!r}")
    ctx.branch("p takes the v1 partner")
    ctx.color("p", gamma)
    return "v1"


def _g8_v_fails(ctx, n, m):
    """v y2 v2 fails P (in this view)."""
    xn = f"x{n}"
    ctx.exploit("y2", "v", "v2")
    if not ctx.P("C1", "p y2 v2"):
        ctx.branch("C1 not P")
        return _g8_start_at_p(ctx, n, m)
    if not ctx.P("C1*", "p y2 p2"):
        ctx.branch("C1* not P")
        return _g8_start_at_p(ctx.view(_g8_tau(n, m)), n, m)
    _g8_tree(ctx, n, m)
    a1, a2 = ctx.colored("y2"), ctx.colored("v")
    zs = xs("z", 1, m)
    if not ctx.matched("v", a2, "y1", a1):
        ctx.branch("y1 copies y2")
        ctx.color("y1", a1)
        ctx.require("w", 3)
        # judged against y1 and y2 alone: for n = 1, x1 also sees v
        if len(ctx.res_under(xn, {"y1": a1, "y2": a1})) >= 3:
            return _g8_hubs(ctx, n, m, a1, a1, n)
        b1 = ctx.partner("y1", a1, xn)
        if ctx.matched("w", a1, "p2", a1):
            if ctx.matched("p1", a1, "p2", a1):
                ctx.branch("p2 copies y1")
                ctx.uncolor("y2", "v")
                ctx.color("p2", a1)
                ctx.color("y2", b1)
                ctx.requires(**{"p1": 3, xn: 3, "w": 2, "v2": 3, "p": 2})
                ctx.choose("v2", keep={"p": 2})
                ctx.greedy(["v", "v1", "p"] + zs + ["p1", "w"] + xs("x", 1, n))
                return
            b2 = ctx.partner("p1", a1, "p2")
            ctx.color("p2", b2)
            ctx.requires(p1=3, w=2)
            how = _g8_place_p(ctx, n, m, a1, {a1, b2}, True, True)
            if how == "p1":
                ctx.requires(p1=3, v2=2)
                ctx.greedy(["v1", "v2"] + zs + xs("x", 1, n) + ["w", "p1"])
            elif how == "zm":
                ctx.greedy(["v1", "v2"] + zs[:-1] + xs("x", 1, n) + ["w", "p1", f"z{m}"])
            elif how == "v1":
                ctx.requires(v1=2, v2=2, p1=2, w=2)
                ctx.greedy(xs("x", 1, n) + ["w", "p1"] + zs[::-1] + ["v1", "v2"])
            return
        a3 = ctx.partner("w", a1, "p2")
        ctx.color("p2", a3)
        ctx.require("w", 3)
        how = _g8_place_p(ctx, n, m, a1, {a1, a3}, True, True)
        if how == "p1":
            ctx.require("p1", 2)
            ctx.greedy(["v1", "v2"] + zs + ["p1"] + xs("x", 1, n) + ["w"])
        elif how == "zm":
            ctx.greedy(["v1", "v2"] + zs[:-1] + ["p1", f"z{m}"] + xs("x", 1, n) + ["w"])
        elif how == "v1":
            ctx.requires(v1=2, v2=2)
            ctx.greedy(["p1"] + zs[::-1] + ["v1", "v2"] + xs("x", 1, n) + ["w"])
        return
    ctx.branch("y1 blocked by v")
    pair = {"y1": a1, "y2": a1}
    if len(ctx.res_under("w", pair)) < 3:
        ctx.fail("w keeps fewer than 3 colors under y1, y2")
    if len(ctx.res_under(xn, pair)) >= 3:
        return _g8_hubs(ctx, n, m, a1, a1, n)
    a3 = ctx.choose("y1", keep={xn: 3})
    ctx.requires(w=2, p2=3)
    a4 = ctx.choose("p2", keep={"w": 2})
    how = _g8_place_p(ctx, n, m, a3, {a1, a4}, True, True)
    if how == "p1":
        ctx.requires(p1=2, v2=2)
        ctx.greedy(["v1", "v2"] + zs + ["p1", "w"] + xs("x", 1, n))
    elif how == "zm":
        ctx.greedy(["v1", "v2"] + zs[:-1] + ["p1", f"z{m}", "w"] + xs("x", 1, n))
    elif how == "v1":
        ctx.requires(v1=2, v2=2, w=2, **{xn: 3})
        ctx.greedy(["p1"] + zs[::-1] + ["v1", "v2", "w"] + xs("x", 1, n))


def color_G8(ctx: CaseContext, n: int, m: int) -> None:
    xn, zs = f"x{n}", xs("z", 1, m)
    if not ctx.P("C2", "v y2 v2"):
        ctx.branch("C2 not P")
        return _g8_v_fails(ctx, n, m)
    if not ctx.P("C3", "w y2 p2"):
        ctx.branch("C3 not P")
        return _g8_v_fails(ctx.view(_g8_tau(n, m)), n, m)
    if not ctx.P("C1", "p y2 v2"):
        ctx.branch("C1 not P")
        return _g8_start_at_p(ctx, n, m)
    if not ctx.P("C1*", "p y2 p2"):
        ctx.branch("C1* not P")
        return _g8_start_at_p(ctx.view(_g8_tau(n, m)), n, m)
    ctx.branch("C1 C2 C3 P")
    _g8_tree(ctx, n, m)
    ctx.straighten("v v2", "w p2")
    a1 = ctx.same_color("p", "v", "w")
    ctx.requires(v2=3, y2=3, p2=3)
    a2 = ctx.partner("v", a1, "y1")
    if a2 == a1:
        return _g8_both_sides(ctx, n, m, a1, a1)
    beta = ctx.partner("p", a1, "p1")
    if beta not in (a1, a2):
        ctx.branch("y1 takes the p1 partner")
        ctx.color("y1", beta)
        ctx.requires(**{xn: 2, "y2": 3})
        ctx.choose("y2", keep={xn: 2})
        ctx.require("p1", 2)
        ctx.greedy(["v1", "v2"] + zs + ["p1", "p2"] + xs("x", 1, n))
        return
    gamma = ctx.partner("p", a1, f"z{m}")
    if gamma == beta:
        return _g8_hubs_at_p(ctx, n, m, beta, a1, m)
    if gamma not in (a1, a2):
        ctx.branch("y1 takes the zm partner")
        ctx.color("y1", gamma)
        ctx.requires(**{f"z{m}": 3, xn: 2, "y2": 3})
        ctx.choose("y2", keep={xn: 2})
        ctx.greedy(["p1", "p2", "v1", "v2"] + zs + xs("x", 1, n))
        return
    if ctx.matched("v1", beta, "p", a1):
        return _g8_both_sides_at_p(ctx, n, m, beta, a1)
    if ctx.matched("v1", gamma, "p", a1):
        return _g8_hubs_at_p(ctx, n, m, gamma, a1, m, other="v1")
    g2 = ctx.partner("p", a1, "v1")
    if g2 in (a1, a2):
        ctx.fail("v1 partner of p's color is already blocked at y1")
    ctx.branch("y1 takes the v1 partner")
    ctx.color("y1", g2)
    ctx.requires(**{"v1": 2, xn: 2, "y2": 3})
    ctx.choose("y2", keep={xn: 2})
    ctx.greedy(["p1", "p2"] + zs[::-1] + ["v1", "v2"] + xs("x", 1, n))


# ---------------------------------------------------------------------------
# G9(n): the x path runs from x1 (next to v) to xn (next to w)

def _g9_not_P(ctx: CaseContext, n: int) -> None:
    ctx.exploit("v", "y1", "x1")
    ctx.requires(v1=2, z1=3)
    ctx.choose("z1", keep={"v1": 2})
    ctx.choose("w", keep={"p1": 2})
    ctx.greedy(["y2"] + down("x", n, 1) + ["p2", "p1", "v2", "v1"])


def color_G9(ctx: CaseContext, n: int) -> None:
    if not ctx.P("C1", "v y1 x1"):
        ctx.branch("C1 not P")
        _g9_not_P(ctx, n)
        return
    ctx.straighten("v y1 x1 v")
    if not ctx.P("C2", "v y2 x1"):
        ctx.branch("C2 not P")
        _g9_not_P(ctx.symmetric("v y1 x1", "v y2 x1"), n)
        return
    ctx.branch("C1 C2 P")
    ctx.straighten("v y2 x1")
    ctx.same_color("y1", "y2")
    ctx.requires(w=2, p2=3)
    ctx.choose("p2", keep={"w": 2})
    ctx.requires(v=3, x1=3)
    ctx.greedy(["z1", "p1", "w"] + down("x", n, 2) + ["v1", "v2", "v", "x1"])


# ---------------------------------------------------------------------------
# G10

def color_G10(ctx: CaseContext) -> None:
    if not ctx.P("C1", "y u0 u1"):
        ctx.branch("C1 not P")
        ctx.exploit("u0", "u1", "y")
        ctx.requires(u=2, u3=3)
        ctx.choose("u3", keep={"u": 2})
        ctx.choose("z", keep={"x": 2})
        ctx.greedy("u2 u w x y")
        return
    if not ctx.P("C2", "x y u0"):
        ctx.branch("C2 not P")
        ctx.exploit("x", "u0", "y")
        ctx.requires(u3=2, w=3)
        ctx.choose("w", keep={"u3": 2})
        ctx.choose("u2", keep={"z": 2})
        ctx.greedy("u3 u u1 z y")
        return
    ctx.branch("C1 C2 P")
    ctx.straighten("y u0 u1 y", "x y", "x u0")
    ctx.same_color("u1", "x")
    ctx.requires(z=2, u2=3)
    ctx.choose("u2", keep={"z": 2})
    ctx.requires(y=3, u0=3)
    ctx.greedy("u3 w z u u0 y")


# ---------------------------------------------------------------------------
# G11

def _g11_c1_not_P(ctx: CaseContext) -> None:
    ctx.exploit("u0", "u3", "x")
    ctx.requires(u=2, u1=3)
    ctx.choose("u1", keep={"u": 2})
    ctx.choose("z", keep={"y": 2})
    ctx.greedy("u2 w x1 y u x")


def _g11_c7_not_P(ctx: CaseContext) -> None:
    ctx.exploit("u3", "u2", "u")
    ctx.match_color("x1", "u3")
    ctx.requires(x=3, u0=3)
    ctx.greedy("w z u1 y u0 u x")


G11_SIDE = [("C2", "x u0 x1"), ("C3", "u u0 u3"), ("C4", "y u0 x1"),
            ("C5", "y u0 u1"), ("C6", "u u0 u1")]


def color_G11(ctx: CaseContext) -> None:
    if not ctx.P("C1", "x u0 u3"):
        ctx.branch("C1 not P")
        _g11_c1_not_P(ctx)
        return
    ctx.straighten("x u0 u3 x")
    for label, tri in G11_SIDE:
        if not ctx.P(label, tri):
            ctx.branch(f"{label} not P")
            _g11_c1_not_P(ctx.symmetric("x u0 u3", tri))
            return
        a, b, c = tri.split()
        ctx.straighten(f"{a} {b} {c} {a}")
    if not ctx.P("C7", "u u3 u2"):
        ctx.branch("C7 not P")
        _g11_c7_not_P(ctx)
        return
    ctx.straighten("u u3 u2 u")
    if not ctx.P("C8", "u u1 u2"):
        ctx.branch("C8 not P")
        _g11_c7_not_P(ctx.symmetric("u u3 u2", "u u1 u2"))
        return
    ctx.branch("C7 C8 P")
    ctx.straighten("u u1 u2 u")
    ctx.same_color("x1", "u3", "u1")
    ctx.requires(x=3, u0=3, y=3, u=3, u2=3)
    ctx.greedy("w z u2 y u0 u x")


# ---------------------------------------------------------------------------
# G12

def color_G12(ctx: CaseContext) -> None:
    if not ctx.P("C1", "y u0 u1"):
        ctx.branch("C1 not P")
        ctx.exploit("u0", "u1", "y")
        ctx.requires(u=2, u3=3)
        ctx.choose("u3", keep={"u": 2})
        ctx.choose("w", keep={"x": 2})
        ctx.greedy("u2 u z y1 x1 x y")
        return
    if not ctx.P("C2", "u u0 u1"):
        ctx.branch("C2 not P")
        ctx.exploit("u0", "u1", "u")
        ctx.requires(y=2, y1=3)
        ctx.choose("y1", keep={"y": 2})
        ctx.choose("w", keep={"x1": 2})
        ctx.greedy("z u2 u3 u x x1 y")
        return
    ctx.straighten("y u0 u1 y", "u u0", "u u1")
    if ctx.P("C3", "y u1 y1"):
        ctx.branch("C1 C2 C3 P")
        ctx.straighten("y y1", "u1 y1")
        ctx.same_color("u0", "y1")
        ctx.requires(x1=2, w=3)
        ctx.choose("w", keep={"x1": 2})
        ctx.choose("u2", keep={"z": 2})
        ctx.requires(y=3, u1=2)
        ctx.greedy("u3 x x1 u u1 z y")
        return
    ctx.branch("C3 not P")
    a1, _ = ctx.exploit("u1", "y1", "y")
    ctx.straighten("u u2")
    if a1 in ctx.res("u2"):
        ctx.branch("u2 takes alpha1")
        ctx.color("u2", a1)
        ctx.require("u", 3)
        ctx.greedy("z w")
        ctx.requires(u3=2, x=3)
        ctx.choose("x", keep={"u3": 2})
        ctx.greedy("x1 u0 y u3 u")
        return
    ctx.branch("u2 refuses alpha1")
    ctx.uncolor("u1 y1")
    ctx.same_color("u0", "u2", color=a1)
    ctx.requires(u=3, u1=3, u3=2, w=3)
    ctx.choose("w", keep={"u3": 2})
    ctx.choose("y1", keep={"z": 2})
    ctx.greedy("x1 y u1 z x u3 u")


# ---------------------------------------------------------------------------
# G13

def _g13_c1_not_P(ctx: CaseContext) -> None:
    ctx.exploit("z1", "u2", "z")
    ctx.requires(w=2, u3=3)
    ctx.choose("u3", keep={"w": 2})
    ctx.choose("u0", keep={"u": 2})
    ctx.greedy("x w x1 y u1 u z")


def _g13_fixed_point(ctx: CaseContext, alpha) -> None:
    ctx.same_color("z1", "u1", color=alpha)
    ctx.requires(z=3, u2=3, y=2, u0=3)
    ctx.choose("u0", keep={"y": 2})
    ctx.choose("u3", keep={"u": 2})
    ctx.greedy("x x1 y w u2 u z")


def color_G13(ctx: CaseContext) -> None:
    if not ctx.P("C1", "z z1 u2"):
        ctx.branch("C1 not P")
        _g13_c1_not_P(ctx)
        return
    ctx.straighten("z z1 u2 z")
    if not ctx.P("C2", "w z1 u2"):
        ctx.branch("C2 not P")
        _g13_c1_not_P(ctx.symmetric("z z1 u2", "w z1 u2"))
        return
    ctx.straighten("w z1 u2 w")
    ctx.straighten("w u3", "z u1")
    fixed = [c for c in ctx.res("u1") if ctx.matched("u1", c, "u2", c)]
    if fixed:
        ctx.branch("u1u2 has a fixed color")
        _g13_fixed_point(ctx, fixed[0])
        return
    fixed = [c for c in ctx.res("u3") if ctx.matched("u3", c, "u2", c)]
    if fixed:
        ctx.branch("u3u2 has a fixed color")
        _g13_fixed_point(ctx.symmetric("z z1 u2 u1", "w z1 u2 u3"), fixed[0])
        return
    ctx.branch("no fixed colors")
    ctx.same_color("u2", "u1", "u3", allow_adjacent=True)
    ctx.requires(w=3, z=3)
    ctx.greedy("u u0")
    ctx.requires(x=2, x1=3, y=2)
    ctx.path_ends("x", "x1", "y")
    ctx.requires(x1=2, z=2, w=2)
    ctx.greedy("z1 x1 w z")
