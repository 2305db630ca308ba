"""Strict-level zig-zag rectification: build the diagonal object C of an
m-interleaving between Z-indexed objects, verify its even/odd restrictions,
and assemble the certified composite interleaving with explicit constants.

For m = 1 the pieces have shifts (1,0), (1,1), (0,1) and the composite is a
(2,2)-interleaving. For general m the outer pieces need shift 2m - 1 (the
even-block floor can lag by up to 2m - 1 off multiples of m), giving a
composite no worse than (3m - 1, 3m - 1).

Window handling: the even (resp. odd) restriction of an object with window
[lo, hi] is presented on [lo, He] (resp. [lo, Ho]) where He (resp. Ho) is the
smallest even-block (resp. odd-block) multiple of m that is >= hi. Ending the
presentation at a fixed point of the reindexing keeps the piecewise-constant
clamping of the presentation consistent with the clamping of the base object,
which is what makes the certificates below literally valid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .grades import Grade, even_reindex, odd_reindex, rat
from .persist import (
    DeltaMorphism,
    InterleavingCert,
    PersistentObject,
    check_interleaving,
    compose_interleavings,
    integer_object,
)


def _window(x: PersistentObject) -> tuple[int, int]:
    if not x.integer_indexed:
        raise ValidationError("expected an integer-indexed object")
    axis = x.grid.axes[0]
    return int(axis[0]), int(axis[-1])


def _int_grade(n: int) -> Grade:
    return Grade([n])


def _even_end(hi: int, m: int) -> int:
    """Smallest q*m >= hi with q even."""
    q = -(-hi // m)
    if q % 2:
        q += 1
    return q * m


def _odd_end(hi: int, m: int) -> int:
    """Smallest q*m >= hi with q odd."""
    q = -(-hi // m)
    if q % 2 == 0:
        q += 1
    return q * m


def reindex(x: PersistentObject, fn, lo: int | None = None,
            hi: int | None = None) -> PersistentObject:
    """Precompose a Z-indexed object with a monotone map fn: Z -> Z with
    fn(n) <= n, presented on the window [lo, hi] (default: the window of x),
    evaluated with the boundary semantics."""
    xlo, xhi = _window(x)
    lo = xlo if lo is None else lo
    hi = xhi if hi is None else hi
    values = [x.evaluate(_int_grade(fn(n))) for n in range(lo, hi + 1)]
    maps = [
        x.structure_map(_int_grade(fn(n)), _int_grade(fn(n + 1)))
        for n in range(lo, hi)
    ]
    return integer_object(x.category_name, values, maps, lo)


def even_odd_restrict(x: PersistentObject, m: int = 1
                      ) -> tuple[PersistentObject, PersistentObject, InterleavingCert]:
    """(e_m^*(X), o_m^*(X)) together with the m-interleaving between them
    given by structure maps of X."""
    lo, hi = _window(x)
    ex = reindex(x, lambda n: even_reindex(n, m), lo, _even_end(hi, m))
    ox = reindex(x, lambda n: odd_reindex(n, m), lo, _odd_end(hi, m))
    shift = _int_grade(m)

    def f_comp(r: Grade):
        n = int(r.coords[0])
        return x.structure_map(
            _int_grade(even_reindex(n, m)), _int_grade(odd_reindex(n + m, m))
        )

    def g_comp(r: Grade):
        n = int(r.coords[0])
        return x.structure_map(
            _int_grade(odd_reindex(n, m)), _int_grade(even_reindex(n + m, m))
        )

    f = DeltaMorphism.from_fn(ex, ox, shift, f_comp, validate=False)
    g = DeltaMorphism.from_fn(ox, ex, shift, g_comp, validate=False)
    return ex, ox, InterleavingCert(f, g)


def _outer_cert(x: PersistentObject, rx: PersistentObject, fn, m: int
                ) -> InterleavingCert:
    """X ~(2m-1, 0)~ fn^*(X) via structure maps, where fn is the even or odd
    block reindexing (fn(n) <= n <= fn(n + 2m - 1))."""
    s = 2 * m - 1
    shift = _int_grade(s)
    zero = _int_grade(0)

    def f_comp(r: Grade):
        n = int(r.coords[0])
        return x.structure_map(_int_grade(n), _int_grade(fn(n + s)))

    def g_comp(r: Grade):
        n = int(r.coords[0])
        return x.structure_map(_int_grade(fn(n)), _int_grade(n))

    f = DeltaMorphism.from_fn(x, rx, shift, f_comp, validate=False)
    g = DeltaMorphism.from_fn(rx, x, zero, g_comp, validate=False)
    return InterleavingCert(f, g)


@dataclass
class ZigzagResult:
    c: PersistentObject
    even_equal: bool   # e_m^*(C) == e_m^*(A) literally on the window
    odd_equal: bool    # o_m^*(C) == o_m^*(B)
    piece_a: InterleavingCert      # A ~ e_m^*(A)
    piece_mid: InterleavingCert    # e_m^*(C) ~ o_m^*(C)
    piece_b: InterleavingCert      # o_m^*(B) ~ B
    composite: InterleavingCert    # A ~ B
    total_shifts: tuple[Grade, Grade]


def zigzag(a: PersistentObject, b: PersistentObject, cert: InterleavingCert,
           m: int = 1) -> ZigzagResult:
    """Diagonal object of an m-interleaving (f, g): C alternates between the
    even blocks of A and the odd blocks of B, connected by structure maps and
    the interleaving legs."""
    report = check_interleaving(cert)
    if not report.valid:
        raise ValidationError(f"input certificate invalid: {report.reason}")
    if cert.epsilon != _int_grade(m) or cert.delta != _int_grade(m):
        raise ValidationError("certificate shifts must equal the block size m")
    lo, hi = _window(a)
    if _window(b) != (lo, hi):
        raise ValidationError("objects must share the same window")

    f, g = cert.f, cert.g
    he, ho = _even_end(hi, m), _odd_end(hi, m)
    hi_c = max(he, ho) + m

    def c_value(n: int):
        if (n // m) % 2 == 0:
            return a.evaluate(_int_grade(even_reindex(n, m)))
        return b.evaluate(_int_grade(odd_reindex(n, m)))

    def c_map(n: int):
        """C(n) -> C(n + 1)."""
        q, q2 = n // m, (n + 1) // m
        if q == q2:
            obj = a if q % 2 == 0 else b
            re = even_reindex if q % 2 == 0 else odd_reindex
            return obj.structure_map(
                _int_grade(re(n, m)), _int_grade(re(n + 1, m))
            )
        if q % 2 == 0:
            # crossing even -> odd: the f-leg at A(q * m)
            return f.component_at(_int_grade(q * m))
        # crossing odd -> even: the g-leg at B(q * m)
        return g.component_at(_int_grade(q * m))

    values = [c_value(n) for n in range(lo, hi_c + 1)]
    maps = [c_map(n) for n in range(lo, hi_c)]
    c = integer_object(a.category_name, values, maps, lo)

    ec = reindex(c, lambda n: even_reindex(n, m), lo, he)
    ea = reindex(a, lambda n: even_reindex(n, m), lo, he)
    oc = reindex(c, lambda n: odd_reindex(n, m), lo, ho)
    ob = reindex(b, lambda n: odd_reindex(n, m), lo, ho)
    even_equal = ec == ea
    odd_equal = oc == ob

    piece_a = _outer_cert(a, ea, lambda n: even_reindex(n, m), m)

    shift = _int_grade(m)

    def mid_f(r: Grade):
        n = int(r.coords[0])
        return c.structure_map(
            _int_grade(even_reindex(n, m)), _int_grade(odd_reindex(n + m, m))
        )

    def mid_g(r: Grade):
        n = int(r.coords[0])
        return c.structure_map(
            _int_grade(odd_reindex(n, m)), _int_grade(even_reindex(n + m, m))
        )

    piece_mid = InterleavingCert(
        DeltaMorphism.from_fn(ec, oc, shift, mid_f, validate=False),
        DeltaMorphism.from_fn(oc, ec, shift, mid_g, validate=False),
    )

    # orient the b-piece as o_m^*(B) ~(0, 2m-1)~ B
    raw_b = _outer_cert(b, ob, lambda n: odd_reindex(n, m), m)
    piece_b = InterleavingCert(raw_b.g, raw_b.f)

    composite = compose_interleavings(
        compose_interleavings(piece_a, piece_mid), piece_b
    )
    return ZigzagResult(
        c, even_equal, odd_equal, piece_a, piece_mid, piece_b, composite,
        (composite.epsilon, composite.delta),
    )


def three_halves_check(x: PersistentObject, y: PersistentObject,
                       r, cert: InterleavingCert) -> InterleavingCert:
    """From an r-interleaving of floor-extensions with 0 <= r < 3/2, extract
    a 1-interleaving of the underlying Z-indexed objects."""
    r = rat(r)
    if not 0 <= r < rat("3/2"):
        raise ValidationError(f"requires 0 <= r < 3/2, got {r}")
    report = check_interleaving(cert)
    if not report.valid:
        raise ValidationError(f"input certificate invalid: {report.reason}")
    one = _int_grade(1)

    from .grades import floor_int

    def f_comp(p: Grade):
        n = p.coords[0]
        # sample the R-certificate at the integer; its target Y(n + r) is the
        # object at floor(n + r), which is <= n + 1 because r < 3/2
        raw = cert.f.component_at(p)
        push = y.structure_map(Grade([floor_int(n + r)]), p + one)
        return y.category.compose(push, raw)

    def g_comp(p: Grade):
        n = p.coords[0]
        raw = cert.g.component_at(p)
        push = x.structure_map(Grade([floor_int(n + r)]), p + one)
        return x.category.compose(push, raw)

    f = DeltaMorphism.from_fn(x, y, one, f_comp, validate=False)
    g = DeltaMorphism.from_fn(y, x, one, g_comp, validate=False)
    return InterleavingCert(f, g)
