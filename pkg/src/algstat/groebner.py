"""Groebner bases and ideal arithmetic.

The engine is Buchberger's algorithm with normal-pair selection (a
degree-ordered queue) and the standard pair filters (product and chain
criteria, applied Gebauer-Moeller style).  Internally reductions run
fraction-free over primitive integer coefficient vectors; the reduced
basis handed back is monic over Q, sorted ascending by leading term,
and therefore canonical for the ideal and order.

Also here: elimination via block orders, saturation by the auxiliary
variable trick (t*f - 1), minors of polynomial matrices, and the
standard-monomial counting used to read off fiber cardinalities.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from heapq import heappop, heappush
from math import gcd, prod
from operator import add

from .errors import GuardrailError, ParseError
from .exactmath import IntMatrix
from .ring import (
    GREVLEX,
    LEX,
    MonomialOrder,
    PolyRing,
    Polynomial,
    map_to_ring,
    parse_polynomial,
    print_polynomial,
)

__all__ = [
    "Ideal",
    "GroebnerBasis",
    "PolyMatrix",
    "normal_form",
    "s_polynomial",
    "buchberger",
    "ideal_contains",
    "ideal_equal",
    "eliminate",
    "saturate",
    "saturate_by_product",
    "intersect",
    "krull_dimension",
    "minors",
    "mul_int_poly",
    "is_zero_dimensional",
    "quotient_dimension",
    "parse_ideal_text",
    "format_ideal",
]

STANDARD_MONOMIAL_CAP = 1_000_000

# reserved by `saturate` for the auxiliary variable
SATURATION_VARIABLE = "t"


class Ideal:
    """A finitely generated ideal: a ring plus a tuple of nonzero generators."""

    __slots__ = ("ring", "generators", "_gb")

    def __init__(self, ring: PolyRing, generators):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError("ideal generators must be polynomials")
            if g.ring != ring:
                raise ValueError("generator lives in a different ring")
            if g.terms:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = None

    def groebner(self) -> "GroebnerBasis":
        """The reduced Groebner basis in the ideal's ring order (cached)."""
        if self._gb is None:
            self._gb = buchberger(self)
        return self._gb

    def __repr__(self):
        gens = ", ".join(print_polynomial(g) for g in self.generators) or "0"
        return f"Ideal({gens})"


class GroebnerBasis:
    """A reduced Groebner basis: monic elements, ascending leading terms."""

    __slots__ = ("ideal", "basis", "order")

    def __init__(self, ideal: Ideal, basis, order: MonomialOrder):
        self.ideal = ideal
        self.basis = tuple(basis)
        self.order = order

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def leading_monomials(self):
        return tuple(g.leading_monomial() for g in self.basis)

    def __repr__(self):
        return f"GroebnerBasis<{len(self.basis)} elements, {self.order.name}>"


# ---------------------------------------------------------------------------
# fraction-free engine internals: polynomials as descending lists of
# (sort key, exponent tuple, int coefficient), primitive with positive
# lead.  Keys ride along so the merge loops compare plain tuples
# instead of re-deriving the order from exponents each time.


def _mask(m) -> int:
    b = 0
    for i, e in enumerate(m):
        if e:
            b |= 1 << i
    return b


def _normalize_content(terms):
    if not terms:
        return terms
    g = 0
    for t in terms:
        g = gcd(g, t[2])
        if g == 1:
            break
    if terms[0][2] < 0:
        g = -g
    if g != 1:
        terms = [(k, m, c // g) for k, m, c in terms]
    return terms


def _int_terms(poly: Polynomial, key):
    terms = poly.terms
    if not terms:
        return []
    denom_lcm = 1
    for _, c in terms:
        d = c.denominator
        denom_lcm = denom_lcm // gcd(denom_lcm, d) * d
    return _normalize_content(
        [(key(m), m, int(c * denom_lcm)) for m, c in terms]
    )


def _shifted(terms, shift, key):
    """Multiply by the monomial ``shift`` (keys recomputed, order kept)."""
    if not any(shift):
        return list(terms)
    out = []
    append = out.append
    for _, m, c in terms:
        sm = tuple(map(add, m, shift))
        append((key(sm), sm, c))
    return out


def _combine(f, a, g, b):
    """a*f + b*g for descending keyed term lists (a, b integer scalars)."""
    out = []
    append = out.append
    i = j = 0
    nf, ng = len(f), len(g)
    if a == 1:
        while i < nf and j < ng:
            tf = f[i]
            tg = g[j]
            kf = tf[0]
            kg = tg[0]
            if kf > kg:
                append(tf)
                i += 1
            elif kg > kf:
                append((kg, tg[1], b * tg[2]))
                j += 1
            else:
                v = tf[2] + b * tg[2]
                if v:
                    append((kf, tf[1], v))
                i += 1
                j += 1
        if i < nf:
            out.extend(f[i:])
    else:
        while i < nf and j < ng:
            tf = f[i]
            tg = g[j]
            kf = tf[0]
            kg = tg[0]
            if kf > kg:
                append((kf, tf[1], a * tf[2]))
                i += 1
            elif kg > kf:
                append((kg, tg[1], b * tg[2]))
                j += 1
            else:
                v = a * tf[2] + b * tg[2]
                if v:
                    append((kf, tf[1], v))
                i += 1
                j += 1
        if i < nf:
            out.extend((k, m, a * c) for k, m, c in f[i:])
    if j < ng:
        out.extend((k, m, b * c) for k, m, c in g[j:])
    return out


def _reduce_full(p, reducers, key):
    """Fraction-free full normal form of keyed term list p.

    reducers: list of (lt, lc, terms, mask) sorted ascending by leading
    term, scanned first-match.  Returns a primitive remainder; the
    result is a nonzero rational multiple of the true normal form.
    """
    rem: list = []
    work = list(p)
    k = 0
    while k < len(work):
        _, lm, lc = work[k]
        mmask = _mask(lm)
        hit = None
        for lt, ltc, gterms, gmask in reducers:
            if gmask & ~mmask:
                continue
            ok = True
            for x, y in zip(lt, lm):
                if x > y:
                    ok = False
                    break
            if ok:
                hit = (lt, ltc, gterms)
                break
        if hit is None:
            rem.append(work[k])
            k += 1
            continue
        lt, ltc, gterms = hit
        shift = tuple(x - y for x, y in zip(lm, lt))
        g0 = gcd(lc, ltc)
        a = ltc // g0
        b = lc // g0
        if a < 0:
            a, b = -a, -b
        work = _combine(work[k + 1 :], a, _shifted(gterms[1:], shift, key), -b)
        k = 0
        if rem and a != 1:
            rem = [(kk, m, c * a) for kk, m, c in rem]
    return _normalize_content(rem)


def _make_reducers(term_lists):
    recs = [(t[0][1], t[0][2], t, _mask(t[0][1])) for t in term_lists if t]
    recs.sort(key=lambda r: r[2][0][0])
    return recs


def _spair_terms(f, g, key):
    (_, lf, cf), (_, lg, cg) = f[0], g[0]
    lcm_m = tuple(max(a, b) for a, b in zip(lf, lg))
    sf = tuple(a - b for a, b in zip(lcm_m, lf))
    sg = tuple(a - b for a, b in zip(lcm_m, lg))
    g0 = gcd(cf, cg)
    return _combine(_shifted(f, sf, key), cg // g0, _shifted(g, sg, key), -(cf // g0))


def _monomial_divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _interreduce(term_lists, key):
    """Minimalize then tail-reduce until stable; returns canonical primitive lists."""
    items = sorted((t for t in term_lists if t), key=lambda t: t[0][0])
    minimal = []
    for t in items:
        lt = t[0][1]
        if not any(_monomial_divides(m[0][1], lt) for m in minimal):
            minimal.append(t)
    changed = True
    while changed:
        changed = False
        for i in range(len(minimal)):
            others = minimal[:i] + minimal[i + 1 :]
            r = _reduce_full(minimal[i], _make_reducers(others), key)
            if r != minimal[i]:
                minimal[i] = r
                changed = True
    minimal.sort(key=lambda t: t[0][0])
    return minimal


def buchberger(ideal: Ideal) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal in its ring's order.

    Deterministic and canonical: independent of generator order.
    """
    ring = ideal.ring
    order = ring.order
    raw_key = order.sort_key
    key_cache: dict = {}

    def key(m):
        k = key_cache.get(m)
        if k is None:
            key_cache[m] = k = raw_key(m)
        return k

    inputs = [_int_terms(g, key) for g in ideal.generators]
    inputs = [t for t in inputs if t]
    inputs.sort(key=lambda t: (t[0][0], t))

    basis: list = []  # keyed term lists
    lts: list = []  # leading monomials
    masks: list = []
    reducers: list = []  # (lt, lc, terms, mask) ascending by lt
    reducer_keys: list = []
    pending: dict = {}  # (i, j) -> lcm monomial
    heap: list = []

    def lcm_m(a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    def add_poly(terms):
        new = len(basis)
        lt_new = terms[0][1]
        basis.append(terms)
        lts.append(lt_new)
        masks.append(_mask(lt_new))
        kn = terms[0][0]
        lo = 0
        hi = len(reducer_keys)
        while lo < hi:
            mid = (lo + hi) // 2
            if reducer_keys[mid] < kn:
                lo = mid + 1
            else:
                hi = mid
        reducers.insert(lo, (lt_new, terms[0][2], terms, masks[new]))
        reducer_keys.insert(lo, kn)

        # chain criterion over queued pairs
        for pair in list(pending):
            l = pending[pair]
            i, j = pair
            if (
                _monomial_divides(lt_new, l)
                and lcm_m(lts[i], lt_new) != l
                and lcm_m(lts[j], lt_new) != l
            ):
                del pending[pair]

        cand = {g: lcm_m(lts[g], lt_new) for g in range(new)}
        kept = []
        for g, l in cand.items():
            drop = False
            for g2, l2 in cand.items():
                if l2 != l and _monomial_divides(l2, l):
                    drop = True
                    break
            if not drop:
                kept.append(g)
        groups: dict = {}
        for g in kept:
            groups.setdefault(cand[g], []).append(g)
        for l, members in groups.items():
            coprime = any(
                all(x == 0 or y == 0 for x, y in zip(lts[g], lt_new)) for g in members
            )
            if coprime:
                continue
            rep = min(members)
            pending[(rep, new)] = l
            heappush(heap, (sum(l), key(l), rep, new))

    for t in inputs:
        r = _reduce_full(t, reducers, key)
        if r:
            add_poly(r)

    while heap:
        _, _, i, j = heappop(heap)
        if (i, j) not in pending:
            continue
        del pending[(i, j)]
        s = _spair_terms(basis[i], basis[j], key)
        if not s:
            continue
        r = _reduce_full(s, reducers, key)
        if r:
            add_poly(r)

    reduced = _interreduce(basis, key)
    out = []
    for t in reduced:
        lc = t[0][2]
        out.append(
            Polynomial._raw(ring, tuple((m, Fraction(c, lc)) for _, m, c in t))
        )
    return GroebnerBasis(ideal, out, order)


# ---------------------------------------------------------------------------
# public field-exact operations


def normal_form(f: Polynomial, basis) -> Polynomial:
    """Remainder of f on division by the listed polynomials.

    Deterministic: at each step the leading remaining term is reduced
    by the first divisor in list order; irreducible terms move to the
    remainder.  f - normal_form(f, G) lies in the ideal generated by G.
    """
    if isinstance(basis, GroebnerBasis):
        basis = basis.basis
    ring = f.ring
    reducers = []
    for g in basis:
        if g.ring != ring:
            raise ValueError("divisor lives in a different ring")
        if g.terms:
            reducers.append((g.terms[0][0], g.terms[0][1], g.terms, _mask(g.terms[0][0])))
    cmp = ring.order.compare
    rem: list = []
    work = list(f.terms)
    k = 0
    while k < len(work):
        lm, lc = work[k]
        mmask = _mask(lm)
        hit = None
        for lt, ltc, gterms, gmask in reducers:
            if gmask & ~mmask:
                continue
            if _monomial_divides(lt, lm):
                hit = (lt, ltc, gterms)
                break
        if hit is None:
            rem.append(work[k])
            k += 1
            continue
        lt, ltc, gterms = hit
        shift = tuple(x - y for x, y in zip(lm, lt))
        c = lc / ltc
        shifted = [
            (tuple(a + b for a, b in zip(m, shift)), -c * cc) for m, cc in gterms[1:]
        ]
        out = []
        i = j = 0
        tail = work[k + 1 :]
        while i < len(tail) and j < len(shifted):
            cc = cmp(tail[i][0], shifted[j][0])
            if cc > 0:
                out.append(tail[i])
                i += 1
            elif cc < 0:
                out.append(shifted[j])
                j += 1
            else:
                v = tail[i][1] + shifted[j][1]
                if v:
                    out.append((tail[i][0], v))
                i += 1
                j += 1
        out.extend(tail[i:])
        out.extend(shifted[j:])
        work = out
        k = 0
    return Polynomial._raw(ring, tuple(rem))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """The S-polynomial of two nonzero polynomials in a shared ring."""
    if f.ring != g.ring:
        raise ValueError("polynomials live in different rings")
    if not f.terms or not g.terms:
        raise ValueError("S-polynomials need nonzero polynomials")
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm_m = tuple(max(a, b) for a, b in zip(lf, lg))
    ring = f.ring
    mf = Polynomial._raw(
        ring, ((tuple(a - b for a, b in zip(lcm_m, lf)), 1 / f.leading_coefficient()),)
    )
    mg = Polynomial._raw(
        ring, ((tuple(a - b for a, b in zip(lcm_m, lg)), 1 / g.leading_coefficient()),)
    )
    return mf * f - mg * g


def ideal_contains(ideal: Ideal, f: Polynomial) -> bool:
    if f.ring != ideal.ring:
        raise ValueError("polynomial lives in a different ring")
    return not normal_form(f, ideal.groebner().basis).terms


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    """Mutual containment via reduction against the other side's basis."""
    if a.ring != b.ring:
        raise ValueError("ideals live in different rings")
    if a is b:
        return True
    gb_b = b.groebner().basis
    if any(normal_form(g, gb_b).terms for g in a.generators):
        return False
    gb_a = a.groebner().basis
    return not any(normal_form(g, gb_a).terms for g in b.generators)


def _ideal_leq(a: Ideal, b: Ideal) -> bool:
    gb_b = b.groebner().basis
    return not any(normal_form(g, gb_b).terms for g in a.generators)


# ---------------------------------------------------------------------------
# elimination and saturation


def _restricted_order(order: MonomialOrder, k: int) -> MonomialOrder:
    if order.kind == "block" and order.block_size > k:
        return MonomialOrder.block(order.block_size - k)
    if order.kind == "lex":
        return LEX
    return GREVLEX


def eliminate(ideal: Ideal, k: int) -> Ideal:
    """Intersect with the subring omitting the first k variables.

    Computed with a block(k) order; the result lives in the restricted
    ring and its generators form a reduced basis there.
    """
    ring = ideal.ring
    n = ring.nvars
    if k < 0 or k >= n:
        raise ValueError(f"cannot eliminate {k} of {n} variables")
    if k == 0:
        return ideal
    block_ring = PolyRing(ring.variables, MonomialOrder.block(k))
    gb = Ideal(block_ring, [map_to_ring(g, block_ring) for g in ideal.generators]).groebner()
    zeros = (0,) * k
    sub = PolyRing(ring.variables[k:], _restricted_order(ring.order, k))
    gens = []
    for g in gb.basis:
        if all(m[:k] == zeros for m, _ in g.terms):
            gens.append(sub.poly([(m[k:], c) for m, c in g.terms]))
    return Ideal(sub, gens)


def saturate(ideal: Ideal, f: Polynomial) -> Ideal:
    """The saturation I : f^infinity via the auxiliary variable t."""
    ring = ideal.ring
    if f.ring != ring:
        raise ValueError("polynomial lives in a different ring")
    if not f.terms:
        raise ValueError("cannot saturate by the zero polynomial")
    if SATURATION_VARIABLE in ring.variables:
        raise ValueError(
            f"variable name {SATURATION_VARIABLE!r} is reserved for saturation"
        )
    ext = PolyRing((SATURATION_VARIABLE,) + ring.variables, MonomialOrder.block(1))
    t = ext.gen(0)
    gens = [map_to_ring(g, ext) for g in ideal.generators]
    gens.append(t * map_to_ring(f, ext) - 1)
    elim = eliminate(Ideal(ext, gens), 1)
    return Ideal(ring, [map_to_ring(g, ring) for g in elim.generators])


def saturate_by_product(ideal: Ideal, factors) -> Ideal:
    """I : (f1*...*fm)^infinity, by single saturations iterated to a fixed point."""
    factors = list(factors)
    if not factors:
        return ideal
    current = ideal
    while True:
        changed = False
        for f in factors:
            nxt = saturate(current, f)
            # saturation only grows the ideal, so one containment decides equality
            if _ideal_leq(nxt, current):
                continue
            current = nxt
            changed = True
        if not changed:
            return current


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """The intersection of two ideals in the same ring.

    Uses the auxiliary-variable trick: (t*A + (1-t)*B) restricted to
    the t-free subring.
    """
    if a.ring != b.ring:
        raise ValueError("ideals live in different rings")
    ring = a.ring
    if not a.generators or not b.generators:
        return Ideal(ring, ())
    if SATURATION_VARIABLE in ring.variables:
        raise ValueError(
            f"variable name {SATURATION_VARIABLE!r} is reserved for intersection"
        )
    ext = PolyRing((SATURATION_VARIABLE,) + ring.variables, MonomialOrder.block(1))
    t = ext.gen(0)
    gens = [t * map_to_ring(g, ext) for g in a.generators]
    gens += [(ext.one() - t) * map_to_ring(g, ext) for g in b.generators]
    elim = eliminate(Ideal(ext, gens), 1)
    return Ideal(ring, [map_to_ring(g, ring) for g in elim.generators])


def krull_dimension(gb: GroebnerBasis) -> int:
    """Krull dimension of R/I, read off the leading monomials.

    The dimension equals the largest set of variables whose coordinate
    subspace avoids every leading monomial — the variable count minus
    a minimum hitting set of the leading supports.  The unit ideal
    yields -1 (empty spectrum).
    """
    basis = list(gb.basis)
    n = gb.ideal.ring.nvars
    if any(g.is_constant() for g in basis):
        return -1
    supports = {
        frozenset(i for i, e in enumerate(g.leading_monomial()) if e) for g in basis
    }
    minimal = [s for s in supports if not any(o < s for o in supports)]
    best = [n]

    def cover(unhit, chosen):
        if chosen >= best[0]:
            return
        if not unhit:
            best[0] = chosen
            return
        branch = min(unhit, key=len)
        for v in sorted(branch):
            cover([s for s in unhit if v not in s], chosen + 1)

    cover(minimal, 0)
    return n - best[0]


# ---------------------------------------------------------------------------
# polynomial matrices


class PolyMatrix:
    """Immutable rectangular matrix of polynomials over one ring."""

    __slots__ = ("ring", "entries", "ncols")

    def __init__(self, entries, ring: PolyRing | None = None):
        rows = tuple(tuple(row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows in matrix")
        else:
            width = 0
        if ring is None:
            if not rows or width == 0:
                raise ValueError("an empty PolyMatrix needs an explicit ring")
            ring = rows[0][0].ring
        for r in rows:
            for e in r:
                if not isinstance(e, Polynomial) or e.ring != ring:
                    raise ValueError("all entries must be polynomials in one ring")
        self.ring = ring
        self.entries = rows
        self.ncols = width

    @property
    def nrows(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __repr__(self):
        return f"PolyMatrix<{self.nrows}x{self.ncols} over {self.ring!r}>"


def mul_int_poly(a: IntMatrix, m: PolyMatrix) -> PolyMatrix:
    """Product of an integer matrix with a polynomial matrix."""
    if a.ncols != m.nrows:
        raise ValueError(f"cannot multiply {a.nrows}x{a.ncols} by {m.nrows}x{m.ncols}")
    ring = m.ring
    out = []
    for i in range(a.nrows):
        row = []
        for j in range(m.ncols):
            acc = ring.zero()
            for k in range(a.ncols):
                c = a[i, k]
                if c:
                    acc = acc + m[k, j] * c
            row.append(acc)
        out.append(row)
    return PolyMatrix(out, ring)


def _det(rows) -> Polynomial:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    ring = rows[0][0].ring
    acc = ring.zero()
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _det(minor)
        acc = acc - term if j % 2 else acc + term
    return acc


def minors(k: int, m: PolyMatrix) -> Ideal:
    """The ideal of all k x k minors of a polynomial matrix."""
    if k < 1:
        raise ValueError("minor size must be at least 1")
    if k > min(m.nrows, m.ncols):
        raise ValueError(f"no {k}x{k} minors in a {m.nrows}x{m.ncols} matrix")
    gens = []
    for rows in itertools.combinations(range(m.nrows), k):
        for cols in itertools.combinations(range(m.ncols), k):
            sub = [[m[i, j] for j in cols] for i in rows]
            d = _det(sub)
            if d.terms:
                gens.append(d)
    return Ideal(m.ring, gens)


# ---------------------------------------------------------------------------
# dimension-zero bookkeeping


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """True iff the quotient by the ideal is a finite-dimensional vector space."""
    lts = gb.leading_monomials()
    if any(sum(m) == 0 for m in lts):
        return True  # unit ideal: empty variety
    n = gb.ideal.ring.nvars
    for i in range(n):
        if not any(m[i] > 0 and all(e == 0 for j, e in enumerate(m) if j != i) for m in lts):
            return False
    return True


def quotient_dimension(gb: GroebnerBasis) -> int:
    """Number of standard monomials of a zero-dimensional ideal."""
    if not is_zero_dimensional(gb):
        raise ValueError("ideal is not zero-dimensional")
    lts = list(gb.leading_monomials())
    if any(sum(m) == 0 for m in lts):
        return 0
    n = gb.ideal.ring.nvars
    bounds = []
    for i in range(n):
        bounds.append(
            min(
                m[i]
                for m in lts
                if m[i] > 0 and all(e == 0 for j, e in enumerate(m) if j != i)
            )
        )
    if prod(bounds) > STANDARD_MONOMIAL_CAP:
        raise GuardrailError(
            f"standard monomial box {prod(bounds)} exceeds cap {STANDARD_MONOMIAL_CAP}"
        )

    def count(level: int, active) -> int:
        if any(all(m[j] == 0 for j in range(level, n)) for m in active):
            return 0
        if level == n:
            return 1
        total = 0
        for e in range(bounds[level]):
            total += count(level + 1, [m for m in active if m[level] <= e])
        return total

    return count(0, lts)


# ---------------------------------------------------------------------------
# ideal text format
#
#   ring p_0..p_2 u_0 u_1      (ranges or single names)
#   order grevlex              (optional; lex or grevlex, default grevlex)
#   4*p_0*p_2 - p_1^2          (one polynomial per line)
#
# '#' starts a comment; blank lines are ignored.

_VAR_SPLIT_RE = re.compile(r"([A-Za-z][A-Za-z0-9]*?)_?([0-9]+)\Z")


def _expand_var_token(token: str, lineno: int) -> list[str]:
    if ".." not in token:
        return [token]
    left, right = token.split("..", 1)
    ml = _VAR_SPLIT_RE.match(left)
    mr = _VAR_SPLIT_RE.match(right)
    if not ml or not mr or ml.group(1) != mr.group(1):
        raise ParseError(f"bad variable range {token!r}", lineno, 1)
    lo, hi = int(ml.group(2)), int(mr.group(2))
    if lo > hi:
        raise ParseError(f"descending variable range {token!r}", lineno, 1)
    sep = "_" if "_" in left else ""
    stem = ml.group(1)
    return [f"{stem}{sep}{i}" for i in range(lo, hi + 1)]


def parse_ideal_text(text: str) -> Ideal:
    """Parse the ideal text format into an Ideal in a fresh ring."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise ParseError("ideal text is empty", 1, 1)
    lineno, header = lines[0]
    parts = header.split()
    if parts[0] != "ring" or len(parts) < 2:
        raise ParseError("ideal text must start with a 'ring' line", lineno, 1)
    names: list[str] = []
    for token in parts[1:]:
        names.extend(_expand_var_token(token, lineno))
    body = lines[1:]
    order = GREVLEX
    if body and body[0][1].startswith("order"):
        lineno, order_line = body[0]
        tokens = order_line.split()
        if len(tokens) != 2 or tokens[1] not in ("lex", "grevlex"):
            raise ParseError("order line must be 'order lex' or 'order grevlex'", lineno, 1)
        order = LEX if tokens[1] == "lex" else GREVLEX
        body = body[1:]
    try:
        ring = PolyRing(names, order)
    except ValueError as exc:
        raise ParseError(str(exc), lineno, 1) from None
    gens = []
    for lineno, line in body:
        try:
            gens.append(parse_polynomial(line, ring))
        except ParseError as exc:
            raise ParseError(
                f"in polynomial on line {lineno}: {exc.args[0]}", lineno, exc.column
            ) from None
    return Ideal(ring, gens)


def _group_var_names(names) -> str:
    tokens = []
    i = 0
    n = len(names)
    while i < n:
        m = _VAR_SPLIT_RE.match(names[i])
        if not m or "_" not in names[i]:
            tokens.append(names[i])
            i += 1
            continue
        stem, start = m.group(1), int(m.group(2))
        j = i
        nxt = start
        while j + 1 < n:
            m2 = _VAR_SPLIT_RE.match(names[j + 1])
            if m2 and "_" in names[j + 1] and m2.group(1) == stem and int(m2.group(2)) == nxt + 1:
                j += 1
                nxt += 1
            else:
                break
        if j > i:
            tokens.append(f"{stem}_{start}..{stem}_{nxt}")
        else:
            tokens.append(names[i])
        i = j + 1
    return " ".join(tokens)


def format_ideal(ideal: Ideal) -> str:
    """Inverse of parse_ideal_text (for lex/grevlex rings)."""
    order = ideal.ring.order
    if order.kind == "block":
        raise ValueError("block orders have no text form")
    lines = [f"ring {_group_var_names(ideal.ring.variables)}", f"order {order.name}"]
    lines.extend(print_polynomial(g) for g in ideal.generators)
    return "\n".join(lines) + "\n"
