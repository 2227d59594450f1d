"""Likelihood correspondences and maximum-likelihood degrees.

For a projective model of a discrete distribution with coordinates
p_0..p_n and data u_0..u_n, the likelihood correspondence is the
closure of the set of pairs (p, u) where p is a critical point of the
likelihood  prod p_i^{u_i} / (sum p_i)^{sum u_i}  on the model.  Its
ideal lives in Q[p, u] and is computed here two ways:

* a fast path for toric models: start from the toric ideal plus the
  2x2 minors of A * [p u], then saturate (fully, or at the hyperplane
  sum p_i only);
* a general path for arbitrary homogeneous ideals: Lagrange
  multipliers lambda_j in an elimination block, the critical equations
  u_i = p_i * sum_j lambda_j d f_j / d p_i, saturation, then
  elimination of the multipliers.

The ML degree is the number of critical points for generic data; it is
read off as the cardinality of the fiber over random integer data,
taken as the modal value across seeded trials.
"""

from __future__ import annotations

from collections import Counter

from .errors import DegenerateFiberError, InputError, UnstableCountError
from .exactmath import IntMatrix
from .groebner import (
    Ideal,
    PolyMatrix,
    eliminate,
    intersect,
    is_zero_dimensional,
    krull_dimension,
    minors,
    mul_int_poly,
    quotient_dimension,
    saturate,
    saturate_by_product,
)
from .models import ModelGraph, derive_seed, SplitMix64
from .ring import GREVLEX, MonomialOrder, PolyRing, map_to_ring
from .toric import ToricModel, toric_ideal, toric_model

__all__ = [
    "LikelihoodIdeal",
    "lc_ring",
    "compute_lc",
    "compute_lc_toric",
    "compute_lc_general",
    "ml_degree",
]

SATURATION_MODES = ("full", "hyperplane")


class LikelihoodIdeal:
    """The likelihood correspondence ideal in Q[p_0..p_n, u_0..u_n].

    ``mode`` records which construction produced it ("toric" or
    "lagrange"); ``saturation`` which saturation was applied ("full"
    for (sum p)(prod p), "hyperplane" for sum p only).
    """

    __slots__ = ("ring", "generators", "mode", "saturation")

    def __init__(self, ring: PolyRing, generators, mode: str, saturation: str):
        self.ring = ring
        self.generators = tuple(generators)
        self.mode = mode
        self.saturation = saturation

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return (
            f"LikelihoodIdeal<{len(self.generators)} generators, "
            f"mode={self.mode}, saturation={self.saturation}>"
        )


def lc_ring(n: int) -> PolyRing:
    """Q[p_0..p_n, u_0..u_n] with grevlex, p block before u block."""
    if n < 1:
        raise ValueError("need at least two states (n >= 1)")
    names = tuple(f"p_{i}" for i in range(n + 1)) + tuple(f"u_{i}" for i in range(n + 1))
    return PolyRing(names, GREVLEX)


def _check_mode(saturation: str):
    if saturation not in SATURATION_MODES:
        raise InputError(f"saturation mode must be one of {SATURATION_MODES}")


def compute_lc_toric(model, saturation: str = "full") -> LikelihoodIdeal:
    """Likelihood correspondence of a toric model.

    The correspondence ideal is the toric ideal together with the 2x2
    minors of A * M, M the (n+1) x 2 matrix with columns p and u,
    saturated at (sum p)(prod p) ("full") or just sum p ("hyperplane").
    """
    _check_mode(saturation)
    model = toric_model(model)
    a = model.matrix
    n = a.ncols - 1
    if n < 1:
        raise ValueError("need at least two states")
    ring = lc_ring(n)
    p_gens = [ring.gen(i) for i in range(n + 1)]
    u_gens = [ring.gen(n + 1 + i) for i in range(n + 1)]
    ix = toric_ideal(model)
    embedded = [map_to_ring(g, ring) for g in ix.generators]
    m = PolyMatrix([[p_gens[i], u_gens[i]] for i in range(n + 1)], ring)
    am = mul_int_poly(a, m)
    j = Ideal(ring, embedded + list(minors(2, am).generators))
    p_sum = sum(p_gens[1:], p_gens[0])
    if saturation == "full":
        sat = saturate_by_product(j, [p_sum] + p_gens)
    else:
        sat = saturate(j, p_sum)
    gens = tuple(g.primitive_part() for g in sat.groebner().basis)
    return LikelihoodIdeal(ring, gens, "toric", saturation)


def _saturate_by_ideal(ideal: Ideal, multiplier: Ideal) -> Ideal:
    """I : J^infinity — intersect the saturations at J's generators."""
    gens = multiplier.generators
    if not gens:
        raise ValueError("cannot saturate at the zero ideal")
    parts = [saturate(ideal, f) for f in gens]
    out = parts[0]
    for part in parts[1:]:
        out = intersect(out, part)
    return out


def compute_lc_general(ideal: Ideal, saturate_singular: bool = False) -> LikelihoodIdeal:
    """Likelihood correspondence of any homogeneous proper ideal in Q[p].

    Lagrange construction: with f_0 = sum p_i and f_1..f_r the
    generators, impose u_i = p_i * sum_j lambda_j df_j/dp_i, saturate
    at (prod p)(sum p), then eliminate the lambda block.

    ``saturate_singular`` additionally saturates at the ideal of
    codimension-sized minors of the Jacobian of the generators before
    eliminating, removing components supported on the singular locus.
    The default skips this; models smooth away from the coordinate
    hyperplanes do not need it.
    """
    p_ring = ideal.ring
    p_names = p_ring.variables
    n = len(p_names) - 1
    if n < 1:
        raise ValueError("need at least two states")
    for g in ideal.generators:
        if not g.is_homogeneous():
            raise ValueError(f"generator {g} is not homogeneous")
    gb = ideal.groebner()
    if any(b.is_constant() for b in gb.basis):
        raise ValueError("the unit ideal has no likelihood correspondence")

    r = len(ideal.generators)
    lam_names = tuple(f"lam_{j}" for j in range(r + 1))
    u_names = tuple(f"u_{i}" for i in range(n + 1))
    for name in p_names:
        if name in lam_names or name in u_names or name == "t":
            raise InputError(f"model variable name {name!r} collides with a reserved name")
    work = PolyRing(lam_names + p_names + u_names, MonomialOrder.block(r + 1))
    lam = [work.gen(j) for j in range(r + 1)]
    p = [work.gen(r + 1 + i) for i in range(n + 1)]
    u = [work.gen(r + 1 + n + 1 + i) for i in range(n + 1)]

    # The relations u_i - p_i * grad present the work ideal as the graph
    # of a substitution u = h(lam, p) over the p-part, so saturating at
    # any polynomial in p alone commutes with attaching the graph:
    # J : g^inf = (I : g^inf) extended + graph relations.  All requested
    # multipliers live in the p-variables, so the saturations run in the
    # small ring and the graph relations are added afterwards.
    small_sum = p_ring.sum_of_gens()
    sat_p = saturate_by_product(ideal, [small_sum] + list(p_ring.gens()))
    if saturate_singular and ideal.generators:
        codim = p_ring.nvars - krull_dimension(gb)
        jac = PolyMatrix(
            [
                [g.differentiate(i) for i in range(p_ring.nvars)]
                for g in ideal.generators
            ],
            p_ring,
        )
        sing = minors(codim, jac)
        if not sing.generators:
            raise ValueError("the Jacobian has no nonzero minors of codimension size")
        sat_p = _saturate_by_ideal(sat_p, sing)

    p_sum = sum(p[1:], p[0])
    fs = [p_sum] + [map_to_ring(g, work) for g in ideal.generators]
    gens = [map_to_ring(g, work) for g in sat_p.generators]
    for i in range(n + 1):
        grad = work.zero()
        for j, f in enumerate(fs):
            df = f.differentiate(r + 1 + i)
            if df.terms:
                grad = grad + lam[j] * df
        gens.append(u[i] - p[i] * grad)

    elim = eliminate(Ideal(work, gens), r + 1)

    target = PolyRing(p_names + u_names, GREVLEX)
    out = tuple(
        map_to_ring(g, target).primitive_part()
        for g in Ideal(target, [map_to_ring(g, target) for g in elim.generators])
        .groebner()
        .basis
    )
    return LikelihoodIdeal(target, out, "lagrange", "full")


def compute_lc(model_input, saturation: str = "full", saturate_singular: bool = False) -> LikelihoodIdeal:
    """Dispatch on the input kind.

    Toric models and graphs go through the toric construction; raw
    ideals through the Lagrange construction (whose saturation is
    always full, so the flag must not ask for less).
    """
    _check_mode(saturation)
    if isinstance(model_input, LikelihoodIdeal):
        return model_input
    if isinstance(model_input, (ToricModel, IntMatrix, ModelGraph)):
        if saturate_singular:
            raise InputError("singular-locus saturation only applies to ideal input")
        return compute_lc_toric(model_input, saturation)
    if isinstance(model_input, Ideal):
        if saturation != "full":
            raise InputError("the general construction only supports full saturation")
        return compute_lc_general(model_input, saturate_singular)
    raise TypeError(f"cannot compute a likelihood correspondence from {type(model_input).__name__}")


def ml_degree(model_input, trials: int = 3, seed: int = 0, u_range=(1, 1000)) -> int:
    """Maximum-likelihood degree: generic fiber cardinality of the correspondence.

    Each trial substitutes seeded random integer data for u, adds the
    chart sum p = 1, saturates at the coordinates, and counts standard
    monomials of the (necessarily zero-dimensional) fiber ideal.  The
    modal count across trials is returned; all-distinct counts raise
    UnstableCountError, a non-finite fiber DegenerateFiberError.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    lo, hi = u_range
    if not (isinstance(lo, int) and isinstance(hi, int)) or lo < 1 or hi < lo:
        raise InputError("u_range must be integers 1 <= lo <= hi")
    lc = compute_lc(model_input)
    nvars = len(lc.ring.variables)
    n1 = nvars // 2
    u_names = lc.ring.variables[n1:]
    counts = []
    for t in range(trials):
        rng = SplitMix64(derive_seed(seed, t))
        data = {name: rng.next_int(lo, hi) for name in u_names}
        fiber_gens = [g.substitute(data) for g in lc.generators]
        p_ring = PolyRing(lc.ring.variables[:n1], GREVLEX)
        chart = p_ring.sum_of_gens() - 1
        fiber = Ideal(p_ring, fiber_gens + [chart])
        sat = saturate_by_product(fiber, p_ring.gens())
        gb = sat.groebner()
        if not is_zero_dimensional(gb):
            raise DegenerateFiberError(
                f"fiber over data {tuple(data.values())} is not zero-dimensional"
            )
        counts.append(quotient_dimension(gb))
    if trials > 1 and len(set(counts)) == trials:
        raise UnstableCountError(f"unstable generic count: trials gave {counts}")
    freq = Counter(counts)
    best = max(freq.values())
    return min(v for v, c in freq.items() if c == best)
