"""Application graphs built directly from algebraic definitions.

Each construction enumerates concrete algebraic objects (field tuples, ring
residues, ideals of Z_N, vectors) and exposes a companion prediction that
realizes the same graph through a chain blow-up, so tests can cross-check
labeled equality by explicit bijection.  Only zero-versus-nonzero and
unit-versus-non-unit coordinate patterns ever matter for adjacency, so no
finite-field arithmetic is implemented.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Sequence

from .blowup import (BlowupSpec, blowup_label, build_blowup, mask_to_binstr,
                     tuple_label)
from .errors import BudgetExceeded, NotPrimePower
from .graphs import SimpleGraph, complete_graph_on, graph_join, zero_divisor_graph
from .poset import FinitePoset

DEFAULT_ELEMENT_BUDGET = 100_000


def prime_power_base(q: int):
    """(p, e) with q = p^e, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise NotPrimePower(f"{q} is not a prime power")
            return p, e
        p += 1
    return q, 1


def _check_budget(count: int, budget: int):
    if count > budget:
        raise BudgetExceeded(
            f"enumeration of {count} elements exceeds the budget of {budget}")


def _euler_phi_prime_power(p: int, e: int) -> int:
    return p ** e - p ** (e - 1)


@dataclass(frozen=True)
class ReducedRingSpec:
    """A finite reduced ring as a product of finite fields of these orders."""

    field_orders: tuple[int, ...]

    def __init__(self, field_orders: Sequence[int]):
        object.__setattr__(self, "field_orders", tuple(field_orders))
        for q in self.field_orders:
            prime_power_base(q)


@dataclass(frozen=True)
class LocalProductSpec:
    """R = prod Z_{p_i^{e_i}} given as (prime, exponent) pairs."""

    prime_powers: tuple[tuple[int, int], ...]

    def __init__(self, prime_powers: Sequence[tuple[int, int]]):
        pairs = tuple((int(p), int(e)) for p, e in prime_powers)
        object.__setattr__(self, "prime_powers", pairs)
        for p, e in pairs:
            base, exp = prime_power_base(p)
            if exp != 1:
                raise NotPrimePower(f"{p} is not prime")
            if e < 1:
                raise NotPrimePower(f"exponent {e} must be >= 1")

    def moduli(self) -> tuple[int, ...]:
        return tuple(p ** e for p, e in self.prime_powers)


# -- zero-divisor graph of a reduced ring -------------------------------------

def reduced_ring_zdg(spec: ReducedRingSpec,
                     budget: int = DEFAULT_ELEMENT_BUDGET) -> SimpleGraph:
    """Gamma(prod F_i): nonzero tuples with a zero coordinate, adjacent when
    the coordinatewise product vanishes, i.e. the supports are disjoint.

    Labels are the coordinate tuples, which makes this graph literally equal
    to the zero-divisor graph of the product of chains with sizes |F_i|.
    """
    qs = spec.field_orders
    count = 1
    for q in qs:
        count *= q
    _check_budget(count, budget)
    verts = [v for v in product(*[range(q) for q in qs])
             if any(v) and not all(v)]
    labels = [tuple_label(v) for v in verts]
    edges = []
    for i, x in enumerate(verts):
        for j in range(i + 1, len(verts)):
            y = verts[j]
            if all(a == 0 or b == 0 for a, b in zip(x, y)):
                edges.append((labels[i], labels[j]))
    return SimpleGraph.from_edges(labels, edges)


def reduced_ring_sdim_formula(spec: ReducedRingSpec) -> int:
    """|Z(R)*| - 2n - 2m + 2 with n fields above order 2 and m copies of
    order 2; equivalently |Z*| - 2k + 2 for k fields in total (k >= 3)."""
    qs = spec.field_orders
    count = 1
    units = 1
    for q in qs:
        count *= q
        units *= q - 1
    zstar = count - units - 1
    return zstar - 2 * len(qs) + 2


# -- comaximal graph of a product of local rings --------------------------------

def comaximal_gamma2prime(spec: LocalProductSpec,
                          budget: int = DEFAULT_ELEMENT_BUDGET) -> SimpleGraph:
    """Non-units outside the Jacobson radical of prod Z_{p_i^{e_i}}; x ~ y
    iff x and y generate the whole ring, i.e. every coordinate has a unit
    on at least one side."""
    mods = spec.moduli()
    ps = [p for p, _ in spec.prime_powers]
    count = 1
    for m in mods:
        count *= m
    _check_budget(count, budget)
    verts = []
    for x in product(*[range(m) for m in mods]):
        nonunit = sum(1 for xi, p in zip(x, ps) if xi % p == 0)
        if 0 < nonunit < len(mods):
            verts.append(x)
    labels = [tuple_label(v) for v in verts]
    edges = []
    for i, x in enumerate(verts):
        for j in range(i + 1, len(verts)):
            y = verts[j]
            if all(a % p != 0 or b % p != 0 for a, b, p in zip(x, y, ps)):
                edges.append((labels[i], labels[j]))
    return SimpleGraph.from_edges(labels, edges)


def comaximal_blowup_prediction(
        spec: LocalProductSpec) -> tuple[BlowupSpec, dict[str, str]]:
    """Blow-up spec matching Gamma_2'(R) plus the vertex bijection.

    Vertices with non-unit coordinate set M form the chain class of mask M;
    its size is prod_{i in M} p_i^{e_i - 1} * prod_{i not in M} phi(p_i^{e_i}).
    """
    mods = spec.moduli()
    ps = [p for p, _ in spec.prime_powers]
    k = len(mods)
    sizes: dict[int, int] = {}
    for mask in range(1, (1 << k) - 1):
        s = 1
        for i, (p, e) in enumerate(spec.prime_powers):
            s *= p ** (e - 1) if mask >> i & 1 else _euler_phi_prime_power(p, e)
        sizes[mask] = s
    mapping: dict[str, str] = {}
    level = {mask: 0 for mask in sizes}
    for x in sorted(product(*[range(m) for m in mods])):
        mask = 0
        for i, (xi, p) in enumerate(zip(x, ps)):
            if xi % p == 0:
                mask |= 1 << i
        if not 0 < mask < (1 << k) - 1:
            continue
        level[mask] += 1
        mapping[tuple_label(x)] = blowup_label(mask, level[mask], k)
    return BlowupSpec(k, sizes).normalized(), mapping


def comaximal_sdim_formula(spec: LocalProductSpec) -> int:
    """|V(Gamma_2'(R))| - 2n + 2 for n = |Max(R)| >= 3."""
    n = len(spec.prime_powers)
    count = 1
    for p, e in spec.prime_powers:
        count *= p ** e
    units = 1
    for p, e in spec.prime_powers:
        units *= _euler_phi_prime_power(p, e)
    jacobson = 1
    for p, e in spec.prime_powers:
        jacobson *= p ** (e - 1)
    vertices = count - units - jacobson
    return vertices - 2 * n + 2


# -- comaximal ideal graph of Z_N ----------------------------------------------

def _divisors(N: int) -> list[int]:
    return [d for d in range(1, N + 1) if N % d == 0]


def _radical(N: int) -> int:
    rad = 1
    m = N
    p = 2
    while p * p <= m:
        if m % p == 0:
            rad *= p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        rad *= m
    return rad


def ideal_lattice_dual_zn(N: int) -> FinitePoset:
    """Dual of the ideal lattice of Z_N: divisors of N under divisibility,
    with 1 (the whole ring) at the bottom and N (the zero ideal) on top."""
    if N < 2:
        raise ValueError("ideal lattice needs N >= 2")
    divs = _divisors(N)
    index = {d: i for i, d in enumerate(divs)}
    down = [0] * len(divs)
    for i, d in enumerate(divs):
        for j, e in enumerate(divs):
            if d % e == 0:
                down[i] |= 1 << j
    return FinitePoset([str(d) for d in divs], down,
                       bottom=0, top=len(divs) - 1, validate=False)


def comaximal_ideal_graph_zn(N: int) -> SimpleGraph:
    """CG(Z_N): proper nonzero ideals dZ_N outside the Jacobson radical,
    adjacent when the ideals sum to the whole ring, i.e. gcd(d, e) = 1."""
    if N < 2:
        raise ValueError("comaximal ideal graph needs N >= 2")
    rad = _radical(N)
    verts = [d for d in _divisors(N) if d not in (1, N) and d % rad != 0]
    labels = [str(d) for d in verts]
    edges = [(str(d), str(e)) for i, d in enumerate(verts)
             for e in verts[i + 1:] if gcd(d, e) == 1]
    return SimpleGraph.from_edges(labels, edges)


def _prime_factor_count(N: int) -> int:
    n = 0
    m = N
    p = 2
    while p * p <= m:
        if m % p == 0:
            n += 1
            while m % p == 0:
                m //= p
        p += 1
    return n + (1 if m > 1 else 0)


def comaximal_ideal_sdim_formula(N: int) -> int:
    """sdim of CG(Z_N): with n distinct primes, |V| - 2n + 2 for n >= 3 and
    1 for a squarefree N with two primes."""
    n = _prime_factor_count(N)
    vertices = len(comaximal_ideal_graph_zn(N).labels)
    if n >= 3:
        return vertices - 2 * n + 2
    if n == 2 and _radical(N) == N:
        return 1
    raise ValueError(f"no closed sdim form for N = {N}")


# -- component union graph of a vector space ------------------------------------

def _vector_label(mask: int, t: int, n: int) -> str:
    return f"{mask_to_binstr(mask, n)}:{t}"


def component_union_graph(n: int, q: int,
                          budget: int = DEFAULT_ELEMENT_BUDGET) -> SimpleGraph:
    """UG(V) for an n-dimensional space over a field of order q: nonzero
    vectors, adjacent when their supports cover the whole basis.

    A vector is encoded as (support mask, index in 1..(q-1)^popcount); which
    nonzero field values occur never affects adjacency.
    """
    prime_power_base(q)
    if n < 1:
        raise ValueError("dimension must be >= 1")
    _check_budget(q ** n, budget)
    full = (1 << n) - 1
    verts = []
    for mask in range(1, full + 1):
        for t in range(1, (q - 1) ** mask.bit_count() + 1):
            verts.append((mask, t))
    labels = {v: _vector_label(v[0], v[1], n) for v in verts}
    edges = []
    for i, (mu, _) in enumerate(verts):
        for j in range(i + 1, len(verts)):
            mv = verts[j][0]
            if mu | mv == full:
                edges.append((labels[verts[i]], labels[verts[j]]))
    return SimpleGraph.from_edges(labels.values(), edges)


def component_union_prediction(
        n: int, q: int) -> tuple[BlowupSpec, list[str], dict[str, str]]:
    """Blow-up spec, the K_t labels, and the bijection onto the blow-up graph.

    A vector with support S corresponds to the chain class of the complement
    mask, so the chain at mask M has size (q-1)^(n-|M|); the (q-1)^n vectors
    of full support form the joined complete part and keep their own labels.
    """
    prime_power_base(q)
    full = (1 << n) - 1
    sizes = {mask: (q - 1) ** (n - mask.bit_count())
             for mask in range(1, full)}
    mapping = {}
    for mask in range(1, full):
        for t in range(1, (q - 1) ** mask.bit_count() + 1):
            mapping[_vector_label(mask, t, n)] = \
                blowup_label(full & ~mask, t, n)
    kt_labels = [_vector_label(full, t, n)
                 for t in range(1, (q - 1) ** n + 1)]
    return BlowupSpec(n, sizes).normalized(), kt_labels, mapping


def component_union_predicted_graph(n: int, q: int) -> SimpleGraph:
    """join(G(L^B), K_t) with vertices renamed back to vector labels."""
    spec, kt_labels, mapping = component_union_prediction(n, q)
    core = zero_divisor_graph(build_blowup(spec))
    inverse = {v: k for k, v in mapping.items()}
    return graph_join(core.relabeled(inverse), complete_graph_on(kt_labels))


def component_union_sdim_formula(n: int, q: int) -> int:
    """The published closed form |V(UG)| - n + 2 for n >= 3.

    Definition-level computation disagrees with this value on every instance
    checked (see the verification suites); it is surfaced unchanged so the
    discrepancy stays visible.
    """
    return q ** n - 1 - n + 2
