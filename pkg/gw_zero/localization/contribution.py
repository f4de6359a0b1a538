from fractions import Fraction
from math import comb, factorial
from typing import List, Optional, Sequence, Tuple

from gw_zero.GeometryConfig import GeometryConfig
from gw_zero.constants import METHOD
from gw_zero.exceptions import WeightDegeneracyError
from gw_zero.localization.CharClassSpec import CharClassSpec
from gw_zero.localization.FixedGraph import FixedGraph
from gw_zero.localization.weights import WeightVector

Descendant = Tuple[int, int]  # (psi power n, hyperplane power a)


def _edge_factor(lam: Sequence[Fraction], i: int, j: int, d: int) -> Fraction:
    """Inverse Euler class of the moving part of H^0(f^*TP^r) along a degree-d edge"""
    diff = lam[i] - lam[j]
    value = Fraction((-1) ** d * d ** (2 * d), factorial(d) ** 2) / diff ** (2 * d)
    for a in range(d + 1):
        point = (a * lam[i] + (d - a) * lam[j]) / d
        for k, lam_k in enumerate(lam):
            if k != i and k != j:
                value /= point - lam_k
    return value


def _vertex_factor(
    lam: Sequence[Fraction],
    label: int,
    flags: List[Fraction],
    marked: bool,
    psi_power: int,
) -> Fraction:
    """
    Node smoothing and contracted-component factors at one vertex. `flags` are the
    tangent weights (lambda_i - lambda_j)/d_e of the edges leaving the vertex.
    """
    tangent = Fraction(1)
    for k, lam_k in enumerate(lam):
        if k != label:
            tangent *= lam[label] - lam_k
    value = tangent ** (len(flags) - 1)

    special = len(flags) + int(marked)
    inverse_sum = sum((1 / w for w in flags), Fraction(0))
    if not marked:
        if special == 1:
            return value * flags[0]
        for w in flags:
            value /= w
        return value * inverse_sum ** (special - 3)

    if special == 2:
        # the marked point sits on the edge itself; psi restricts to minus the flag weight
        return value * (-flags[0]) ** psi_power
    if psi_power > special - 3:
        return Fraction(0)
    for w in flags:
        value /= w
    return value * comb(special - 3, psi_power) * inverse_sum ** (special - 3 - psi_power)


def bundle_roots(
    graph: FixedGraph, lam: Sequence[Fraction], cfg: GeometryConfig, twist: str
) -> List[Fraction]:
    """
    Equivariant Chern roots at the fixed point of `graph` of the twisting bundle:
    H^0 of the convex summands (minus the fiber at the marked point under the kernel
    twist) and H^1 of the concave summands.
    """
    roots: List[Fraction] = []
    for u, v, d in graph.edges:
        i, j = graph.labels[u], graph.labels[v]
        for l in cfg.bundle.convex_degrees:
            roots.extend((a * lam[i] + (l * d - a) * lam[j]) / d for a in range(1, l * d))
        for m in cfg.bundle.concave_degrees:
            roots.extend(-(a * lam[i] + (m * d - a) * lam[j]) / d for a in range(1, m * d))

    for vertex, label in enumerate(graph.labels):
        for l in cfg.bundle.convex_degrees:
            if not (twist == METHOD.TWIST_KERNEL and vertex == graph.mark):
                roots.append(l * lam[label])
        for m in cfg.bundle.concave_degrees:
            roots.extend([-m * lam[label]] * (graph.valence(vertex) - 1))
    return roots


def graph_contribution(
    graph: FixedGraph,
    weights: WeightVector,
    cfg: GeometryConfig,
    b: Optional[CharClassSpec] = None,
    descendant: Optional[Descendant] = None,
    twist: str = METHOD.TWIST_FULL,
) -> Fraction:
    """
    The exact contribution of one fixed locus to an integral over the moduli of
    genus-0 stable maps to P^r.

    :param graph: the fixed-point graph; one-marked when `descendant` is given or twist is kernel
    :param weights: the torus weights to evaluate at
    :param cfg: ambient space and twisting bundle
    :param b: Euler class (default) or Chern polynomial applied to the bundle
    :param descendant: (n, a) for the insertion psi^n ev^*H^a at the marked point
    :param twist: 'none' ignores the bundle, 'full' twists by all of it, 'kernel'
        drops the convex fibers at the marked point

    :return: the contribution as an exact rational
    :raises WeightDegeneracyError: when the weights hit a zero denominator
    """
    if twist not in (METHOD.TWIST_NONE, METHOD.TWIST_FULL, METHOD.TWIST_KERNEL):
        raise ValueError(f'Unknown twist {twist!r}')
    if weights.r != cfg.r:
        raise ValueError(f'Weight vector for P^{weights.r} used on P^{cfg.r}')
    if (descendant is not None or twist == METHOD.TWIST_KERNEL) and graph.mark is None:
        raise ValueError('Descendant insertions and the kernel twist need a one-marked graph')
    b = b if b is not None else CharClassSpec.euler()
    psi_power, h_power = descendant if descendant is not None else (0, 0)

    lam = weights.as_fractions()
    try:
        value = Fraction(1)
        for u, v, d in graph.edges:
            value *= _edge_factor(lam, graph.labels[u], graph.labels[v], d)

        for vertex, label in enumerate(graph.labels):
            flags = [(lam[label] - lam[graph.labels[w]]) / d for w, d in graph.neighbors(vertex)]
            marked = vertex == graph.mark
            value *= _vertex_factor(lam, label, flags, marked, psi_power if marked else 0)
            if marked:
                value *= lam[label] ** h_power

        if twist != METHOD.TWIST_NONE and not cfg.bundle.is_empty:
            degree = cfg.vdim(graph.degree, graph.marks) - psi_power - h_power
            value *= b.evaluate(bundle_roots(graph, lam, cfg, twist), degree)

        covers = 1
        for _, _, d in graph.edges:
            covers *= d
        return value / (graph.automorphism_order * covers)
    except ZeroDivisionError as exc:
        raise WeightDegeneracyError(
            f'Weights {list(weights.values)} are not generic for graph {graph!r}'
        ) from exc
