from fractions import Fraction
from typing import List

from gw_zero import GW_LOGGER
from gw_zero.exceptions import MirrorError
from gw_zero.mirror.JSeries import NORMALIZED_J, JSeries, MirrorConfig


def extract_gw(J: JSeries, cfg: MirrorConfig) -> List[Fraction]:
    """
    Read genus-0 invariants N_1..N_D of the zero locus Y off a normalized J-series.

    After multiplying by the Euler class of the bundle, the Q^d H^(r-1) hbar^-2 slot
    holds <tau_0 H_Y>_d = d N_d whenever the one-pointed degree-d moduli of Y has
    virtual dimension 1. Calabi-Yau threefolds satisfy this in every degree.

    :param J: the output of mirror_map
    :param cfg: the configuration J was computed for
    :return: [N_1, ..., N_D]
    """
    geometry = cfg.geometry
    if J.kind != NORMALIZED_J:
        raise MirrorError(f'extract_gw expects a normalized J-series, got {J.kind}')
    if not geometry.bundle.is_convex or geometry.bundle.is_empty:
        raise MirrorError(
            f'{geometry} has no zero-locus interpretation; only nonempty convex bundles '
            'can be extracted'
        )
    if cfg.hbar_window > -2:
        raise MirrorError(f'hbar window {cfg.hbar_window} drops the hbar^-2 slot')

    for d in range(1, J.order + 1):
        if not geometry.is_extractable(d):
            raise MirrorError(
                f'Degree-{d} invariants of the zero locus of {geometry.bundle} in P^{geometry.r} '
                'are not enumerative: the one-pointed moduli space does not have '
                'virtual dimension 1'
            )

    twisted = J.times_class(geometry.euler_class())
    invariants = []
    for d in range(1, J.order + 1):
        value = twisted.coefficient(d, geometry.r - 1, -2) / d
        invariants.append(value)
        GW_LOGGER.info(f'Mirror N_{d} for {geometry}: {value}')
    return invariants
