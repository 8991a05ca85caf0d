"""Ext modules against the ambient ring, and depth/dimension via duality.

For a module M over the polynomial ring in d' variables, the i-th deficiency
module is Ext^{d'-i}(M, R).  Its vanishing mirrors the vanishing of the i-th
local cohomology of M at the irrelevant maximal ideal, so depth(M) is the
least i with a nonzero deficiency module and dim(M) the greatest; the
annihilators a_i of the deficiency modules cut out the pseudo supports used
by the locus layer.  Everything is computed globally and interpreted at
primes inside the irrelevant ideal: annihilators localize, so nothing is lost
on that locus.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import VerificationError, ZeroModuleError
from .groebner import Ideal
from .modules import (
    PolyMatrix,
    PresentedModule,
    Resolution,
    annihilator,
    free_resolution,
    is_zero_module,
    kernel,
    subquotient_presentation,
)
from .rings import PolyRing


def _zero_presented(ring: PolyRing) -> PresentedModule:
    return PresentedModule(ring, PolyMatrix.zero(ring, 0, 0))


def _ext_from_resolution(res: Resolution, j: int) -> PresentedModule:
    """Homology of the dualized resolution at position j.

    Requires the resolution to have been computed to length >= j+1 or to have
    terminated naturally earlier (so a missing A_{j+1} really is zero).
    """
    module = res.module
    ring = module.ring
    rank_j = res.rank(j)
    if rank_j == 0:
        return _zero_presented(ring)
    a_next = res.matrix(j + 1)
    if a_next is not None:
        ker_cols = kernel(a_next.transpose())
    else:
        ker_cols = PolyMatrix.identity(ring, rank_j)
    if j == 0:
        image = PolyMatrix.zero(ring, rank_j, 0)
    else:
        image = res.matrix(j).transpose()
    return subquotient_presentation(ker_cols, image)


def ext_module(module: PresentedModule, j: int) -> PresentedModule:
    """Ext^j(M, R), presented as a subquotient of the dualized resolution."""
    d = module.ring.nvars
    if not 0 <= j <= d:
        raise ValueError(f"ext index {j} out of range 0..{d}")
    res = free_resolution(module, max_len=j + 1)
    return _ext_from_resolution(res, j)


@dataclass(frozen=True)
class DeficiencyData:
    """The full list of deficiency modules with annihilators and depth/dim.

    ``modules[i]`` is the i-th deficiency module for 0 <= i <= d' and
    ``annihilators[i]`` its annihilator (the unit ideal exactly when the
    module vanishes).  depth = min nonvanishing index, dim = max.
    """

    module: PresentedModule
    ring: PolyRing
    modules: tuple
    annihilators: tuple
    depth: int
    dim: int

    @property
    def top(self) -> int:
        """Largest index carried (the ambient dimension d')."""
        return len(self.modules) - 1

    def annihilator_of(self, i: int) -> Ideal:
        if not 0 <= i <= self.top:
            raise ValueError(f"index {i} out of range 0..{self.top}")
        return self.annihilators[i]


def deficiency_modules(
    module: PresentedModule, verify: bool = False
) -> DeficiencyData:
    """Compute every deficiency module of a nonzero module.

    Indices above dim(M) are forced to zero without computing the Ext (their
    vanishing is a theorem); ``verify=True`` computes them anyway and
    cross-checks, and also rechecks dim against the annihilator dimension.
    """
    ring = module.ring
    if is_zero_module(module):
        raise ZeroModuleError("depth and dimension are undefined for the zero module")
    d = ring.nvars
    ann = annihilator(module)
    dim_m = ann.dimension()
    res = free_resolution(module, max_len=d + 1)

    mods = []
    anns = []
    for i in range(d + 1):
        if i > dim_m and not verify:
            mods.append(_zero_presented(ring))
            anns.append(Ideal.unit(ring))
            continue
        k_i = _ext_from_resolution(res, d - i)
        if is_zero_module(k_i):
            mods.append(k_i)
            anns.append(Ideal.unit(ring))
        else:
            mods.append(k_i)
            anns.append(annihilator(k_i))
        if verify and i > dim_m and not is_zero_module(k_i):
            raise VerificationError(
                f"deficiency module {i} should vanish above dim {dim_m}"
            )

    nonzero = [i for i in range(d + 1) if not anns[i].is_unit()]
    if not nonzero:
        raise VerificationError("no nonvanishing deficiency module found")
    depth = min(nonzero)
    dim = max(nonzero)
    if dim != dim_m:
        raise VerificationError(
            f"dimension mismatch: duality says {dim}, annihilator says {dim_m}"
        )
    return DeficiencyData(
        module=module,
        ring=ring,
        modules=tuple(mods),
        annihilators=tuple(anns),
        depth=depth,
        dim=dim,
    )
