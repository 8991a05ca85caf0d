"""Free modules, syzygies, resolutions, and cokernel presentations.

Elements of a free module carry terms keyed by (component, monomial) under a
position-over-term order: components are compared first (lower index wins),
ties by the ring's monomial order.  The syzygy engine is an augmented
Buchberger run that mirrors every reduction on a cofactor vector; a reduction
to zero hands back its cofactor as a kernel generator.  When collecting
syzygies the engine processes every pair (criteria would silently drop
generators), which is what makes the kernel computation complete.

Presentations use the column convention throughout: a module is the cokernel
of its presentation matrix, whose columns are the relations.
"""

from __future__ import annotations

import heapq

from . import budget
from .errors import AlgebraError, ImageNotContainedError, RingMismatchError
from .groebner import Ideal
from .polynomials import Polynomial
from .rings import PolyRing, mono_div, mono_divides, mono_lcm, mono_mul


def _accumulate_scaled(acc: dict, terms, field, coeff, exps):
    """acc += coeff * x^exps * terms, in place on a position->coeff dict."""
    for (comp, e), c in terms:
        pos = (comp, mono_mul(e, exps))
        s = field.add(acc.get(pos, field.zero), field.mul(coeff, c))
        if s == field.zero:
            acc.pop(pos, None)
        else:
            acc[pos] = s


class FreeElement:
    """A vector in R^rank, stored as descending ((component, exps), coeff) terms."""

    __slots__ = ("ring", "rank", "terms")

    def __init__(self, ring: PolyRing, rank: int, terms=()):
        self.ring = ring
        self.rank = rank
        self.terms = tuple(terms)

    @classmethod
    def from_dict(cls, ring: PolyRing, rank: int, coeffs: dict) -> "FreeElement":
        field = ring.field
        cleaned = {}
        for (comp, exps), c in coeffs.items():
            c = field.check(c)
            if c == field.zero:
                continue
            if not 0 <= comp < rank:
                raise ValueError("component index out of range")
            cleaned[(comp, tuple(exps))] = c
        key = ring.order.key
        ordered = sorted(
            cleaned.items(), key=lambda t: (-t[0][0], key(t[0][1])), reverse=True
        )
        return cls(ring, rank, ordered)

    @classmethod
    def unit(cls, ring: PolyRing, rank: int, comp: int) -> "FreeElement":
        return cls(ring, rank, (((comp, ring.unit_monomial()), ring.field.one),))

    @classmethod
    def from_polys(cls, ring: PolyRing, polys) -> "FreeElement":
        polys = list(polys)
        coeffs = {}
        for comp, p in enumerate(polys):
            for e, c in p.terms:
                coeffs[(comp, e)] = c
        return cls.from_dict(ring, len(polys), coeffs)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def lead_term(self):
        return self.terms[0]

    @property
    def lead_position(self):
        """(component, exponents) of the greatest term."""
        return self.terms[0][0]

    @property
    def lead_coeff(self):
        return self.terms[0][1]

    def _check_compatible(self, other):
        if self.ring != other.ring or self.rank != other.rank:
            raise RingMismatchError("free module elements are not compatible")

    def __add__(self, other):
        self._check_compatible(other)
        field = self.ring.field
        acc = dict(self.terms)
        for pos, c in other.terms:
            s = field.add(acc.get(pos, field.zero), c)
            if s == field.zero:
                acc.pop(pos, None)
            else:
                acc[pos] = s
        return FreeElement.from_dict(self.ring, self.rank, acc)

    def __neg__(self):
        neg = self.ring.field.neg
        return FreeElement(
            self.ring, self.rank, tuple((pos, neg(c)) for pos, c in self.terms)
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "FreeElement":
        field = self.ring.field
        c = field.check(c)
        if c == field.zero:
            return FreeElement(self.ring, self.rank)
        return FreeElement(
            self.ring,
            self.rank,
            tuple((pos, field.mul(c, k)) for pos, k in self.terms),
        )

    def mul_term(self, coeff, exps) -> "FreeElement":
        field = self.ring.field
        coeff = field.check(coeff)
        if coeff == field.zero:
            return FreeElement(self.ring, self.rank)
        exps = tuple(exps)
        return FreeElement(
            self.ring,
            self.rank,
            tuple(
                ((comp, mono_mul(e, exps)), field.mul(coeff, c))
                for (comp, e), c in self.terms
            ),
        )

    def mul_poly(self, p: Polynomial) -> "FreeElement":
        field = self.ring.field
        acc = {}
        for e, c in p.terms:
            _accumulate_scaled(acc, self.terms, field, c, e)
        return FreeElement.from_dict(self.ring, self.rank, acc)

    def monic(self) -> "FreeElement":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff))

    def component_poly(self, comp: int) -> Polynomial:
        return Polynomial.from_dict(
            self.ring, {e: c for (i, e), c in self.terms if i == comp}
        )

    def to_polys(self):
        return tuple(self.component_poly(i) for i in range(self.rank))

    def __eq__(self, other):
        return (
            isinstance(other, FreeElement)
            and self.ring == other.ring
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.rank, self.terms))

    def __repr__(self):
        return "(" + ", ".join(str(p) for p in self.to_polys()) + ")"


def module_reduce(v: FreeElement, basis, track: bool = False):
    """Deterministic division in the free module; mirrors reduce_full."""
    ring = v.ring
    field = ring.field
    key = ring.order.key
    heads = []
    for k, g in enumerate(basis):
        v._check_compatible(g)
        heads.append((g.lead_position, g.lead_coeff, k, g))
    quotients = [{} for _ in basis] if track else None

    work = dict(v.terms)
    remainder = {}
    while work:
        lead = max(work, key=lambda pos: (-pos[0], key(pos[1])))
        c = work.pop(lead)
        comp, exps = lead
        for (hcomp, hexps), lc, k, g in heads:
            if hcomp == comp and mono_divides(hexps, exps):
                factor_c = field.div(c, lc)
                factor_e = mono_div(exps, hexps)
                if track:
                    q = quotients[k]
                    q[factor_e] = field.add(q.get(factor_e, field.zero), factor_c)
                for (gc, ge), cg in g.terms[1:]:
                    pos2 = (gc, mono_mul(ge, factor_e))
                    s = field.sub(
                        work.get(pos2, field.zero), field.mul(factor_c, cg)
                    )
                    if s == field.zero:
                        work.pop(pos2, None)
                    else:
                        work[pos2] = s
                break
        else:
            remainder[lead] = c
    rem = FreeElement.from_dict(ring, v.rank, remainder)
    if track:
        return rem, [Polynomial.from_dict(ring, q) for q in quotients]
    return rem, None


def _module_engine(columns, rank, *, cofactors=False, syzygies=False, chain=True):
    """Buchberger over free-module columns, optionally tracking cofactors.

    Returns (basis, cofs, syzs).  Each basis element b satisfies
    b = sum(cols[l] * cofs[l]); every collected syzygy is a relation among the
    original columns.  Collecting syzygies forces cofactor tracking and
    disables the chain criterion: a skipped pair is a lost generator.
    """
    if syzygies:
        cofactors = True
        chain = False
    columns = list(columns)
    if not columns:
        return [], [] if cofactors else None, [] if syzygies else None
    ring = columns[0].ring
    field = ring.field
    key = ring.order.key
    s = len(columns)

    basis = []
    cofs = []
    syzs = []
    for l, col in enumerate(columns):
        if col.ring != ring or col.rank != rank:
            raise RingMismatchError("columns live in different free modules")
        e_l = FreeElement.unit(ring, s, l)
        if col.is_zero():
            if syzygies:
                syzs.append(e_l)
            continue
        inv = field.inv(col.lead_coeff)
        basis.append(col.scale(inv))
        cofs.append(e_l.scale(inv))

    def push_pairs(new):
        comp_new, exps_new = basis[new].lead_position
        for k in range(new):
            comp_k, exps_k = basis[k].lead_position
            if comp_k == comp_new:
                lcm = mono_lcm(exps_k, exps_new)
                heapq.heappush(pairs, (key(lcm), comp_new, k, new))

    pairs = []
    for j in range(len(basis)):
        push_pairs(j)
    done = set()

    while pairs:
        _, comp, i, j = heapq.heappop(pairs)
        done.add((i, j))
        exps_i = basis[i].lead_position[1]
        exps_j = basis[j].lead_position[1]
        lcm = mono_lcm(exps_i, exps_j)
        if chain and any(
            k != i
            and k != j
            and basis[k].lead_position[0] == comp
            and mono_divides(basis[k].lead_position[1], lcm)
            and (min(i, k), max(i, k)) in done
            and (min(j, k), max(j, k)) in done
            for k in range(len(basis))
        ):
            continue
        budget.spend()
        mi = mono_div(lcm, exps_i)
        mj = mono_div(lcm, exps_j)
        one = field.one
        vec = basis[i].mul_term(one, mi) - basis[j].mul_term(one, mj)
        cof = None
        if cofactors:
            cof = cofs[i].mul_term(one, mi) - cofs[j].mul_term(one, mj)
        rem, quots = module_reduce(vec, basis, track=cofactors)
        if cofactors:
            acc = dict(cof.terms)
            for k, q in enumerate(quots):
                for e, c in q.terms:
                    _accumulate_scaled(acc, cofs[k].terms, field, field.neg(c), e)
            cof = FreeElement.from_dict(ring, s, acc)
        if rem.is_zero():
            if syzygies and cof is not None and not cof.is_zero():
                syzs.append(cof)
            continue
        inv = field.inv(rem.lead_coeff)
        basis.append(rem.scale(inv))
        if cofactors:
            cofs.append(cof.scale(inv))
        push_pairs(len(basis) - 1)

    return basis, cofs if cofactors else None, syzs if syzygies else None


def _module_interreduce(basis):
    if not basis:
        return ()
    ring = basis[0].ring
    key = ring.order.key

    def head_key(g):
        comp, exps = g.lead_position
        return (-comp, key(exps))

    minimal = []
    for g in sorted(basis, key=head_key):
        comp, exps = g.lead_position
        if not any(
            h.lead_position[0] == comp and mono_divides(h.lead_position[1], exps)
            for h in minimal
        ):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = module_reduce(g, others)[0] if others else g
        reduced.append(r.monic())
    reduced.sort(key=head_key, reverse=True)
    return tuple(reduced)


def module_buchberger(gens):
    """Reduced Gröbner basis of the submodule the generators span."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return ()
    rank = gens[0].rank
    basis, _, _ = _module_engine(gens, rank)
    return _module_interreduce(basis)


class PolyMatrix:
    """A matrix over the ring, read as a map R^ncols -> R^nrows."""

    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring: PolyRing, nrows: int, ncols: int, rows):
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        rows = tuple(tuple(row) for row in rows)
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError("matrix shape mismatch")
        for row in rows:
            for entry in row:
                if not isinstance(entry, Polynomial) or entry.ring != ring:
                    raise RingMismatchError("matrix entry from a different ring")
        self.rows = rows

    @classmethod
    def zero(cls, ring: PolyRing, nrows: int, ncols: int) -> "PolyMatrix":
        z = Polynomial.zero(ring)
        return cls(ring, nrows, ncols, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, ring: PolyRing, n: int) -> "PolyMatrix":
        one = Polynomial.one(ring)
        z = Polynomial.zero(ring)
        return cls(
            ring, n, n, [[one if i == j else z for j in range(n)] for i in range(n)]
        )

    @classmethod
    def from_rows(cls, ring: PolyRing, rows) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("use the explicit constructor for empty matrices")
        return cls(ring, len(rows), len(rows[0]), rows)

    @classmethod
    def from_columns(cls, ring: PolyRing, nrows: int, columns) -> "PolyMatrix":
        columns = list(columns)
        rows = [
            [col.component_poly(i) for col in columns] for i in range(nrows)
        ]
        return cls(ring, nrows, len(columns), rows)

    def column(self, j: int) -> FreeElement:
        return FreeElement.from_polys(self.ring, (row[j] for row in self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            self.ring,
            self.ncols,
            self.nrows,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
        )

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ring != other.ring:
            raise RingMismatchError("matrices over different rings")
        if self.ncols != other.nrows:
            raise ValueError("matrix dimensions do not compose")
        z = Polynomial.zero(self.ring)
        rows = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = z
                for k in range(self.ncols):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            rows.append(row)
        return PolyMatrix(self.ring, self.nrows, other.ncols, rows)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.ring == other.ring
            and self.rows == other.rows
            and self.nrows == other.nrows
            and self.ncols == other.ncols
        )

    __hash__ = None

    def __repr__(self):
        return f"PolyMatrix({self.nrows}x{self.ncols})"


class PresentedModule:
    """A finitely generated module given as the cokernel of a matrix.

    The zero module is representable (identity presentation, or rank 0);
    detection is semantic via :func:`is_zero_module`.  Instances cache the
    reduced basis of their column span; they are immutable otherwise.
    """

    __slots__ = ("ring", "presentation", "_columns_gb", "_zero", "_ann")

    def __init__(self, ring: PolyRing, presentation: PolyMatrix):
        if presentation.ring != ring:
            raise RingMismatchError("presentation over a different ring")
        self.ring = ring
        self.presentation = presentation
        self._columns_gb = None
        self._zero = None
        self._ann = None

    @property
    def rank(self) -> int:
        """Rank of the free cover being quotiented."""
        return self.presentation.nrows

    @classmethod
    def from_quotient(cls, ideal: Ideal) -> "PresentedModule":
        """R/I as a module: one generator, the ideal's generators as relations."""
        ring = ideal.ring
        matrix = PolyMatrix(ring, 1, len(ideal.gens), [list(ideal.gens)])
        return cls(ring, matrix)

    @classmethod
    def free(cls, ring: PolyRing, rank: int = 1) -> "PresentedModule":
        return cls(ring, PolyMatrix.zero(ring, rank, 0))

    def columns_basis(self):
        if self._columns_gb is None:
            self._columns_gb = module_buchberger(self.presentation.columns())
        return self._columns_gb

    def __repr__(self):
        return f"PresentedModule(rank {self.rank}, {self.presentation.ncols} relations)"


def is_zero_module(module: PresentedModule) -> bool:
    """True iff every unit vector of the cover lies in the relation span."""
    if module._zero is None:
        basis = module.columns_basis()
        module._zero = all(
            module_reduce(
                FreeElement.unit(module.ring, module.rank, i), basis
            )[0].is_zero()
            for i in range(module.rank)
        )
    return module._zero


class _IncrementalBasis:
    """A module Gröbner basis that accepts new elements one at a time."""

    def __init__(self, ring, rank):
        self.ring = ring
        self.rank = rank
        self.basis = []
        self.pairs = []
        self.done = set()

    def reduces_to_zero(self, v: FreeElement) -> bool:
        return module_reduce(v, self.basis)[0].is_zero()

    def _push_pairs(self, new: int):
        key = self.ring.order.key
        comp_new, exps_new = self.basis[new].lead_position
        for k in range(new):
            comp_k, exps_k = self.basis[k].lead_position
            if comp_k == comp_new:
                lcm = mono_lcm(exps_k, exps_new)
                heapq.heappush(self.pairs, (key(lcm), comp_new, k, new))

    def add(self, v: FreeElement):
        self.basis.append(v.monic())
        self._push_pairs(len(self.basis) - 1)
        while self.pairs:
            _, comp, i, j = heapq.heappop(self.pairs)
            self.done.add((i, j))
            exps_i = self.basis[i].lead_position[1]
            exps_j = self.basis[j].lead_position[1]
            lcm = mono_lcm(exps_i, exps_j)
            if any(
                k != i
                and k != j
                and self.basis[k].lead_position[0] == comp
                and mono_divides(self.basis[k].lead_position[1], lcm)
                and (min(i, k), max(i, k)) in self.done
                and (min(j, k), max(j, k)) in self.done
                for k in range(len(self.basis))
            ):
                continue
            budget.spend()
            one = self.ring.field.one
            spair = self.basis[i].mul_term(one, mono_div(lcm, exps_i)) - self.basis[
                j
            ].mul_term(one, mono_div(lcm, exps_j))
            rem = module_reduce(spair, self.basis)[0]
            if not rem.is_zero():
                self.basis.append(rem.monic())
                self._push_pairs(len(self.basis) - 1)


def _prune_generators(gens):
    """Drop generators lying in the span of those kept before them.

    One ascending pass (smallest lead first) over the candidates, against an
    incrementally grown basis of the kept span.  For graded inputs this
    yields a minimal generating set, which is what keeps iterated syzygies
    inside the Hilbert length bound; in general it is a best-effort prune
    that never changes the generated submodule.
    """
    gens = [g for g in gens if not g.is_zero()]
    if len(gens) <= 1:
        return gens
    ring = gens[0].ring
    key = ring.order.key
    ordered = sorted(gens, key=lambda g: (-g.lead_position[0], key(g.lead_position[1])))
    state = _IncrementalBasis(ring, gens[0].rank)
    kept = []
    for g in ordered:
        if kept and state.reduces_to_zero(g):
            continue
        kept.append(g)
        state.add(g)
    kept.sort(
        key=lambda g: (-g.lead_position[0], key(g.lead_position[1])), reverse=True
    )
    return kept


def kernel(matrix: PolyMatrix) -> PolyMatrix:
    """Columns generating the syzygies of the matrix's columns.

    The syzygy module's reduced basis is computed and then pruned to an
    inclusion-minimal generating set; equal inputs give identical kernels.
    """
    if matrix.ncols == 0:
        return PolyMatrix.zero(matrix.ring, 0, 0)
    _, _, syzs = _module_engine(
        matrix.columns(), matrix.nrows, syzygies=True
    )
    reduced = _prune_generators(_module_interreduce(syzs))
    return PolyMatrix.from_columns(matrix.ring, matrix.ncols, reduced)


def annihilator(module: PresentedModule) -> Ideal:
    """Ann(coker A) as the intersection of the quotients (col span : e_i).

    Each quotient ideal is read off the syzygies of the matrix [e_i | A]:
    the first coordinates of kernel generators are exactly the f with
    f*e_i in the column span.
    """
    if module._ann is not None:
        return module._ann
    ring = module.ring
    if module.rank == 0:
        module._ann = Ideal.unit(ring)
        return module._ann
    cols = module.presentation.columns()
    result = None
    for i in range(module.rank):
        augmented = [FreeElement.unit(ring, module.rank, i)] + cols
        _, _, syzs = _module_engine(augmented, module.rank, syzygies=True)
        gens = [s.component_poly(0) for s in syzs]
        quotient_i = Ideal(ring, [g for g in gens if not g.is_zero()])
        result = quotient_i if result is None else result.intersection(quotient_i)
        if result.is_zero():
            break
    module._ann = result
    return result


def subquotient_presentation(
    kernel_gens: PolyMatrix, image_gens: PolyMatrix
) -> PresentedModule:
    """Present (span of kernel_gens) / (span of image_gens).

    Generators are the kernel columns; relations express each image column
    over them, together with the syzygies among the kernel columns.  Image
    columns failing membership raise ImageNotContainedError.
    """
    if kernel_gens.ring != image_gens.ring:
        raise RingMismatchError("subquotient pieces over different rings")
    if kernel_gens.nrows != image_gens.nrows:
        raise ValueError("kernel and image live in different free modules")
    ring = kernel_gens.ring
    k = kernel_gens.ncols
    if k == 0:
        for j in range(image_gens.ncols):
            if not image_gens.column(j).is_zero():
                raise ImageNotContainedError(
                    "image generator outside the (zero) kernel submodule"
                )
        return PresentedModule(ring, PolyMatrix.zero(ring, 0, 0))
    kcols = kernel_gens.columns()
    basis, cofs, syzs = _module_engine(
        kcols, kernel_gens.nrows, cofactors=True, syzygies=True
    )
    field = ring.field
    relations = []
    for j in range(image_gens.ncols):
        b = image_gens.column(j)
        rem, quots = module_reduce(b, basis, track=True)
        if not rem.is_zero():
            raise ImageNotContainedError(
                f"image generator {j} is not in the kernel submodule"
            )
        acc = {}
        for t, q in enumerate(quots):
            for e, c in q.terms:
                _accumulate_scaled(acc, cofs[t].terms, field, c, e)
        relations.append(FreeElement.from_dict(ring, k, acc))
    relations.extend(syzs)
    matrix = PolyMatrix.from_columns(ring, k, relations)
    return PresentedModule(ring, matrix)


class Resolution:
    """Matrices A_1, A_2, ... with consecutive products zero.

    A_1 is the presentation of the module; each later matrix's columns
    generate the kernel of its predecessor.  ``length`` counts the stored
    matrices; a module with a zero-column presentation has length 0.
    """

    __slots__ = ("module", "matrices")

    def __init__(self, module: PresentedModule, matrices):
        self.module = module
        self.matrices = tuple(matrices)

    @property
    def length(self) -> int:
        return len(self.matrices)

    def rank(self, i: int) -> int:
        """Rank of the i-th free module in the resolution (F_0 is the cover)."""
        if i == 0:
            return self.module.rank
        if i <= self.length:
            return self.matrices[i - 1].ncols
        return 0

    def matrix(self, i: int):
        """A_i for 1 <= i <= length, None past the end."""
        if 1 <= i <= self.length:
            return self.matrices[i - 1]
        return None


def free_resolution(module: PresentedModule, max_len: int | None = None) -> Resolution:
    """Resolve by iterated syzygies, stopping at a zero kernel or max_len."""
    if max_len is None:
        max_len = module.ring.nvars
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    matrices = []
    current = module.presentation
    if current.ncols == 0:
        return Resolution(module, ())
    matrices.append(current)
    while len(matrices) < max_len:
        syz = kernel(matrices[-1])
        if syz.ncols == 0:
            break
        matrices.append(syz)
    return Resolution(module, matrices)
