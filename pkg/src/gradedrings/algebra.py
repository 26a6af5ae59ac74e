"""Finite-dimensional group-graded algebras given by structure constants.

An algebra R = (+)_g R_g over a field F is stored as one dimension per group
element plus, for every pair of graded basis elements b_{g,i}, b_{h,j}, the
coefficient vector of their product in the basis of R_{gh}.  The gradation is
therefore structural: products of homogeneous elements land in the right
component by construction, and what remains to verify is associativity and
the unit laws (validate_algebra).

Elements are sparse dicts component -> coefficient tuple.  Everything is
immutable after construction; lazily cached multiplication matrices make that
caching idempotent and safe.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import InvalidInput
from .groups import FiniteGroup
from .linalg import EchelonBasis, Field, Matrix, Subspace, solve_vector


class GradedAlgebra:
    def __init__(
        self,
        field: Field,
        group: FiniteGroup,
        comp_dims: Sequence[int],
        structure: Mapping,
        unit: Sequence,
        *,
        basis_labels: Optional[Mapping] = None,
        meta: Optional[Mapping] = None,
    ):
        if group.identity is None or group._inverses is None:
            raise InvalidInput("grading group has no identity/inverses")
        dims = tuple(int(d) for d in comp_dims)
        if len(dims) != group.order or any(d < 0 for d in dims):
            raise InvalidInput("comp_dims must give one dimension >= 0 per group element")
        if dims[group.identity] < 1:
            raise InvalidInput("identity component must be nonzero (it carries the unit)")
        self.field = field
        self.group = group
        self.comp_dims = dims
        self.dim = sum(dims)
        self.offsets = tuple(sum(dims[:g]) for g in range(group.order))

        table = [
            [
                [[None] * dims[h] for h in range(group.order)]
                for _ in range(dims[g])
            ]
            for g in range(group.order)
        ]
        for key, coeffs in structure.items():
            try:
                g, i, h, j = key
            except (TypeError, ValueError):
                raise InvalidInput(f"structure key must be (g, i, h, j), got {key!r}") from None
            if not (0 <= g < group.order and 0 <= h < group.order):
                raise InvalidInput(f"structure key {key!r} has a bad group index")
            if not (0 <= i < dims[g] and 0 <= j < dims[h]):
                raise InvalidInput(f"structure key {key!r} has a bad basis index")
            k = group.table[g][h]
            vec = tuple(field.coerce(c) for c in coeffs)
            if len(vec) != dims[k]:
                raise InvalidInput(
                    f"product coefficients at {key!r} must have length {dims[k]}"
                )
            table[g][i][h][j] = vec if any(vec) else None
        self._table = table

        u = tuple(field.coerce(c) for c in unit)
        if len(u) != dims[group.identity]:
            raise InvalidInput("unit must be a coefficient vector over the identity component")
        self.unit_coeffs = u

        if basis_labels is None:
            basis_labels = {}
        self._labels = dict(basis_labels)
        self.meta = dict(meta) if meta else {}
        self._flat_left = None
        self._flat_right = None
        self._component_ops = {}

    # --- basis bookkeeping -------------------------------------------------

    def label(self, g: int, i: int) -> str:
        return self._labels.get((g, i), f"{self.group.names[g]}:{i}")

    def product_coeffs(self, g: int, i: int, h: int, j: int) -> tuple:
        """Coefficients of b_{g,i} * b_{h,j} in the basis of R_{gh}."""
        vec = self._table[g][i][h][j]
        if vec is not None:
            return vec
        return (self.field.zero,) * self.comp_dims[self.group.table[g][h]]

    def structure_items(self):
        """Nonzero structure entries as ((g, i, h, j), coeffs), sorted."""
        out = []
        for g in range(self.group.order):
            for i in range(self.comp_dims[g]):
                for h in range(self.group.order):
                    for j in range(self.comp_dims[h]):
                        vec = self._table[g][i][h][j]
                        if vec is not None:
                            out.append(((g, i, h, j), vec))
        return out

    def flat_index(self, g: int, i: int) -> int:
        return self.offsets[g] + i

    def basis_of_flat(self, idx: int) -> tuple:
        for g in range(self.group.order - 1, -1, -1):
            if idx >= self.offsets[g]:
                return g, idx - self.offsets[g]
        raise InvalidInput("flat index out of range")

    # --- elements ----------------------------------------------------------

    def element(self, comps: Mapping) -> "Element":
        return Element(self, comps)

    def basis_element(self, g: int, i: int) -> "Element":
        zero, one = self.field.zero, self.field.one
        coeffs = tuple(one if k == i else zero for k in range(self.comp_dims[g]))
        return Element(self, {g: coeffs})

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {self.group.identity: self.unit_coeffs})

    def from_flat(self, vec: Sequence) -> "Element":
        if len(vec) != self.dim:
            raise InvalidInput("flat vector has wrong length")
        comps = {}
        for g in range(self.group.order):
            d = self.comp_dims[g]
            if d:
                comps[g] = tuple(vec[self.offsets[g] : self.offsets[g] + d])
        return Element(self, comps)

    def flatten(self, x: "Element") -> tuple:
        vec = [self.field.zero] * self.dim
        for g, coeffs in x.comps.items():
            off = self.offsets[g]
            for i, c in enumerate(coeffs):
                vec[off + i] = c
        return tuple(vec)

    # --- multiplication operators -------------------------------------------

    def left_matrix(self, x: "Element") -> Matrix:
        """Matrix of v -> x*v on the flattened algebra (column convention)."""
        cols = [self.flatten(x * self.from_flat(_unit_vec(self, k))) for k in range(self.dim)]
        return Matrix.from_columns(self.field, cols)

    def right_matrix(self, x: "Element") -> Matrix:
        cols = [self.flatten(self.from_flat(_unit_vec(self, k)) * x) for k in range(self.dim)]
        return Matrix.from_columns(self.field, cols)

    def flat_left_ops(self) -> tuple:
        """Left multiplication by each flat basis element, as n x n matrices."""
        if self._flat_left is None:
            ops = []
            for k in range(self.dim):
                g, i = self.basis_of_flat(k)
                ops.append(self.left_matrix(self.basis_element(g, i)))
            self._flat_left = tuple(ops)
        return self._flat_left

    def flat_right_ops(self) -> tuple:
        if self._flat_right is None:
            ops = []
            for k in range(self.dim):
                g, i = self.basis_of_flat(k)
                ops.append(self.right_matrix(self.basis_element(g, i)))
            self._flat_right = tuple(ops)
        return self._flat_right

    def component_ops(self, g: int) -> tuple:
        """Left/right multiplication by the R_e basis, restricted to R_g.

        Returns (left_ops, right_ops): for each basis element b_k of the
        identity component, the d_g x d_g matrix of v -> b_k * v
        (resp. v -> v * b_k) on R_g.
        """
        if g not in self._component_ops:
            e = self.group.identity
            dg = self.comp_dims[g]
            de = self.comp_dims[e]
            lefts, rights = [], []
            for k in range(de):
                lcols = [self.product_coeffs(e, k, g, j) for j in range(dg)]
                rcols = [self.product_coeffs(g, j, e, k) for j in range(dg)]
                lefts.append(Matrix.from_columns(self.field, lcols))
                rights.append(Matrix.from_columns(self.field, rcols))
            self._component_ops[g] = (tuple(lefts), tuple(rights))
        return self._component_ops[g]

    # --- derived algebras ----------------------------------------------------

    def identity_component_algebra(self) -> "GradedAlgebra":
        """The identity component as an algebra over the trivial group."""
        from .groups import trivial_group

        e = self.group.identity
        d = self.comp_dims[e]
        structure = {}
        for i in range(d):
            for j in range(d):
                vec = self._table[e][i][e][j]
                if vec is not None:
                    structure[(0, i, 0, j)] = vec
        labels = {(0, i): self.label(e, i) for i in range(d)}
        return GradedAlgebra(
            self.field, trivial_group(), (d,), structure, self.unit_coeffs, basis_labels=labels
        )

    def __repr__(self):
        dims = ", ".join(f"{self.group.names[g]}:{d}" for g, d in enumerate(self.comp_dims))
        return f"GradedAlgebra({self.field}, dim {self.dim} = {dims})"


def _unit_vec(alg: GradedAlgebra, k: int) -> list:
    v = [alg.field.zero] * alg.dim
    v[k] = alg.field.one
    return v


class Element:
    """A sparse algebra element: dict group index -> coefficient tuple."""

    __slots__ = ("alg", "comps")

    def __init__(self, alg: GradedAlgebra, comps: Mapping):
        clean = {}
        for g, coeffs in comps.items():
            g = int(g)
            if not (0 <= g < alg.group.order):
                raise InvalidInput(f"no component {g}")
            vec = tuple(alg.field.coerce(c) for c in coeffs)
            if len(vec) != alg.comp_dims[g]:
                raise InvalidInput(
                    f"component {alg.group.names[g]} expects {alg.comp_dims[g]} coefficients"
                )
            if any(vec):
                clean[g] = vec
        self.alg = alg
        self.comps = clean

    def _check_same(self, other: "Element"):
        if self.alg is not other.alg:
            raise InvalidInput("elements of different algebras")

    def coeffs(self, g: int) -> tuple:
        got = self.comps.get(g)
        if got is not None:
            return got
        return (self.alg.field.zero,) * self.alg.comp_dims[g]

    def support(self) -> tuple:
        return tuple(sorted(self.comps))

    def project(self, g: int) -> "Element":
        if not (0 <= g < self.alg.group.order):
            raise InvalidInput(f"no component {g}")
        if g in self.comps:
            return Element(self.alg, {g: self.comps[g]})
        return self.alg.zero()

    def is_zero(self) -> bool:
        return not self.comps

    def flat(self) -> tuple:
        return self.alg.flatten(self)

    def __add__(self, other: "Element") -> "Element":
        self._check_same(other)
        f = self.alg.field
        out = dict(self.comps)
        for g, coeffs in other.comps.items():
            if g in out:
                out[g] = tuple(f.add(a, b) for a, b in zip(out[g], coeffs))
            else:
                out[g] = coeffs
        return Element(self.alg, out)

    def __neg__(self) -> "Element":
        f = self.alg.field
        return Element(self.alg, {g: tuple(f.neg(c) for c in v) for g, v in self.comps.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c) -> "Element":
        f = self.alg.field
        c = f.coerce(c)
        return Element(self.alg, {g: tuple(f.mul(c, x) for x in v) for g, v in self.comps.items()})

    def __rmul__(self, c) -> "Element":
        return self.scale(c)

    def __mul__(self, other) -> "Element":
        if not isinstance(other, Element):
            return self.scale(other)
        self._check_same(other)
        alg = self.alg
        p = alg.field.p
        gtab = alg.group.table
        table = alg._table
        acc: dict = {}
        for g, xg in self.comps.items():
            tg = table[g]
            for h, yh in other.comps.items():
                k = gtab[g][h]
                dk = alg.comp_dims[k]
                if dk == 0:
                    continue
                out = acc.get(k)
                if out is None:
                    out = acc[k] = [alg.field.zero] * dk
                for i, xi in enumerate(xg):
                    if not xi:
                        continue
                    row = tg[i][h]
                    for j, yj in enumerate(yh):
                        if not yj:
                            continue
                        vec = row[j]
                        if vec is None:
                            continue
                        c = xi * yj
                        if p:
                            for m, s in enumerate(vec):
                                if s:
                                    out[m] = (out[m] + c * s) % p
                        else:
                            for m, s in enumerate(vec):
                                if s:
                                    out[m] = out[m] + c * s
        return Element(alg, acc)

    def __eq__(self, other):
        return isinstance(other, Element) and self.alg is other.alg and self.comps == other.comps

    def __hash__(self):
        return hash(tuple(sorted(self.comps.items())))

    def __repr__(self):
        if not self.comps:
            return "0"
        parts = []
        for g in sorted(self.comps):
            for i, c in enumerate(self.comps[g]):
                if c:
                    lbl = self.alg.label(g, i)
                    parts.append(lbl if c == self.alg.field.one else f"{c}*{lbl}")
        return " + ".join(parts)


@dataclass
class AlgebraDiagnostics:
    ok: bool
    problems: list
    witness: Optional[tuple] = None  # flat basis index triple for associativity failures

    def __bool__(self):
        return self.ok


def validate_algebra(alg: GradedAlgebra) -> AlgebraDiagnostics:
    """Unit laws plus the full associativity scan over basis triples."""
    problems = []
    one = alg.one()
    basis = [
        alg.basis_element(*alg.basis_of_flat(k)) for k in range(alg.dim)
    ]
    for k, b in enumerate(basis):
        if one * b != b or b * one != b:
            g, i = alg.basis_of_flat(k)
            problems.append(f"unit law fails at basis element {alg.label(g, i)}")
            return AlgebraDiagnostics(False, problems)
    for a_i, a in enumerate(basis):
        for b_i, b in enumerate(basis):
            ab = a * b
            for c_i, c in enumerate(basis):
                if ab * c != a * (b * c):
                    ga, ia = alg.basis_of_flat(a_i)
                    gb, ib = alg.basis_of_flat(b_i)
                    gc, ic = alg.basis_of_flat(c_i)
                    problems.append(
                        "associativity fails at "
                        f"({alg.label(ga, ia)}, {alg.label(gb, ib)}, {alg.label(gc, ic)})"
                    )
                    return AlgebraDiagnostics(False, problems, witness=(a_i, b_i, c_i))
    return AlgebraDiagnostics(True, problems)


def is_invertible(x: Element) -> Optional[Element]:
    """The two-sided inverse of x, or None.

    In a finite-dimensional unital algebra a one-sided inverse is two-sided:
    solving x*y = 1 settles invertibility.
    """
    alg = x.alg
    lx = alg.left_matrix(x)
    sol = solve_vector(lx, alg.flatten(alg.one()))
    if sol is None:
        return None
    return alg.from_flat(sol)


class GradedSubspace:
    """A graded subspace: one Subspace per component (zero ones omitted)."""

    __slots__ = ("alg", "comps")

    def __init__(self, alg: GradedAlgebra, comps: Mapping):
        clean = {}
        for g, sub in comps.items():
            g = int(g)
            if not (0 <= g < alg.group.order):
                raise InvalidInput(f"no component {g}")
            if not isinstance(sub, Subspace):
                raise InvalidInput("components must be Subspace values")
            if sub.ambient_dim != alg.comp_dims[g] or sub.field != alg.field:
                raise InvalidInput(f"component {alg.group.names[g]} has wrong ambient space")
            if sub.dim:
                clean[g] = sub
        self.alg = alg
        self.comps = clean

    @classmethod
    def full(cls, alg: GradedAlgebra, subset) -> "GradedSubspace":
        comps = {}
        for g in subset:
            g = int(g)
            if not (0 <= g < alg.group.order):
                raise InvalidInput(f"no component {g}")
            comps[g] = Subspace.full(alg.field, alg.comp_dims[g])
        return cls(alg, comps)

    @classmethod
    def zero(cls, alg: GradedAlgebra) -> "GradedSubspace":
        return cls(alg, {})

    def component(self, g: int) -> Subspace:
        got = self.comps.get(g)
        if got is not None:
            return got
        return Subspace.zero(self.alg.field, self.alg.comp_dims[g])

    @property
    def total_dim(self) -> int:
        return sum(s.dim for s in self.comps.values())

    def support(self) -> tuple:
        return tuple(sorted(self.comps))

    def flat(self) -> Subspace:
        """The same space embedded in the flattened algebra."""
        alg = self.alg
        zero = alg.field.zero
        vecs = []
        for g in sorted(self.comps):
            off = alg.offsets[g]
            for row in self.comps[g].basis.entries:
                v = [zero] * alg.dim
                v[off : off + len(row)] = row
                vecs.append(v)
        return Subspace.from_vectors(alg.field, alg.dim, vecs)

    def contains(self, x: Element) -> bool:
        if x.alg is not self.alg:
            raise InvalidInput("element of a different algebra")
        return all(self.component(g).contains(coeffs) for g, coeffs in x.comps.items())

    def __eq__(self, other):
        return (
            isinstance(other, GradedSubspace)
            and self.alg is other.alg
            and self.comps == other.comps
        )

    def __hash__(self):
        return hash(tuple(sorted((g, s) for g, s in self.comps.items())))

    def __repr__(self):
        dims = ", ".join(f"{self.alg.group.names[g]}:{s.dim}" for g, s in sorted(self.comps.items()))
        return f"GradedSubspace({dims or '0'})"


def graded_subspace_from_flat(alg: GradedAlgebra, w: Subspace) -> Optional[GradedSubspace]:
    """Decompose a flat subspace into components, or None if it is not graded.

    W is graded exactly when W equals the direct sum of its component
    intersections, i.e. when those intersection dimensions add up to dim W.
    """
    if w.ambient_dim != alg.dim or w.field != alg.field:
        raise InvalidInput("subspace does not live in the flattened algebra")
    comps = {}
    total = 0
    for g in range(alg.group.order):
        d = alg.comp_dims[g]
        if d == 0:
            continue
        off = alg.offsets[g]
        acc = EchelonBasis(alg.field, d)
        # vectors of W supported on component g alone
        found = []
        for vec in _component_slice(alg, w, g):
            if acc.add(vec):
                found.append(vec)
        if found:
            comps[g] = Subspace.from_vectors(alg.field, d, found)
            total += comps[g].dim
    if total != w.dim:
        return None
    return GradedSubspace(alg, comps)


def _component_slice(alg: GradedAlgebra, w: Subspace, g: int):
    """Basis of {x in W : x supported on component g}, as component vectors."""
    from .linalg import nullspace

    off = alg.offsets[g]
    d = alg.comp_dims[g]
    rows = w.basis.entries
    if not rows:
        return []
    # coefficients c with sum c_i rows[i] vanishing outside the slice
    outside = [
        tuple(row[k] for k in range(alg.dim) if not off <= k < off + d) for row in rows
    ]
    constraints = Matrix.from_columns(alg.field, outside)
    ker = nullspace(constraints)
    out = []
    for coefvec in ker.basis.entries:
        v = [alg.field.zero] * d
        for c, row in zip(coefvec, rows):
            if c:
                for k in range(d):
                    v[k] = alg.field.add(v[k], alg.field.mul(c, row[off + k]))
        out.append(tuple(v))
    return out


def component_product(s: GradedSubspace, t: GradedSubspace) -> GradedSubspace:
    """The graded span of products of the two graded subspaces."""
    if s.alg is not t.alg:
        raise InvalidInput("graded subspaces of different algebras")
    alg = s.alg
    accs: dict = {}
    for g, sg in s.comps.items():
        for h, th in t.comps.items():
            k = alg.group.table[g][h]
            dk = alg.comp_dims[k]
            if dk == 0:
                continue
            acc = accs.get(k)
            if acc is None:
                acc = accs[k] = EchelonBasis(alg.field, dk)
            for u in sg.basis.entries:
                xu = Element(alg, {g: u})
                for v in th.basis.entries:
                    prod = xu * Element(alg, {h: v})
                    acc.add(prod.coeffs(k))
    return GradedSubspace(alg, {k: acc.to_subspace() for k, acc in accs.items() if acc.rank})
