"""Buchberger Groebner bases for ideals in K[x,y] and submodules of K[x,y]^r.

One engine covers everything.  Vectors are flat dicts mapping (position, i, j)
to nonzero coefficients.  Cofactor transforms and syzygies both come from a
single augmented run: each generator g_k is extended with a unit tag e_k and
the basis is computed under an order that eliminates the original block, so
output rows with a surviving first block form a basis of the module (their
tags expressing them in the inputs), while rows with a zero first block are
exactly the syzygies.

Pair pruning uses the Gebauer-Moeller rules.  The coprime-leading-term
criterion is only valid for ideals, so it is applied solely in rank 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import RankMismatch
from .field import check_same_field
from .poly import Polynomial, TermOrder


class ModuleVector:
    """Fixed-rank vector of polynomials over one field."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[Polynomial]):
        components = tuple(components)
        if not components:
            raise ValueError("empty module vector")
        for c in components[1:]:
            check_same_field(components[0].field, c.field)
        self.components = components

    @classmethod
    def wrap(cls, obj) -> "ModuleVector":
        if isinstance(obj, ModuleVector):
            return obj
        if isinstance(obj, Polynomial):
            return cls((obj,))
        return cls(tuple(obj))

    @property
    def rank(self) -> int:
        return len(self.components)

    @property
    def field(self):
        return self.components[0].field

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        if self.rank != other.rank:
            raise RankMismatch("vector ranks differ")
        return ModuleVector(tuple(a + b for a, b in
                                  zip(self.components, other.components)))

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        if self.rank != other.rank:
            raise RankMismatch("vector ranks differ")
        return ModuleVector(tuple(a - b for a, b in
                                  zip(self.components, other.components)))

    def __neg__(self):
        return ModuleVector(tuple(-a for a in self.components))

    def scale_poly(self, p: Polynomial) -> "ModuleVector":
        return ModuleVector(tuple(p * a for a in self.components))

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.components == other.components

    def total_degree(self):
        return max(c.total_degree() for c in self.components)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    __repr__ = __str__


class ModuleOrder:
    """Term-over-position order, ties to the lowest index; the first ``elim``
    positions, when set, dominate everything else (block elimination)."""

    __slots__ = ("base", "rank", "elim")

    def __init__(self, base: TermOrder, rank: int = 1, elim: int = 0):
        self.base = base
        self.rank = rank
        self.elim = elim

    def key(self, term):
        pos, i, j = term
        a1, a2 = self.base.weights
        return (1 if pos < self.elim else 0,
                i * a1 + j * a2, -j, -pos)

    def restricted(self, rank: int) -> "ModuleOrder":
        return ModuleOrder(self.base, rank, 0)

    def __repr__(self):
        return f"ModuleOrder({self.base!r}, rank={self.rank}, elim={self.elim})"


# ---------------------------------------------------------------------------
# core routines on flat term dicts


def _vec_core(mv: ModuleVector, shift: int = 0):
    out = {}
    for pos, p in enumerate(mv.components):
        for (i, j), c in p.terms.items():
            out[(pos + shift, i, j)] = c
    return out


def _core_vec(core, rank, field, start: int = 0) -> ModuleVector:
    comp_terms = [dict() for _ in range(rank)]
    for (pos, i, j), c in core.items():
        if start <= pos < start + rank:
            comp_terms[pos - start][(i, j)] = c
    return ModuleVector(tuple(Polynomial(field, t) for t in comp_terms))


def _monic(core, lt):
    lc = core[lt]
    if lc == 1:
        return core
    inv = 1 / lc
    return {t: c * inv for t, c in core.items()}


def _normal_form_core(vec, basis, lts, keyf, track=False):
    """Divide vec by the monic basis; returns (remainder, cofactor term dicts).

    Deterministic: always cancels the current leading term against the first
    basis element whose leading term divides it.
    """
    v = dict(vec)
    rem = {}
    cof = [dict() for _ in basis] if track else None
    nb = len(basis)
    while v:
        t = max(v, key=keyf)
        c = v.pop(t)
        pos, i, j = t
        for idx in range(nb):
            gpos, gi, gj = lts[idx]
            if gpos == pos and gi <= i and gj <= j:
                mi, mj = i - gi, j - gj
                g = basis[idx]
                for (p2, a, b), gc in g.items():
                    if p2 == gpos and a == gi and b == gj:
                        continue
                    key2 = (p2, a + mi, b + mj)
                    s = v.get(key2)
                    s = -(c * gc) if s is None else s - c * gc
                    if s:
                        v[key2] = s
                    else:
                        v.pop(key2, None)
                if track:
                    mono = (mi, mj)
                    prev = cof[idx].get(mono)
                    cof[idx][mono] = c if prev is None else prev + c
                break
        else:
            rem[t] = c
    return rem, cof


def _spair_core(g1, lt1, g2, lt2):
    """S-vector of two monic vectors with leading terms in the same position."""
    pos, i1, j1 = lt1
    _, i2, j2 = lt2
    li, lj = max(i1, i2), max(j1, j2)
    out = {}
    m1 = (li - i1, lj - j1)
    for (p, a, b), c in g1.items():
        out[(p, a + m1[0], b + m1[1])] = c
    m2 = (li - i2, lj - j2)
    for (p, a, b), c in g2.items():
        t = (p, a + m2[0], b + m2[1])
        s = out.get(t)
        s = -c if s is None else s - c
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def _run_buchberger(seeds, order: ModuleOrder):
    """Reduced Groebner basis of the module generated by the seed dicts.

    Returns a list of (core dict, leading term), monic, sorted by leading
    term ascending.  Normal selection strategy; deterministic throughout.
    """
    keyf = order.key
    rank1 = order.rank == 1

    G, lts = [], []

    def lcm_term(t1, t2):
        return (t1[0], max(t1[1], t2[1]), max(t1[2], t2[2]))

    def divides(t1, t2):
        return t1[0] == t2[0] and t1[1] <= t2[1] and t1[2] <= t2[2]

    pairs = {}

    def update(new_core, new_lt):
        """Gebauer-Moeller pair update for the arrival of a new element."""
        k = len(G)
        # drop old pairs strictly dominated by the newcomer
        for (i, j) in list(pairs):
            lij = pairs[(i, j)]
            if (divides(new_lt, lij)
                    and lcm_term(lts[i], new_lt) != lij
                    and lcm_term(lts[j], new_lt) != lij):
                del pairs[(i, j)]
        # group candidate pairs by their lcm and keep only minimal lcms
        cand = {}
        for i in range(k):
            if lts[i][0] == new_lt[0]:
                cand.setdefault(lcm_term(lts[i], new_lt), []).append(i)
        kept = []
        for L in sorted(cand, key=keyf):
            if not any(divides(Lk, L) for Lk in kept):
                kept.append(L)
        for L in kept:
            members = cand[L]
            if rank1 and any(
                    lts[i][1] + new_lt[1] == L[1] and lts[i][2] + new_lt[2] == L[2]
                    for i in members):
                continue  # coprime leading monomials; ideal case only
            pairs[(min(members), k)] = L
        G.append(new_core)
        lts.append(new_lt)

    for core in sorted(seeds, key=lambda d: keyf(max(d, key=keyf))):
        rem, _ = _normal_form_core(core, G, lts, keyf)
        if rem:
            lt = max(rem, key=keyf)
            update(_monic(rem, lt), lt)

    while pairs:
        (i, j) = min(pairs, key=lambda p: (keyf(pairs[p]), p))
        del pairs[(i, j)]
        s = _spair_core(G[i], lts[i], G[j], lts[j])
        rem, _ = _normal_form_core(s, G, lts, keyf)
        if rem:
            lt = max(rem, key=keyf)
            update(_monic(rem, lt), lt)

    # minimalize: drop elements whose leading term another one divides
    order_idx = sorted(range(len(G)), key=lambda k: keyf(lts[k]))
    kept = []
    for k in order_idx:
        if not any(divides(lts[m], lts[k]) for m in kept):
            kept.append(k)
    basis = [G[k] for k in kept]
    blts = [lts[k] for k in kept]

    # tail-reduce each element against all the others
    for k in range(len(basis)):
        others = basis[:k] + basis[k + 1:]
        olts = blts[:k] + blts[k + 1:]
        rem, _ = _normal_form_core(basis[k], others, olts, keyf)
        basis[k] = _monic(rem, blts[k])

    return list(zip(basis, blts))


# ---------------------------------------------------------------------------
# public layer


@dataclass(frozen=True)
class Membership:
    contained: bool
    cofactors: Optional[list]  # Polynomials indexed like the generators
    remainder: Optional[ModuleVector] = None

    def __bool__(self):
        return self.contained


class GroebnerBasis:
    """Reduced basis plus (optionally) the transform back to the inputs."""

    def __init__(self, generators, order, field, rank, transform=None, cores=None):
        self.generators = list(generators)
        self.order = order
        self.field = field
        self.rank = rank
        self.transform = transform
        if cores is None:
            keyf = order.key
            cores = []
            for g in self.generators:
                core = _vec_core(g)
                cores.append((core, max(core, key=keyf)))
        self._cores = cores

    def __len__(self):
        return len(self.generators)

    def leading_terms(self):
        return [lt for _, lt in self._cores]

    def normal_form(self, v, track_cofactors: bool = False):
        """Remainder of v; with tracking also the cofactors against the basis."""
        v = ModuleVector.wrap(v)
        if v.rank != self.rank:
            raise RankMismatch(f"rank {v.rank} against a rank-{self.rank} basis")
        basis = [c for c, _ in self._cores]
        lts = [lt for _, lt in self._cores]
        rem, cof = _normal_form_core(_vec_core(v), basis, lts,
                                     self.order.key, track=track_cofactors)
        remainder = _core_vec(rem, self.rank, self.field)
        if not track_cofactors:
            return remainder
        cof_polys = [Polynomial(self.field, d) for d in cof]
        return remainder, cof_polys

    def reduces_to_zero(self, v) -> bool:
        return self.normal_form(v).is_zero()

    def cofactors_on_inputs(self, basis_cofactors):
        """Rewrite basis cofactors as cofactors on the original generators."""
        if self.transform is None:
            raise ValueError("basis was computed without cofactor tracking")
        n_inputs = len(self.transform[0]) if self.transform else 0
        out = [Polynomial.zero(self.field) for _ in range(n_inputs)]
        for c, row in zip(basis_cofactors, self.transform):
            if c.is_zero():
                continue
            for idx, t in enumerate(row):
                if not t.is_zero():
                    out[idx] = out[idx] + c * t
        return out


def _prepare(gens, order):
    vecs = [ModuleVector.wrap(g) for g in gens]
    if not vecs:
        raise ValueError("need at least one generator")
    rank = vecs[0].rank
    for v in vecs[1:]:
        if v.rank != rank:
            raise RankMismatch("generators of unequal rank")
        check_same_field(vecs[0].field, v.field)
    field = vecs[0].field
    if order is None:
        order = ModuleOrder(TermOrder(), rank)
    elif isinstance(order, TermOrder):
        order = ModuleOrder(order, rank)
    return vecs, rank, field, order


def buchberger(gens, order=None, track_cofactors: bool = False) -> GroebnerBasis:
    """Reduced Groebner basis of the module generated by ``gens``.

    With ``track_cofactors`` the result carries a transform matrix with
    basis[k] == sum(transform[k][i] * gens[i]) exactly.
    """
    vecs, rank, field, order = _prepare(gens, order)
    if not track_cofactors:
        seeds = [_vec_core(v) for v in vecs if not v.is_zero()]
        if not seeds:
            raise ValueError("all generators are zero")
        result = _run_buchberger(seeds, order)
        gens_out = [_core_vec(core, rank, field) for core, _ in result]
        return GroebnerBasis(gens_out, order, field, rank, cores=result)

    basis_rows, _ = _augmented_run(vecs, rank, field, order)
    gens_out, transform, cores = [], [], []
    for core, lt, tags in basis_rows:
        gens_out.append(_core_vec(core, rank, field))
        transform.append(tags)
        cores.append((core, lt))
    return GroebnerBasis(gens_out, order.restricted(rank), field, rank,
                         transform=transform, cores=cores)


def _augmented_run(vecs, rank, field, order):
    """Shared augmented computation.

    Returns (basis_rows, syzygy_rows): basis_rows are (core, lt, tag polys)
    for elements with a nonzero original block; syzygy_rows are rank-s
    ModuleVectors spanning all relations among the inputs.
    """
    s = len(vecs)
    aug_order = ModuleOrder(order.base, rank + s, elim=rank)
    seeds = []
    for k, v in enumerate(vecs):
        core = _vec_core(v)
        core[(rank + k, 0, 0)] = field.one
        seeds.append(core)
    result = _run_buchberger(seeds, aug_order)
    basis_rows, syzygy_rows = [], []
    for core, lt in result:
        first = {t: c for t, c in core.items() if t[0] < rank}
        if first:
            tags = _core_vec(core, s, field, start=rank)
            basis_rows.append((first, lt, list(tags.components)))
        else:
            syzygy_rows.append(_core_vec(core, s, field, start=rank))
    return basis_rows, syzygy_rows


def syzygies(gens, order=None):
    """Generators of the relation module {(a_i) : sum a_i * gens_i = 0}."""
    vecs, rank, field, order = _prepare(gens, order)
    _, syz = _augmented_run(vecs, rank, field, order)
    return syz


def membership(v, gens, order=None) -> Membership:
    """Decide v in <gens>; on success the certificate recombines exactly."""
    vecs, rank, field, order = _prepare(gens, order)
    v = ModuleVector.wrap(v)
    if v.rank != rank:
        raise RankMismatch("query rank differs from the generators")
    gb = buchberger(vecs, order, track_cofactors=True)
    remainder, cof = gb.normal_form(v, track_cofactors=True)
    if not remainder.is_zero():
        return Membership(False, None, remainder)
    return Membership(True, gb.cofactors_on_inputs(cof))


def recombine(cofactors, gens) -> ModuleVector:
    """sum cofactors[i] * gens[i]; used to verify certificates exactly."""
    vecs = [ModuleVector.wrap(g) for g in gens]
    out = None
    for c, g in zip(cofactors, vecs):
        piece = g.scale_poly(c)
        out = piece if out is None else out + piece
    return out
