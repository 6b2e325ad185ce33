"""Generating sets for the module of polynomial 1-forms leaving f = 0
invariant, i.e. all w = P dx + Q dy with df ^ w divisible by f.

A form is tangent exactly when f_x*Q - f_y*P lies in <f>, so the module is
the projection to (P, Q) of the relations among (-f_y, f_x, f).  On top of
that raw construction sit: the distinguished 1-form built from a kernel
witness theta (f*theta = A*f_x + B*f_y gives -B dx + A dy), generation
verification with certificates, greedy minimal generating sets, and the
Saito wedge test for freeness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (InvariantViolation, NotHomogeneous, NotInJacobian,
                     NotSmooth, NotTangent, ZeroInput)
from .field import Rational
from .groebner import ModuleVector, buchberger, membership, syzygies
from .milnor import MilnorAlgebra
from .poly import (OneForm, Polynomial, Weights, exterior_derivative,
                   format_one_form, wedge)


def form_vector(w: OneForm) -> ModuleVector:
    return ModuleVector((w.P, w.Q))


def vector_form(v: ModuleVector) -> OneForm:
    if v.rank != 2:
        raise ValueError("expected a rank-2 vector")
    return OneForm(v.components[0], v.components[1])


def tangency_defect(f: Polynomial, w: OneForm) -> Polynomial:
    """Normal form of f_x*Q - f_y*P modulo <f>; zero iff w is tangent."""
    gb = buchberger([f])
    expr = f.diff("x") * w.Q - f.diff("y") * w.P
    return gb.normal_form(expr).components[0]


def is_tangent(f: Polynomial, w: OneForm) -> bool:
    return tangency_defect(f, w).is_zero()


@dataclass
class GeneratorSet:
    kind: str  # trivial_smooth | four_generator | syzygy_raw | minimal
    forms: list
    f: Polynomial

    def __len__(self):
        return len(self.forms)

    def vectors(self):
        return [form_vector(w) for w in self.forms]

    def __str__(self):
        body = "; ".join(format_one_form(w) for w in self.forms)
        return f"<{self.kind}: {body}>"


def _checked(kind: str, forms, f: Polynomial) -> GeneratorSet:
    for w in forms:
        if not is_tangent(f, w):
            raise InvariantViolation(
                f"constructed form is not tangent: {format_one_form(w)}")
    return GeneratorSet(kind, list(forms), f)


def syzygy_generators(f: Polynomial, order=None) -> GeneratorSet:
    """Raw generating set of the full tangent module via relations among
    (-f_y, f_x, f); the f-cofactor of each relation is verified exactly and
    then discarded."""
    if f.is_constant():
        raise ZeroInput("need a non-constant polynomial")
    fx, fy = f.diff("x"), f.diff("y")
    rels = syzygies([-fy, fx, f], order)
    forms = []
    for rel in rels:
        p, q, c = rel.components
        if not (q * fx - p * fy + c * f).is_zero():
            raise InvariantViolation("relation does not certify tangency")
        if not (p.is_zero() and q.is_zero()):
            forms.append(OneForm(p, q))
    return _checked("syzygy_raw", forms, f)


def trivial_forms(f: Polynomial):
    zero = Polynomial.zero(f.field)
    return [OneForm(f, zero), OneForm(zero, f), exterior_derivative(f)]


def smooth_generators(f: Polynomial, curve_exponent: int) -> GeneratorSet:
    """For a smooth curve the trivial forms f dx, f dy, df generate."""
    if curve_exponent != 0:
        raise NotSmooth("0 is a critical value of f")
    return _checked("trivial_smooth", trivial_forms(f), f)


def omega_from_theta(f: Polynomial, ma: MilnorAlgebra,
                     theta: Polynomial) -> OneForm:
    """The distinguished tangent form: write f*theta = A*f_x + B*f_y via
    tracked division, then return -B dx + A dy."""
    rem, cof = ma.gb.normal_form(f * theta, track_cofactors=True)
    if not rem.is_zero():
        raise NotInJacobian("f*theta does not reduce to zero; bad theta")
    a, b = ma.gb.cofactors_on_inputs(cof)
    omega = OneForm(-b, a)
    if wedge(exterior_derivative(f), omega).coeff != f * theta:
        raise InvariantViolation("wedge identity for the kernel form failed")
    return omega


def four_generators(f: Polynomial, omega: OneForm) -> GeneratorSet:
    return _checked("four_generator", trivial_forms(f) + [omega], f)


@dataclass
class GenerationResult:
    generates: bool
    witness: Optional[OneForm] = None     # first reference form left over
    certificates: Optional[list] = None   # cofactor rows onto the candidates

    def __bool__(self):
        return self.generates


def verify_generation(candidate, reference) -> GenerationResult:
    """Does <candidate> contain every reference form?  Certificates are
    exact cofactor rows; the witness is the first failing form."""
    cand_forms = candidate.forms if isinstance(candidate, GeneratorSet) else list(candidate)
    ref_forms = reference.forms if isinstance(reference, GeneratorSet) else list(reference)
    gb = buchberger([form_vector(w) for w in cand_forms], track_cofactors=True)
    rows = []
    for w in ref_forms:
        rem, cof = gb.normal_form(form_vector(w), track_cofactors=True)
        if not rem.is_zero():
            return GenerationResult(False, witness=w)
        rows.append(gb.cofactors_on_inputs(cof))
    return GenerationResult(True, certificates=rows)


def minimal_generators(gens: GeneratorSet, order=None) -> GeneratorSet:
    """Greedy pruning of an inter-reduced basis of the module.

    Candidates are the reduced Groebner basis elements; removal is attempted
    from the largest candidate down, so low-degree generators survive.  The
    result is irredundant: nothing in it lies in the span of the rest.
    """
    if not gens.forms:
        raise ZeroInput("empty generating set")
    gb = buchberger(gens.vectors(), order)
    kept = [vector_form(v) for v in gb.generators]
    for w in sorted(kept, key=lambda u: (u.total_degree(), format_one_form(u)),
                    reverse=True):
        if len(kept) == 1:
            break
        rest = [u for u in kept if u is not w]
        if membership(form_vector(w), [form_vector(u) for u in rest],
                      order).contained:
            kept = rest
    kept.sort(key=lambda u: (u.total_degree(), format_one_form(u)))
    return GeneratorSet("minimal", kept, gens.f)


@dataclass
class SaitoResult:
    free: bool
    constant: Optional[object]  # scalar c with w0 ^ winf = c * f dx^dy
    pair: Optional[tuple]

    def __bool__(self):
        return self.free


def saito_check(pair: Sequence[OneForm], f: Polynomial) -> SaitoResult:
    """Freeness test: the pair generates freely iff its wedge is a nonzero
    constant multiple of f."""
    if len(pair) != 2:
        raise ValueError("the freeness test takes exactly two forms")
    w0, winf = pair
    for w in (w0, winf):
        if not is_tangent(f, w):
            raise NotTangent(f"not tangent to the curve: {format_one_form(w)}")
    coeff = wedge(w0, winf).coeff
    if coeff.is_zero():
        return SaitoResult(False, None, None)
    gb = buchberger([f], track_cofactors=True)
    rem, cof = gb.normal_form(coeff, track_cofactors=True)
    if not rem.is_zero():
        return SaitoResult(False, None, None)
    quotient = gb.cofactors_on_inputs(cof)[0]
    if not quotient.is_constant():
        return SaitoResult(False, None, None)
    return SaitoResult(True, quotient.constant_value(), (w0, winf))


def quasihomogeneous_pair(g: Polynomial, weights: Weights):
    """For weighted-homogeneous g: the pair (dg, eta) with
    eta = (alpha1*x dy - alpha2*y dx)/deg; dg ^ eta = g dx^dy by Euler."""
    if g.is_zero():
        raise ZeroInput("zero polynomial")
    weights = Weights.of(*weights)
    if not g.is_homogeneous(weights):
        raise NotHomogeneous("g is not homogeneous for these weights")
    d = g.weighted_degree(weights)
    if d <= 0:
        raise ZeroInput("constant polynomial")
    fld = g.field
    a1, a2 = weights
    eta = OneForm(
        Polynomial.term(fld.from_rational(Rational(-a2, d)), (0, 1), fld),
        Polynomial.term(fld.from_rational(Rational(a1, d)), (1, 0), fld))
    dg = exterior_derivative(g)
    if wedge(dg, eta).coeff != g:
        raise InvariantViolation("Euler identity failed; weights are wrong")
    return dg, eta
