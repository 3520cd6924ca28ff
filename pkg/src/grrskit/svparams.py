"""Deformation parameters (t, p, q, r, s) of a restricted root system with two real components."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import exact
from .exact import add, fmt, neg, scale, span_rank, sub
from .restrict import RestrictedRootSystem


class FrameMismatch(ValueError):
    """Orbit structure is not that of BC(m, n) with some orbits removed."""


class NotTwoComponent(FrameMismatch):
    pass


class NonUniformImaginarySdim(ValueError):
    pass


SHORT, MIDDLE, LONG, SLOT = "short", "middle", "long", "isotropic"


@dataclass
class SVParameters:
    t: Fraction
    p: Fraction
    q: Fraction
    r: Fraction
    s: Fraction
    ell: int
    middle: tuple
    multiplicity: dict
    classes: dict
    frame: tuple
    scale: Fraction
    middle_shape: tuple = ("BC", "BC")
    orbits: list = field(default_factory=list)
    split: int = 0
    frame_form: object = None
    frame_coords: dict = field(default_factory=dict)

    def as_tuple(self) -> tuple:
        return (self.t, self.p, self.q, self.r, self.s)

    def to_json(self) -> dict:
        return {"t": fmt(self.t), "p": fmt(self.p), "q": fmt(self.q), "r": fmt(self.r),
                "s": fmt(self.s), "ell": self.ell, "orbits": self.orbits}


def _names(g):
    return g.presentation.names if g.presentation else None


def _support(g, w) -> set:
    return {_names(g)[i][0] for i, x in enumerate(w) if x}


def _projector(form, basis):
    b = exact.from_columns(basis)
    gram = exact.mat_mul(exact.transpose(b), exact.mat_mul(form.gram, b))
    return exact.mat_mul(b, exact.mat_mul(exact.inverse(gram),
                                          exact.mat_mul(exact.transpose(b), form.gram)))


def _component_order(rrs, d) -> list:
    """Component 1 is the one reaching the earliest e-type coordinate."""
    g = rrs.grrs
    names = _names(g)
    if names is None:
        return [0, 1]
    big = len(names)

    def key(i):
        idx = set()
        for j in d.components[i]:
            w = g.present(rrs.to_v(rrs.real[j]))
            idx |= {k for k, x in enumerate(w) if x}
        e_idx = [k for k in idx if names[k][0] == "e"]
        return (min(e_idx, default=big), min(idx, default=big), i)

    return sorted(range(2), key=key)


@dataclass
class _FrameSpace:
    embed: object
    form: object
    PE: tuple
    PF: tuple
    dims: tuple


def _frame_space(rrs: RestrictedRootSystem, d) -> _FrameSpace:
    """Space holding the frame, with projections onto the two component sides.

    With U_0 = 0 the space is a* itself split as U_1 + U_2.  Otherwise the
    named coordinates are used: the side whose real roots only involve e-type
    coordinates takes those, and the other side takes the rest.
    """
    g = rrs.grrs
    order = _component_order(rrs, d)
    if not d.bases[0]:
        E, F = list(d.bases[1 + order[0]]), list(d.bases[1 + order[1]])
        return _FrameSpace(lambda c: tuple(c), rrs.form, _projector(rrs.form, E),
                           _projector(rrs.form, F), (len(E), len(F)))
    if _names(g) is None:
        raise FrameMismatch("nonzero U_0 and no named coordinates to split it")
    embed = lambda c: g.present(rrs.to_v(c))
    supports = [set().union(*(_support(g, embed(rrs.real[j])) for j in comp))
                for comp in d.components]
    if supports[order[0]] != {"e"} or "e" in supports[order[1]]:
        raise FrameMismatch("cannot tell the components apart by coordinate names")
    n = len(_names(g))
    mask_e = [1 if name[0] == "e" else 0 for name in _names(g)]
    PE = tuple(tuple(Fraction(int(i == j and mask_e[i])) for j in range(n)) for i in range(n))
    PF = tuple(tuple(Fraction(int(i == j and not mask_e[i])) for j in range(n)) for i in range(n))
    vecs = [embed(c) for c in rrs.roots]
    dims = (span_rank([exact.mat_vec(PE, v) for v in vecs]),
            span_rank([exact.mat_vec(PF, v) for v in vecs]))
    return _FrameSpace(embed, exact.SymmetricForm(g.presentation.gram), PE, PF, dims)


def _frame_vectors(form, parts, dim_needed):
    """Distinct +- classes of the given vectors; must be an orthogonal equal-norm basis."""
    reps = []
    for v in sorted(parts):
        if not any(v):
            continue
        if v in reps or neg(v) in reps:
            continue
        reps.append(max(v, neg(v)))
    if len(reps) != dim_needed or span_rank(reps) != dim_needed:
        raise FrameMismatch("slot projections do not form a basis")
    norms = {form(v, v) for v in reps}
    if len(norms) != 1 or any(form(a, b) for a in reps for b in reps if a != b):
        raise FrameMismatch("slot projections are not an orthogonal equal-length frame")
    return sorted(reps, reverse=True), norms.pop()


def _classify(frame_coords):
    nz = [(i, x) for i, x in enumerate(frame_coords) if x]
    if len(nz) == 1 and abs(nz[0][1]) == 1:
        return SHORT
    if len(nz) == 1 and abs(nz[0][1]) == 2:
        return LONG
    if len(nz) == 2 and all(abs(x) == 1 for _, x in nz):
        return MIDDLE
    raise FrameMismatch(f"root with frame coordinates {frame_coords} fits no orbit")


def sv_parameters(rrs: RestrictedRootSystem) -> SVParameters:
    """Read t from the restricted form and p, q, r, s from super-multiplicities."""
    d = rrs.decomposition
    if d.k != 2:
        raise NotTwoComponent(f"restricted real roots have {d.k} component(s), need 2")
    space = _frame_space(rrs, d)
    F_, PE, PF = space.form, space.PE, space.PF

    slots = []
    for c in rrs.imaginary:
        w = space.embed(c)
        if any(exact.mat_vec(PE, w)) and any(exact.mat_vec(PF, w)):
            slots.append(c)
    if not slots:
        raise FrameMismatch("no imaginary roots meet both components")
    sd = {rrs.entries[c].sdim for c in slots}
    if len(sd) != 1 or sd.pop() >= 0:
        raise NonUniformImaginarySdim("imaginary super-multiplicities are not a single -l")
    ell = -rrs.entries[slots[0]].sdim

    ef, cE = _frame_vectors(F_, [exact.mat_vec(PE, space.embed(c)) for c in slots], space.dims[0])
    ff, cF = _frame_vectors(F_, [exact.mat_vec(PF, space.embed(c)) for c in slots], space.dims[1])
    if not cE:
        raise FrameMismatch("component 1 frame is isotropic")
    t = cF / cE
    frame = ef + ff
    m = len(ef)

    mult, classes = {}, {}
    for c, e in rrs.entries.items():
        fc = exact.coordinates(frame, space.embed(c))
        if fc is None or any(x.denominator != 1 for x in fc):
            raise FrameMismatch(f"{rrs.label(c)} is not integral in the frame")
        a, b = fc[:m], fc[m:]
        if any(a) and any(b):
            if not (sum(1 for x in a if x) == 1 and sum(1 for x in b if x) == 1
                    and all(abs(x) == 1 for x in a + b if x)):
                raise FrameMismatch(f"{rrs.label(c)} mixes components outside the slot orbit")
            cls = (0, SLOT)
        elif any(a):
            cls = (1, _classify(a))
        else:
            cls = (2, _classify(b))
        classes[c] = cls
        mult[c] = Fraction(-e.sdim, ell)

    # orbit completeness and constancy of multiplicity
    sizes = {SHORT: lambda k: 2 * k, MIDDLE: lambda k: 2 * k * (k - 1), LONG: lambda k: 2 * k}
    values, shapes = {}, {}
    for comp, k in ((1, m), (2, len(ff))):
        shapes[comp] = "BC"
        for cls in (SHORT, MIDDLE, LONG):
            members = [c for c, v in classes.items() if v == (comp, cls)]
            if not members:
                values[(comp, cls)] = Fraction(0)
                continue
            ms = {mult[c] for c in members}
            if len(ms) != 1:
                raise FrameMismatch(f"multiplicity varies on the {cls} orbit of component {comp}")
            full = sizes[cls](k)
            if len(members) != full:
                if cls == MIDDLE and len(members) * 2 == full:
                    shapes[comp] = "A"
                else:
                    raise FrameMismatch(f"the {cls} orbit of component {comp} is only partly present")
            values[(comp, cls)] = ms.pop()
    slot_members = [c for c, v in classes.items() if v == (0, SLOT)]
    if len(slot_members) not in (2 * m * len(ff), 4 * m * len(ff)):
        raise FrameMismatch("isotropic orbit has the wrong size")

    orbits = []
    for key in sorted(values):
        comp, cls = key
        rep = min((c for c, v in classes.items() if v == key), default=None)
        orbits.append({"component": comp, "length_class": cls,
                       "representative": rrs.label(rep) if rep else None,
                       "multiplicity": fmt(values[key])})
    orbits.append({"component": 0, "length_class": SLOT,
                   "representative": rrs.label(min(slot_members)), "multiplicity": "1"})
    return SVParameters(t, values[(1, SHORT)], values[(1, LONG)], values[(2, SHORT)],
                        values[(2, LONG)], ell, (values[(1, MIDDLE)], values[(2, MIDDLE)]),
                        mult, classes, tuple(frame), cE, (shapes[1], shapes[2]), orbits,
                        m, space.form, {c: exact.coordinates(frame, space.embed(c)) for c in rrs.roots})


def check_deformed_axioms(rrs: RestrictedRootSystem, params: SVParameters) -> dict:
    """Axiom (4') for the undeformed form, isotropic multiplicity 1, Weyl invariance."""
    frame = params.frame
    out = {}
    k1 = params.split
    coords = params.frame_coords
    sign = [1] * k1 + [-1] * (len(frame) - k1)

    def b0(x, y):
        return sum((s * a * b for s, a, b in zip(sign, x, y)), Fraction(0))

    R = set(rrs.roots)
    ok = True
    for a in rrs.roots:
        if params.classes[a] != (0, SLOT):
            continue
        if b0(coords[a], coords[a]):
            ok = False
        for b in rrs.roots:
            if b in (a, neg(a)) or not b0(coords[a], coords[b]):
                continue
            if add(b, a) not in R and sub(b, a) not in R:
                ok = False
    out["axiom_4prime"] = ok
    out["isotropic_multiplicity_one"] = all(
        params.multiplicity[c] == 1 for c, v in params.classes.items() if v == (0, SLOT))
    weyl_ok = True
    seen = set()
    for c in rrs.roots:
        if c in seen:
            continue
        orb = rrs.weyl_orbit(c)
        seen |= orb
        if len({params.multiplicity[x] for x in orb if x in params.multiplicity}) > 1:
            weyl_ok = False
    out["weyl_invariant"] = weyl_ok
    mid1, mid2 = params.middle
    has1 = any(v == (1, MIDDLE) for v in params.classes.values())
    has2 = any(v == (2, MIDDLE) for v in params.classes.values())
    out["middle_1_is_t"] = (mid1 == params.t) if has1 else True
    out["middle_2_is_inverse_t"] = (mid2 == 1 / params.t) if has2 else True
    F = params.frame_form
    gram_ok = True
    for i, x in enumerate(frame):
        for j, y in enumerate(frame):
            want = 0 if i != j else params.scale * (1 if i < k1 else params.t)
            if F(x, y) != want:
                gram_ok = False
    out["form_is_B1_plus_tB2"] = gram_ok
    return out

