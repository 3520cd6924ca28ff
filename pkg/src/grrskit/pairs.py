"""Supersymmetric pair descriptors and their root-level involutions.

A pair is written ``algebra:subalgebra``, for example::

    gl(3|2):gl(1|2)xgl(2|0)      gl(4|2):osp(4|2)
    osp(5|4):osp(1|2)xosp(4|2)   osp(4|2):gl(2|1)
    D(2,1;l=3):osp(2|2)xso(2)    F(1|3):gosp(2|4)   F(1|3):sl(1|4)
    F(1|3):D(1,2;2)              G(1|2):D(1,2;3)    G(1|2):osp(3|2)xsl(2)
    gl(2|2):p(2)

The root-level involution is recorded as a signed permutation of the named
coordinates; it is the h*-action listed for the pair, extended to all r, s.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import exact
from .catalog import FamilyError, build_family
from .grrs import Grrs


class PairError(ValueError):
    """Unknown or inconsistent pair identifier."""


@dataclass(frozen=True)
class PairDescriptor:
    text: str
    row: str
    family: str
    params: dict = field(default_factory=dict, hash=False, compare=False)
    delta: bool = False

    def __str__(self):
        return self.text + (" [delta]" if self.delta else "")

    def effective(self) -> dict:
        """Parameters with r, s folded to at most half, as the table assumes."""
        p = dict(self.params)
        if self.row in ("gl-gl",):
            p["r"] = min(p["r"], p["m"] - p["r"])
            p["s"] = min(p["s"], p["n"] - p["s"])
        elif self.row == "osp-osp":
            p["r"] = min(p["r"], p["M"] - p["r"])
            p["s"] = min(p["s"], p["n"] - p["s"])
        return p


_INT = r"(\d+)"


def _factors(text: str):
    """Split ``AxB`` into algebra tags with their sizes."""
    out = []
    for part in text.split("x"):
        part = part.strip()
        if (m := re.fullmatch(r"(gl|osp)\((\d+)[|,](\d+)\)", part)):
            out.append((m.group(1), int(m.group(2)), int(m.group(3))))
        elif (m := re.fullmatch(r"so\((\d+)\)", part)):
            out.append(("osp", int(m.group(1)), 0))
        elif (m := re.fullmatch(r"sp\((\d+)\)", part)):
            out.append(("osp", 0, int(m.group(1))))
        elif part in ("sl(2)", "sl2"):
            out.append(("sl2", 0, 0))
        else:
            raise PairError(f"cannot read subalgebra factor {part!r}")
    return out


def parse_pair(text: str, delta: bool = False) -> PairDescriptor:
    """Parse ``algebra:subalgebra`` into a :class:`PairDescriptor`."""
    s = text.replace(" ", "")
    if ":" not in s:
        raise PairError(f"pair {text!r} needs the form algebra:subalgebra")
    alg, sub = s.split(":", 1)

    if (m := re.fullmatch(r"gl\((\d+)\|(\d+)\)", alg)):
        M, N = int(m.group(1)), int(m.group(2))
        if (p := re.fullmatch(r"p\((\d+)\)", sub)):
            k = int(p.group(1))
            if not (M == N == k) or k < 1:
                raise PairError("p(n) sits inside gl(n|n)")
            return PairDescriptor(s, "p", f"gl({M}|{N})", {"n": k}, delta)
        if (o := re.fullmatch(r"osp\((\d+)\|(\d+)\)", sub)):
            if (int(o.group(1)), int(o.group(2))) != (M, N) or N % 2:
                raise PairError("gl(m|2n):osp(m|2n) needs matching sizes")
            return PairDescriptor(s, "gl-osp", f"gl({M}|{N})", {"m": M, "n": N // 2}, delta)
        fs = _factors(sub)
        if len(fs) != 2 or any(f[0] != "gl" for f in fs):
            raise PairError(f"unsupported subalgebra {sub!r} of {alg}")
        (_, r, s1), (_, r2, s2) = fs
        if r + r2 != M or s1 + s2 != N:
            raise PairError("factor sizes do not add up")
        return PairDescriptor(s, "gl-gl", f"gl({M}|{N})", {"m": M, "n": N, "r": r, "s": s1}, delta)

    if (m := re.fullmatch(r"osp\((\d+)\|(\d+)\)", alg)):
        M, N2 = int(m.group(1)), int(m.group(2))
        if N2 % 2:
            raise PairError("osp(m|2n) needs an even odd part")
        n = N2 // 2
        if (g := re.fullmatch(r"gl\((\d+)\|(\d+)\)", sub)):
            a, b = int(g.group(1)), int(g.group(2))
            if M % 2 or (a, b) != (M // 2, n):
                raise PairError("osp(2m|2n):gl(m|n) needs matching sizes")
            return PairDescriptor(s, "osp-gl", f"osp({M}|{N2})", {"m": a, "n": b}, delta)
        fs = _factors(sub)
        if len(fs) != 2 or any(f[0] != "osp" for f in fs):
            raise PairError(f"unsupported subalgebra {sub!r} of {alg}")
        (_, r, s1), (_, r2, s2) = fs
        if r + r2 != M or s1 + s2 != N2 or s1 % 2:
            raise PairError("factor sizes do not add up")
        return PairDescriptor(s, "osp-osp", f"osp({M}|{N2})",
                              {"M": M, "n": n, "r": r, "s": s1 // 2}, delta)

    if (m := re.fullmatch(r"D\((?:2,1;(?:l|lambda)=|1,2;)([+-]?\d+(?:/\d+)?)\)", alg)):
        lam = Fraction(m.group(1))
        if sub not in ("osp(2|2)xso(2)", "so(2)xosp(2|2)"):
            raise PairError(f"unsupported subalgebra {sub!r} of {alg}")
        return PairDescriptor(s, "D21", f"D(2,1;l={exact.fmt(lam)})", {"lam": lam}, delta)

    if alg in ("F(1|3)", "AB(1,3)"):
        rows = {"gosp(2|4)": "F-gosp", "sl(1|4)": "F-sl", "D(1,2;2)": "F-D",
                "D(2,1;l=2)": "F-D"}
        if sub not in rows:
            raise PairError(f"unsupported subalgebra {sub!r} of F(1|3)")
        return PairDescriptor(s, rows[sub], "AB(1,3)", {}, delta)

    if alg in ("G(1|2)", "G(1,2)", "G(3)"):
        rows = {"D(1,2;3)": "G-D", "D(2,1;l=3)": "G-D", "osp(3|2)xsl(2)": "G-osp",
                "osp(3|2)xsl2": "G-osp"}
        if sub not in rows:
            raise PairError(f"unsupported subalgebra {sub!r} of G(1|2)")
        return PairDescriptor(s, rows[sub], "G(1,2)", {}, delta)

    raise PairError(f"unknown pair {text!r}")


# -- root-level actions --------------------------------------------------------

def signed_permutation(names, images: dict):
    """Matrix on named coordinates sending ``name`` to ``sign * other``.

    ``images`` maps a name to ``(sign, target)``; unlisted names are fixed.
    """
    n = len(names)
    cols = []
    for nm in names:
        sign, tgt = images.get(nm, (1, nm))
        cols.append(exact.scale(sign, exact.unit_vector(n, names.index(tgt))))
    return exact.from_columns(cols)


def gl_swap_images(m, n, r, s):
    img = {}
    for i in range(1, min(r, m - r) + 1):
        img[f"e{i}"], img[f"e{m+1-i}"] = (1, f"e{m+1-i}"), (1, f"e{i}")
    for j in range(1, min(s, n - s) + 1):
        img[f"d{j}"], img[f"d{n+1-j}"] = (1, f"d{n+1-j}"), (1, f"d{j}")
    return img


def gl_osp_images(m, n):
    img = {f"e{i}": (-1, f"e{i}") for i in range(1, m + 1)}
    for i in range(1, 2 * n + 1):
        img[f"d{i}"] = (-1, f"d{2*n+1-i}")
    return img


def osp_osp_images(M, n, r, s):
    img = {f"e{i}": (-1, f"e{i}") for i in range(1, min(r, M - r) + 1)}
    for j in range(1, min(s, n - s) + 1):
        img[f"d{j}"], img[f"d{n+1-j}"] = (1, f"d{n+1-j}"), (1, f"d{j}")
    return img


def osp_gl_images(m, n):
    img = {f"d{i}": (-1, f"d{i}") for i in range(1, n + 1)}
    for i in range(1, m + 1):
        img[f"e{i}"] = (1, f"e{m+1-i}")
    return img


_EXCEPTIONAL = {
    "D21": {"e": (-1, "e"), "d": (-1, "d")},
    "F-gosp": {"e1": (-1, "e1"), "d": (-1, "d")},
    "F-sl": {"e1": (-1, "e1"), "e2": (-1, "e2"), "d": (-1, "d")},
    "F-D": {"e1": (-1, "e1"), "e2": (-1, "e2"), "e3": (-1, "e3")},
    "G-D": {"e1": (-1, "e1"), "e2": (-1, "e2")},
    "G-osp": {"e1": (-1, "e1"), "e2": (-1, "e2")},
}


def presentation_action(desc: PairDescriptor):
    """Signed-permutation images of the coordinates for a pair, or None for p(n)."""
    p = desc.params
    if desc.row == "gl-gl":
        return gl_swap_images(p["m"], p["n"], p["r"], p["s"])
    if desc.row == "gl-osp":
        return gl_osp_images(p["m"], p["n"])
    if desc.row == "osp-osp":
        return osp_osp_images(p["M"], p["n"], p["r"], p["s"])
    if desc.row == "osp-gl":
        return osp_gl_images(p["m"], p["n"])
    if desc.row in _EXCEPTIONAL:
        return _EXCEPTIONAL[desc.row]
    return None


def pair_grrs(desc: PairDescriptor) -> Grrs:
    try:
        return build_family(desc.family)
    except FamilyError as exc:
        raise PairError(str(exc)) from None


def v_matrix(g: Grrs, pmatrix) -> tuple:
    """A map given on presentation coordinates, written on V."""
    pres = g.presentation
    return exact.mat_mul(pres.lower, exact.mat_mul(pmatrix, pres.lift))


def table_actions(g: Grrs) -> list:
    """``(label, presentation matrix)`` for every table involution on ``g``'s family."""
    tag = g.meta.get("presentation_tag")
    names = g.presentation.names if g.presentation else ()
    out = []
    if not tag:
        return out
    if tag[0] == "gl":
        m, n = tag[1], tag[2]
        for r in range(m + 1):
            for s in range(n + 1):
                out.append((f"gl({m}|{n}):gl({r}|{s})xgl({m-r}|{n-s})",
                            gl_swap_images(m, n, r, s)))
        if n % 2 == 0 and n:
            out.append((f"gl({m}|{n}):osp({m}|{n})", gl_osp_images(m, n // 2)))
    elif tag[0] == "osp":
        M, n = tag[1], tag[2]
        for r in range(M + 1):
            for s in range(n + 1):
                out.append((f"osp({M}|{2*n}):osp({r}|{2*s})xosp({M-r}|{2*n-2*s})",
                            osp_osp_images(M, n, r, s)))
        if M % 2 == 0 and M:
            out.append((f"osp({M}|{2*n}):gl({M//2}|{n})", osp_gl_images(M // 2, n)))
    elif tag[0] == "D21":
        out.append(("D(2,1;l):osp(2|2)xso(2)", _EXCEPTIONAL["D21"]))
    elif tag[0] == "F13":
        for row, sub in (("F-gosp", "gosp(2|4)"), ("F-sl", "sl(1|4)"), ("F-D", "D(1,2;2)")):
            out.append((f"F(1|3):{sub}", _EXCEPTIONAL[row]))
    elif tag[0] == "G12":
        out.append(("G(1|2):D(1,2;3)", _EXCEPTIONAL["G-D"]))
    return [(label, signed_permutation(names, img)) for label, img in out]


def pair_automorphism(desc: PairDescriptor, g: Grrs | None = None):
    """The root-level involution of a pair as an automorphism of its GRRS."""
    from .autofix import make_automorphism

    images = presentation_action(desc)
    if images is None:
        raise PairError(f"{desc.text} has no root-level involution")
    g = g or pair_grrs(desc)
    pm = signed_permutation(g.presentation.names, images)
    return make_automorphism(g, v_matrix(g, pm), desc.text)
