"""Symbolic classes of character-graded vector bundles.

The ring here is polynomial over the cobordism coefficients in variables
a[i, g], one family per nontrivial character g, with a[i, g] of degree
-i.  A split bundle with trivial-action base contributes the product over
its summands of sum_i c_1(L)^i a[i, g]; pushing forward to the point
multiplies Chow monomials by projective-space classes, since h^j on P^n
pushes to the class of P^(n-j).  Characters are abstract index vectors:
nothing here consults roots of unity, only which characters are trivial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import fgl
from .geometry import Proj, evaluate
from .lazard import CobordismClass, in_landweber_ideal, reduce_mod_landweber
from .series import BPoly, TruncSeries, DEFAULT_TRUNCATION

Character = tuple


def char_label(g: Character) -> str:
    return ",".join(str(x) for x in g)


def char_from_label(s: str) -> Character:
    return tuple(int(x) for x in s.split(","))


def is_trivial(g: Character) -> bool:
    return not any(g)


class MPoly:
    """Polynomial in the a[i, g] with coefficients in Z[b].

    ``kind`` distinguishes the raw a-variables from the pushforward
    generators p[i, g] used for the change of basis; the two kinds never
    mix in one polynomial.
    """

    __slots__ = ("terms", "kind", "trunc")

    def __init__(self, terms=None, kind="a", trunc=DEFAULT_TRUNCATION):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                key = tuple(sorted(tuple(v) for v in key))
                if coeff.is_zero():
                    continue
                if key in clean:
                    coeff = clean[key] + coeff
                    if coeff.is_zero():
                        del clean[key]
                        continue
                clean[key] = coeff
        self.terms = clean
        self.kind = kind
        self.trunc = trunc

    @classmethod
    def zero(cls, kind="a", trunc=DEFAULT_TRUNCATION):
        return cls({}, kind, trunc)

    @classmethod
    def unit(cls, kind="a", trunc=DEFAULT_TRUNCATION):
        return cls({(): BPoly.one(trunc=trunc)}, kind, trunc)

    @classmethod
    def variable(cls, i: int, g: Character, kind="a", trunc=DEFAULT_TRUNCATION):
        return cls({((i, tuple(g)),): BPoly.one(trunc=trunc)}, kind, trunc)

    def _check(self, other):
        if self.kind != other.kind or self.trunc != other.trunc:
            raise ValueError("mixing incompatible bundle polynomials")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            acc = out.get(k)
            acc = v if acc is None else acc + v
            if acc.is_zero():
                out.pop(k, None)
            else:
                out[k] = acc
        return MPoly(out, self.kind, self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return MPoly({k: -v for k, v in self.terms.items()}, self.kind, self.trunc)

    def __mul__(self, other):
        if isinstance(other, (int, BPoly)):
            if isinstance(other, int):
                other = BPoly.const(other, trunc=self.trunc)
            return MPoly(
                {k: v * other for k, v in self.terms.items()}, self.kind, self.trunc
            )
        self._check(other)
        out = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                key = tuple(sorted(ka + kb))
                prod = va * vb
                if prod.is_zero():
                    continue
                acc = out.get(key)
                acc = prod if acc is None else acc + prod
                if acc.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = acc
        return MPoly(out, self.kind, self.trunc)

    __rmul__ = __mul__

    def coeff(self, key) -> BPoly:
        key = tuple(sorted(tuple(v) for v in key))
        return self.terms.get(key, BPoly.zero(trunc=self.trunc))

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_degree(self):
        """Degree when homogeneous: -(sum of a-indices + coefficient weight)."""
        degs = set()
        for key, coeff in self.terms.items():
            base = sum(i for i, _ in key)
            for w in coeff.weights():
                degs.add(-(base + w))
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.kind == other.kind and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms)[:6]:
            mono = "*".join(f"{self.kind}[{i},{char_label(g)}]" for i, g in key)
            bits.append(f"({self.terms[key]})*{mono}" if mono else f"({self.terms[key]})")
        tail = " + ..." if len(self.terms) > 6 else ""
        return " + ".join(bits) + tail

    def to_obj(self):
        out = []
        for key in sorted(self.terms):
            out.append(
                {
                    self.kind: [[i, char_label(g)] for i, g in key],
                    "coeff": self.terms[key].to_obj(),
                }
            )
        return {"kind": self.kind, "terms": out}


@dataclass(frozen=True)
class SplitBundleDescriptor:
    """A sum of line bundles L_j tensor (character g_j) over a product of
    projective spaces; every character must be nontrivial."""

    base: tuple
    summands: tuple

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(
            self,
            "summands",
            tuple((tuple(k), tuple(g)) for k, g in self.summands),
        )
        for k, g in self.summands:
            if len(k) != len(self.base):
                raise ValueError("multidegree length must match the base")
            if is_trivial(g):
                raise ValueError("summands must carry nontrivial characters")


class ChowMPoly:
    """Intermediate: a-polynomial with coefficients in the base's Chow ring."""

    __slots__ = ("terms", "base", "trunc")

    def __init__(self, terms, base, trunc):
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}
        self.base = base
        self.trunc = trunc

    def __mul__(self, other):
        if self.base != other.base:
            raise ValueError("different bases")
        out = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                key = tuple(sorted(ka + kb))
                prod = va * vb
                if prod.is_zero():
                    continue
                acc = out.get(key)
                acc = prod if acc is None else acc + prod
                out[key] = acc
        return ChowMPoly(out, self.base, self.trunc)

    def __eq__(self, other):
        return (
            isinstance(other, ChowMPoly)
            and self.base == other.base
            and self.terms == other.terms
        )


def q_class(E: SplitBundleDescriptor, trunc: int = DEFAULT_TRUNCATION) -> ChowMPoly:
    """Multiplicative class of the bundle in the Chow ring of its base."""
    caps = E.base
    names = tuple(f"h{i}" for i in range(len(caps)))
    chow_zero = TruncSeries.zero(names, caps, sum(caps), trunc=trunc)
    unit = ChowMPoly({(): chow_zero.constant(1)}, E.base, trunc)
    result = unit
    for multidegree, g in E.summands:
        c1 = chow_zero.constant(0)
        for j, k in enumerate(multidegree):
            if k:
                var = TruncSeries.variable(
                    names[j], names, caps, sum(caps), trunc=trunc
                )
                c1 = c1 + var * k
        terms = {}
        power = chow_zero.constant(1)
        i = 0
        while True:
            if not power.is_zero():
                terms[((i, g),)] = power
            else:
                break
            i += 1
            if i > sum(caps):
                break
            power = power * c1
        result = result * ChowMPoly(terms, E.base, trunc)
    return result


@lru_cache(maxsize=None)
def _point_class(j: int, trunc: int) -> BPoly:
    return evaluate(Proj(j), trunc).image


def push_class(E: SplitBundleDescriptor, trunc: int = DEFAULT_TRUNCATION) -> MPoly:
    """Pushforward of the bundle class to the point.

    Pairing a Chow monomial h^e against the base pushes it to the product
    of the classes of P^(n_j - e_j).
    """
    q = q_class(E, trunc)
    out = MPoly.zero("a", trunc)
    for key, chow in q.terms.items():
        contrib = BPoly.zero(trunc=trunc)
        for exps, coeff in chow.coeffs.items():
            factor = coeff
            for nj, ej in zip(E.base, exps):
                factor = factor * _point_class(nj - ej, trunc)
            contrib = contrib + factor
        if not contrib.is_zero():
            out = out + MPoly({key: contrib}, "a", trunc)
    return out


def push_generator(i: int, g: Character, trunc: int = DEFAULT_TRUNCATION) -> MPoly:
    """p[i, g]: the pushforward of O(1) tensor (character g) over P^i."""
    E = SplitBundleDescriptor((i,), (((1,), tuple(g)),))
    return push_class(E, trunc)


# -- the a <-> p change of basis -----------------------------------------


def _a_in_p_single(i: int, g: Character, trunc: int) -> MPoly:
    """a[i, g] written as a polynomial in the p[j, g] (kind 'p')."""
    g = tuple(g)
    result = MPoly.variable(i, g, "p", trunc)
    for j in range(1, i + 1):
        sub = _a_in_p_single(i - j, g, trunc)
        result = result - sub * _point_class(j, trunc)
    return result


@lru_cache(maxsize=None)
def a_in_p(i: int, g: Character, trunc: int = DEFAULT_TRUNCATION) -> MPoly:
    return _a_in_p_single(i, tuple(g), trunc)


def p_to_a(poly: MPoly, trunc: int = DEFAULT_TRUNCATION) -> MPoly:
    """Expand a polynomial in the p[i, g] back into the a-variables."""
    if poly.kind != "p":
        raise ValueError("expected a polynomial in the pushforward generators")
    out = MPoly.zero("a", trunc)
    for key, coeff in poly.terms.items():
        term = MPoly.unit("a", trunc) * coeff
        for (i, g) in key:
            term = term * push_generator(i, g, trunc)
        out = out + term
    return out


# -- desk verification of the quotient model ------------------------------


@dataclass
class PresentationReport:
    entries: list

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.entries)

    def __bool__(self):
        return self.ok

    def to_obj(self):
        return {
            "ok": self.ok,
            "checks": [
                {"name": name, "ok": ok, "detail": detail}
                for name, ok, detail in self.entries
            ],
        }


def verify_presentation(
    p: int, cases, trunc: int = DEFAULT_TRUNCATION
) -> PresentationReport:
    """Leading-term identities for multiplication by prime powers.

    For each case (a, n) with q = p^a: modulo the n-th Landweber ideal,
    the series [q](t) starts v_n^((q^n-1)/(p^n-1)) t^(q^n), so all lower
    coefficients reduce to zero and the t^(q^n) coefficient reduces to
    the stated power of v_n.  Also checks u_m membership below v_n.
    """
    ctx = fgl.context(trunc)
    entries = []
    for (a, n) in cases:
        q = p ** a
        qn = q ** n
        label = f"q={q},n={n}"
        if qn - 1 > trunc:
            entries.append(
                (label, False, f"t^{qn} coefficient has weight beyond {trunc}")
            )
            continue
        series = ctx.n_series(q)
        low_ok = True
        for k in range(1, qn):
            coeff = series.coeff((k,))
            red = reduce_mod_landweber(CobordismClass(coeff), p, n)
            if not red.is_zero():
                low_ok = False
                break
        entries.append((f"{label}: vanishing below t^{qn}", low_ok, ""))
        lead = reduce_mod_landweber(CobordismClass(series.coeff((qn,))), p, n)
        e = (qn - 1) // (p ** n - 1)
        expected = reduce_mod_landweber(CobordismClass(ctx.v(p, n) ** e), p, n)
        entries.append(
            (
                f"{label}: t^{qn} coefficient is v_{n}^{e}",
                lead == expected,
                "",
            )
        )
        mem_ok = all(
            in_landweber_ideal(CobordismClass(u_m), p, n)
            for u_m in ctx.landweber_coeffs(p)[: p ** n - 1]
        )
        entries.append((f"{label}: u_m membership below v_{n}", mem_ok, ""))
    return PresentationReport(entries)
