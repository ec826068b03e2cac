"""
Quantities of the simultaneous-approximation theorem for theta_i = sqrt(1 + a_i / T) over an imaginary quadratic field.

With M = max(|a1|, |a2|):
    L = 27 (|T| - M)^2 / (16 |a1|^2 |a2|^2 |a1 - a2|^2)
    P = 16 |a1|^2 |a2|^2 |a1 - a2|^2 (2|T| + 3M) / min(|a1|, |a2|, |a1 - a2|)^3
    l = 27 |T| / (64 (|T| - M)),  p = sqrt((2|T| + 3M) / (2|T| - 2M))
    lambda = 1 + log P / log L,  1/c = 4 p P max(1, 2l)^(lambda - 1)
The theorem needs L > 1, which is decided exactly; the rest is reported as a sympy expression and a certified
enclosure.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from sympy import Rational
from sympy import sqrt as exact_sqrt

from ring import RingElem, abs_sq

from .certified import Enclosure, enclose, exact
from .gap_errors import DegenerateInput, TheoremInapplicable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JzNorms:
    n1: int
    n2: int
    n12: int
    nt: int

    @property
    def m_sq(self) -> int:
        return max(self.n1, self.n2)

    @property
    def min_sq(self) -> int:
        return min(self.n1, self.n2, self.n12)

    @property
    def product(self) -> int:
        return self.n1 * self.n2 * self.n12


@dataclass(frozen=True)
class Quantity:
    exact: Optional[str]
    enclosure: Enclosure


@dataclass(frozen=True)
class GapReport:
    a1: RingElem
    a2: RingElem
    T: RingElem
    m_sq: int
    L: Quantity
    P: Quantity
    l: Quantity  # noqa: E741
    p: Quantity
    lam: Optional[Quantity]
    c_const: Optional[Quantity]
    preconds_ok: Dict[str, bool]

    @property
    def applicable(self) -> bool:
        return all(self.preconds_ok.values())


def intervals(ctx, norms: JzNorms) -> Dict[str, object]:
    """Interval values of L, P, l, p, lambda and c for one precision."""
    t = ctx.sqrt(norms.nt)
    m = ctx.sqrt(norms.m_sq)
    L = 27 * (t - m) ** 2 / exact(ctx, 16 * norms.product)
    P = 16 * exact(ctx, norms.product) * (2 * t + 3 * m) / ctx.sqrt(norms.min_sq) ** 3
    l = 27 * t / (64 * (t - m))  # noqa: E741
    p = ctx.sqrt((2 * t + 3 * m) / (2 * t - 2 * m))
    values = {"L": L, "P": P, "l": l, "p": p}
    if (L > 1) is True:
        lam = 1 + ctx.log(P) / ctx.log(L)
        two_l = 2 * l
        low = ctx.one if (two_l.a < 1) is True else two_l.a
        high = ctx.one if (two_l.b < 1) is True else two_l.b
        values["lambda"] = lam
        values["c"] = 1 / (4 * p * P * ctx.exp((lam - 1) * ctx.log(ctx.mpf([low, high]))))
    return values


def l_exceeds_one(norms: JzNorms) -> bool:
    """L > 1, i.e. sqrt(N(T)) > M + sqrt(Q) with Q = 16 N1 N2 N12 / 27, decided by squaring twice."""
    q = Fraction(16 * norms.product, 27)
    rest = norms.nt - norms.m_sq - q
    return rest > 0 and rest * rest > 4 * norms.m_sq * q


def _exact_forms(norms: JzNorms) -> Dict[str, str]:
    t, m = exact_sqrt(norms.nt), exact_sqrt(norms.m_sq)
    return {
        "L": str(Rational(27, 16 * norms.product) * (t - m) ** 2),
        "P": str(16 * norms.product * (2 * t + 3 * m) / exact_sqrt(norms.min_sq) ** 3),
        "l": str(Rational(27, 64) * t / (t - m)),
        "p": str(exact_sqrt((2 * t + 3 * m) / (2 * t - 2 * m))),
    }


def jz_quantities(a1: RingElem, a2: RingElem, T: RingElem, strict: bool = True) -> GapReport:
    if a1 == a2:
        raise DegenerateInput("a1 and a2 must be distinct")
    if not a1 or not a2:
        raise DegenerateInput("a1 and a2 must be nonzero")
    norms = JzNorms(n1=abs_sq(a1), n2=abs_sq(a2), n12=abs_sq(a1 - a2), nt=abs_sq(T))
    if norms.nt <= norms.m_sq:
        raise DegenerateInput(f"|T| must exceed M: N(T) = {norms.nt}, M^2 = {norms.m_sq}")

    applicable = l_exceeds_one(norms)
    forms = _exact_forms(norms)
    quantities = {}
    for name in ("L", "P", "l", "p", "lambda", "c"):
        if name in ("lambda", "c") and not applicable:
            quantities[name] = None
            continue
        enclosure = enclose(lambda ctx, name=name: intervals(ctx, norms).get(name), name)
        quantities[name] = Quantity(exact=forms.get(name), enclosure=enclosure)

    report = GapReport(
        a1=a1,
        a2=a2,
        T=T,
        m_sq=norms.m_sq,
        L=quantities["L"],
        P=quantities["P"],
        l=quantities["l"],
        p=quantities["p"],
        lam=quantities["lambda"],
        c_const=quantities["c"],
        preconds_ok={"a1 != a2": True, "|T| > M": True, "L > 1": applicable},
    )
    logger.debug(f"JZ quantities for N1={norms.n1}, N2={norms.n2}, N(T)={norms.nt}: L = {report.L.enclosure}")
    if strict and not applicable:
        raise TheoremInapplicable("L <= 1", report)
    return report
