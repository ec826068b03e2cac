"""
The gap principle: if |ac| >= 9, |b| >= 3/2 |a|, |b| > 5 and |c| > |b|^15, any d extending {a, b, c} has
|d| < K |c|^50 with K = 4728^20. Hypotheses are checked on squared absolute values; the approximation theorem is
applied with a1 = b, a2 = a, T = abc.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

from ring import RingElem, abs_sq

from .certified import Enclosure, decide, exact, power, strictly_less
from .gap_constants import GAP_C_EXPONENT, K_BASES, K_EXPONENTS, K_PROOF_BASE, K_STATEMENT_BASE, LAMBDA_CEILING
from .gap_errors import PreconditionViolated
from .jz_theorem import GapReport, JzNorms, intervals, jz_quantities, l_exceeds_one

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GapPrincipleResult:
    bound: int
    k_base: int
    hypotheses: Dict[str, bool]
    certified: Dict[str, bool]
    jz: GapReport

    @property
    def lam(self) -> Enclosure:
        return self.jz.lam.enclosure

    @property
    def sound(self) -> bool:
        return all(self.certified.values())


@dataclass(frozen=True)
class ProofStep:
    name: str
    statement: str
    holds: bool
    detail: Optional[str] = None


def k_constant(k_base: int = K_PROOF_BASE) -> int:
    if k_base not in K_BASES:
        raise ValueError(f"k_base must be one of {K_BASES}, got {k_base}")
    return k_base**K_EXPONENTS


def gap_hypotheses(a: RingElem, b: RingElem, c: RingElem) -> Dict[str, bool]:
    n_a, n_b, n_c = abs_sq(a), abs_sq(b), abs_sq(c)
    return {
        "|ac| >= 9": n_a * n_c >= 81,
        "|b| >= 3/2 |a|": 4 * n_b >= 9 * n_a,
        "|b| > 5": n_b > 25,
        "|c| > |b|^15": n_c > n_b**15,
    }


def _lambda_inequality(ctx, n_a: int, n_b: int, n_ba: int, n_ac: int):
    # 210 |b|^3 |b - a|^3.8 |a|^0.8 against (|ac| - 1)^0.8
    lhs = 210 * power(ctx, ctx.mpf(n_b), Fraction(3, 2)) * power(ctx, ctx.mpf(n_ba), Fraction(19, 10))
    lhs = lhs * power(ctx, ctx.mpf(n_a), Fraction(2, 5))
    rhs = power(ctx, ctx.sqrt(n_ac) - 1, Fraction(4, 5))
    return strictly_less(lhs, rhs)


def gap_principle(a: RingElem, b: RingElem, c: RingElem, k_base: int = K_PROOF_BASE) -> GapPrincipleResult:
    k = k_constant(k_base)
    hypotheses = gap_hypotheses(a, b, c)
    failed = [name for name, ok in hypotheses.items() if not ok]
    if failed:
        raise PreconditionViolated(failed)

    n_a, n_b, n_c = abs_sq(a), abs_sq(b), abs_sq(c)
    jz = jz_quantities(b, a, a * b * c)
    norms = JzNorms(n1=n_b, n2=n_a, n12=abs_sq(b - a), nt=abs_sq(a * b * c))

    def lambda_bounds(ctx):
        values = intervals(ctx, norms)
        if "lambda" not in values:
            return None
        above_one = strictly_less(ctx.one, values["lambda"])
        below_ceiling = strictly_less(values["lambda"], exact(ctx, LAMBDA_CEILING))
        if above_one is None or below_ceiling is None:
            return None
        return above_one and below_ceiling

    certified = {
        "L > 1": l_exceeds_one(norms),
        "p <= sqrt(21/16)": norms.nt >= 81 * norms.m_sq,
        "l < 1/2": 25 * norms.nt > 1024 * norms.m_sq,
        "1 < lambda < 1.9": decide(lambda_bounds, "1 < lambda < 1.9"),
        "210|b|^3|b-a|^3.8|a|^0.8 < (|ac|-1)^0.8": decide(
            lambda ctx: _lambda_inequality(ctx, n_a, n_b, norms.n12, n_a * n_c), "lambda inequality"
        ),
    }
    for name, ok in certified.items():
        if not ok:
            logger.error(f"Gap principle step '{name}' failed for a={a}, b={b}, c={c}")

    bound = k * k * n_c**GAP_C_EXPONENT
    logger.info(f"Gap principle bound on abs_sq(d) has {bound.bit_length()} bits (K = {k_base}^{K_EXPONENTS})")
    return GapPrincipleResult(bound=bound, k_base=k_base, hypotheses=hypotheses, certified=certified, jz=jz)


def _sextic(ctx, t):
    # t^12 - 1058 t^7.6 - 1
    return ctx.mpf(t) ** 12 - 1058 * power(ctx, ctx.mpf(t), Fraction(38, 5)) - 1


def proof_constants() -> List[ProofStep]:
    """Certify the numerical steps used inside the gap-principle proof."""
    steps = []

    steps.append(
        ProofStep(
            name="lambda_coefficient",
            statement="210 (5/3)^3.8 (2/3)^0.8 < 1058",
            holds=decide(
                lambda ctx: strictly_less(
                    210 * power(ctx, exact(ctx, Fraction(5, 3)), Fraction(19, 5))
                    * power(ctx, exact(ctx, Fraction(2, 3)), Fraction(4, 5)),
                    ctx.mpf(1058),
                ),
                "210 (5/3)^3.8 (2/3)^0.8 < 1058",
            ),
        )
    )

    root_term = decide(lambda ctx: strictly_less(ctx.mpf(1058), power(ctx, ctx.mpf(5), Fraction(22, 5))), "5^4.4 > 1058")
    positive_at_five = decide(
        lambda ctx: strictly_less(
            ctx.one, power(ctx, ctx.mpf(5), Fraction(38, 5)) * (power(ctx, ctx.mpf(5), Fraction(22, 5)) - 1058)
        ),
        "5^7.6 (5^4.4 - 1058) > 1",
    )
    steps.append(
        ProofStep(
            name="sextic_positive_from_5",
            statement="t^12 - 1058 t^7.6 - 1 > 0 for t >= 5",
            holds=root_term and positive_at_five,
            detail="5^4.4 > 1058 and 5^7.6 (5^4.4 - 1058) > 1; t^7.6 (t^4.4 - 1058) - 1 is increasing for t >= 5",
        )
    )

    low, high = Fraction(4868, 1000), Fraction(4869, 1000)
    bracket = decide(
        lambda ctx: strictly_less(_sextic(ctx, exact(ctx, low)), ctx.zero), "f(4.868) < 0"
    ) and decide(lambda ctx: strictly_less(ctx.zero, _sextic(ctx, exact(ctx, high))), "f(4.869) > 0")
    steps.append(
        ProofStep(
            name="sextic_largest_root",
            statement="largest root of t^12 - 1058 t^7.6 - 1 lies in (4.868, 4.869)",
            holds=bracket,
        )
    )

    steps.append(
        ProofStep(
            name="k_statement_derivable",
            statement=f"504 sqrt(21) (2/3) (5/3)^2 < {K_STATEMENT_BASE} <= {K_PROOF_BASE}",
            holds=decide(
                lambda ctx: strictly_less(
                    504 * ctx.sqrt(21) * exact(ctx, Fraction(2, 3) * Fraction(5, 3) ** 2), ctx.mpf(K_STATEMENT_BASE)
                ),
                "504 sqrt(21) (2/3) (5/3)^2 < 4278",
            )
            and K_STATEMENT_BASE <= K_PROOF_BASE,
            detail="both constants are valid; the proof's 4728 is the looser one",
        )
    )

    # (t - 1) > (8/21)(2t + 3)  <=>  (21 - 16) t > 21 + 24
    threshold = Fraction(21 + 24, 21 - 16)
    steps.append(
        ProofStep(
            name="ac_reduction",
            statement="|ac| - 1 > (8/21)(2|ac| + 3) reduces to |ac| > 9",
            holds=threshold == 9,
            detail="equality at |ac| = 9; the following inequality is strict",
        )
    )

    coefficient = Fraction(128 * 21, 8)
    steps.append(
        ProofStep(
            name="lambda_coefficient_strengthening",
            statement="128 (21/8) = 336 and 336 / (27/16)^0.9 < 210",
            holds=coefficient == 336
            and decide(
                lambda ctx: strictly_less(
                    ctx.mpf(336) / power(ctx, exact(ctx, Fraction(27, 16)), Fraction(9, 10)), ctx.mpf(210)
                ),
                "336 / (27/16)^0.9 < 210",
            ),
        )
    )

    steps.append(
        ProofStep(
            name="l_threshold",
            statement="l < 1/2 needs |ac| > 32/5, implied by |ac| >= 9",
            holds=Fraction(32, 5) < 9,
        )
    )

    steps.append(
        ProofStep(
            name="c_lower_bound",
            statement="4 sqrt(21/16) = sqrt(21), so c >= 1 / (sqrt(21) P)",
            holds=16 * Fraction(21, 16) == 21,
        )
    )
    return steps
