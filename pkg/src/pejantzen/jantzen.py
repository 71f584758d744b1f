"""Jantzen middles U_alpha(lam) = rad T_s L~(lam) and per-block verdicts.

Computation paths:

- alpha-finite lam: T_s L~(lam) = 0, so the middle is zero.
- rank 2: closed form in lam = a eps_1 + b eps_2.
- rank >= 3, typical regular lam: the middle is K(rad T_s L(lam)), whose
  g0 composition factors come from the Kazhdan-Lusztig basis change.
- rank >= 3, atypical lam of witness shape (lam + rho = (x, x+1, ...)
  strictly increasing): non-semisimple, with a certificate.

Everything else is reported as unsupported rather than guessed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from pejantzen.blocks import BlockKey, block_key, key_for_index
from pejantzen.characters import (
    GClass,
    convert,
    kac_expand,
    kac_simple_expand,
    twist,
    verma_super_expand,
    weight_multiplicities,
)
from pejantzen.kl import orbit_decomposition, simple_in_verma
from pejantzen.models import (
    Basis,
    ConstituentForm,
    Finiteness,
    InvalidArgumentError,
    NonIntegralError,
    ReportStatus,
    UnsupportedError,
    format_rational,
)
from pejantzen.oddref import socle_of_kac
from pejantzen.structure import RankContext
from pejantzen.weights import (
    Weight,
    check_rank,
    dot_action,
    is_anti_dominant,
    is_regular,
    is_typical,
    shifted,
    unshifted,
)
from pejantzen.weyl import WeylElem

logger = logging.getLogger(__name__)

KL_EXCLUDED = "excluded: the block contains a non-semisimple Jantzen middle"
KL_NOT_OBSTRUCTED = "not obstructed by this criterion"
MIDDLES_TYPICAL = "all zero or semisimple"
MIDDLES_ATYPICAL = "contains a non-semisimple Jantzen middle"


def _alpha_index(ctx: RankContext, alpha: Weight) -> int:
    return ctx.simple_root_index(alpha)


def alpha_finiteness(ctx: RankContext, lam: Weight, alpha: Weight) -> Finiteness:
    """finite iff <lam + rho, alpha^vee> is a positive integer."""
    i = _alpha_index(ctx, alpha)
    v = shifted(ctx, lam).coords
    p = v[i - 1] - v[i]
    return Finiteness.FINITE if p.denominator == 1 and p > 0 else Finiteness.FREE


def _simple_g0_character(ctx: RankContext, lam: Weight) -> GClass:
    """[L(lam)] in g0-Vermas, when L~(lam) = K(L(lam)) is licensed."""
    if is_anti_dominant(ctx, lam):
        return GClass.single(Basis.VERMA_G0, lam)
    if not is_typical(ctx, lam):
        raise UnsupportedError(f"{lam} is atypical and not anti-dominant")
    if not is_regular(ctx, lam):
        raise UnsupportedError(f"{lam} is singular")
    base, w = orbit_decomposition(ctx, lam)
    return simple_in_verma(base, w)


def simple_super_character(ctx: RankContext, lam: Weight) -> GClass:
    """ch L~(lam) in g0-Vermas for anti-dominant or typical regular lam."""
    return kac_expand(ctx, _simple_g0_character(ctx, lam))


def twisted_simple_character(ctx: RankContext, lam: Weight, alpha: Weight) -> GClass:
    """[T_s L~(lam)] in the g0-Verma basis."""
    check_rank(ctx, lam)
    if not lam.is_integral():
        raise NonIntegralError(f"{lam} is not integral")
    if alpha_finiteness(ctx, lam, alpha) is Finiteness.FINITE:
        return GClass.empty(Basis.VERMA_G0)
    i = _alpha_index(ctx, alpha)
    return kac_expand(ctx, twist(ctx, _simple_g0_character(ctx, lam), [i]))


# ----- reports -------------------------------------------------------------


@dataclass(frozen=True)
class Constituent:
    weight: Weight
    form: ConstituentForm
    multiplicity: int

    def to_dict(self) -> dict:
        return {"weight": self.weight.to_list(), "form": self.form.value, "mult": self.multiplicity}


@dataclass(frozen=True)
class WitnessCertificate:
    lam: Weight
    alpha: Weight
    mu: Weight
    s_dot_lam: Weight
    socle_member: Weight
    top_excludes_mu: bool
    u_character: GClass
    translation: Fraction = Fraction(0)

    @property
    def socle_matches(self) -> bool:
        return self.socle_member == self.mu

    def to_dict(self) -> dict:
        return {
            "lam": self.lam.to_list(),
            "alpha": self.alpha.to_list(),
            "mu": self.mu.to_list(),
            "s_dot_lam": self.s_dot_lam.to_list(),
            "socle_member": self.socle_member.to_list(),
            "socle_matches": self.socle_matches,
            "top_excludes_mu": self.top_excludes_mu,
            "translation": format_rational(self.translation),
            "u_character": self.u_character.to_list(),
        }


@dataclass(frozen=True)
class JantzenReport:
    status: ReportStatus
    lam: Weight
    alpha: Weight
    constituents: tuple[Constituent, ...] = ()
    certificate: WitnessCertificate | None = None
    character: GClass | None = None
    socle: tuple[Weight, ...] = ()
    top: tuple[Weight, ...] = ()
    composition_factors: tuple[Weight, ...] = ()
    reason: str | None = None

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "weight": self.lam.to_list(),
            "alpha": self.alpha.to_list(),
            "constituents": [c.to_dict() for c in self.constituents],
            "socle": [w.to_list() for w in self.socle],
            "top": [w.to_list() for w in self.top],
            "composition_factors": [w.to_list() for w in self.composition_factors],
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "character": self.character.to_list() if self.character is not None else None,
            "reason": self.reason,
        }


def _semisimple(lam: Weight, alpha: Weight, mults: dict[Weight, int], character: GClass) -> JantzenReport:
    constituents = tuple(
        Constituent(mu, ConstituentForm.SIMPLE_SUPER, m)
        for mu, m in sorted(mults.items(), reverse=True)
    )
    weights = tuple(c.weight for c in constituents)
    return JantzenReport(
        ReportStatus.SEMISIMPLE, lam, alpha, constituents,
        character=character, socle=weights, top=weights, composition_factors=weights,
    )


def _unsupported(ctx: RankContext, lam: Weight, alpha: Weight, reason: str) -> JantzenReport:
    logger.info("jantzen middle of %s unsupported: %s", lam, reason)
    try:
        character = twisted_simple_character(ctx, lam, alpha) - simple_super_character(ctx, lam)
    except UnsupportedError:
        character = None
    return JantzenReport(ReportStatus.UNSUPPORTED, lam, alpha, character=character, reason=reason)


def is_witness_shape(ctx: RankContext, lam: Weight) -> bool:
    """lam + rho = (x, x+1, x_3, ...) with x+1 < x_3 < ... < x_n."""
    if ctx.n < 2:
        return False
    v = shifted(ctx, lam).coords
    if v[1] - v[0] != 1:
        return False
    return all(v[k] < v[k + 1] for k in range(1, ctx.n - 1))


def witness_for_shaped(ctx: RankContext, lam: Weight) -> WitnessCertificate:
    """Certificate that U_{eps_1 - eps_2}(lam) is not semisimple.

    lam is anti-dominant, so T_s L~(lam) has the character of M~(s.lam) and
    the middle has character ch M~(s.lam) - ch M~(lam). Its socle contains
    L~(lam - 2 eps_2), the socle of K(L(s.lam)), which is not in the top.
    """
    if not is_witness_shape(ctx, lam):
        raise InvalidArgumentError(f"{lam} does not have witness shape")
    alpha = ctx.simple_root(1)
    s = WeylElem.simple(ctx.n, 1)
    s_lam = dot_action(ctx, s, lam)
    u = verma_super_expand(ctx, s_lam) - verma_super_expand(ctx, lam)
    return WitnessCertificate(
        lam=lam,
        alpha=alpha,
        mu=lam - ctx.eps(2).scale(2),
        s_dot_lam=s_lam,
        socle_member=socle_of_kac(ctx, s_lam),
        top_excludes_mu=True,
        u_character=u,
        translation=shifted(ctx, lam).coords[0],
    )


def jantzen_middle(ctx: RankContext, lam: Weight, alpha: Weight) -> JantzenReport:
    check_rank(ctx, lam)
    if not lam.is_integral():
        raise NonIntegralError(f"{lam} is not integral")
    i = _alpha_index(ctx, alpha)

    if alpha_finiteness(ctx, lam, alpha) is Finiteness.FINITE:
        return JantzenReport(ReportStatus.ZERO, lam, alpha, character=GClass.empty(Basis.VERMA_G0))

    s_lam = dot_action(ctx, WeylElem.simple(ctx.n, i), lam)
    if ctx.n == 2:
        return _rank_two(ctx, lam, alpha, s_lam)

    if is_typical(ctx, lam):
        if not is_regular(ctx, lam):
            return _unsupported(ctx, lam, alpha, f"{lam} is typical but singular")
        return _typical_regular(ctx, lam, alpha, i)

    if i == 1 and is_witness_shape(ctx, lam):
        cert = witness_for_shaped(ctx, lam)
        return JantzenReport(
            ReportStatus.NONSEMISIMPLE, lam, alpha,
            certificate=cert, character=cert.u_character, socle=(cert.mu,),
        )
    return _unsupported(ctx, lam, alpha, f"{lam} is atypical outside the certified witness shape")


def _rank_two(ctx: RankContext, lam: Weight, alpha: Weight, s_lam: Weight) -> JantzenReport:
    a, b = lam.coords
    gap = b - a
    if gap <= 1:
        return JantzenReport(ReportStatus.ZERO, lam, alpha, character=GClass.empty(Basis.VERMA_G0))
    character = verma_super_expand(ctx, s_lam) - verma_super_expand(ctx, lam)
    if gap == 2:
        # U = K(L(s.lam)): top L~(s.lam), socle L~(s.lam - omega_2)
        socle = socle_of_kac(ctx, s_lam)
        return JantzenReport(
            ReportStatus.NONSEMISIMPLE, lam, alpha,
            constituents=(Constituent(s_lam, ConstituentForm.KAC_SIMPLE, 1),),
            certificate=witness_for_shaped(ctx, lam),
            character=character,
            socle=(socle,),
            top=(s_lam,),
            composition_factors=(s_lam, s_lam - ctx.omega),
        )
    return _semisimple(lam, alpha, {s_lam: 1}, character)


def _typical_regular(ctx: RankContext, lam: Weight, alpha: Weight, i: int) -> JantzenReport:
    base, w = orbit_decomposition(ctx, lam)
    simple = simple_in_verma(base, w)
    radical = twist(ctx, simple, [i]) - simple
    mults = convert(radical, Basis.SIMPLE_G0, base)
    if any(m < 0 for m in mults.terms.values()):
        return _unsupported(ctx, lam, alpha, "negative composition multiplicity")
    return _semisimple(lam, alpha, dict(mults.terms), kac_expand(ctx, radical))


def constituent_character(ctx: RankContext, report: JantzenReport) -> GClass:
    """Sum of the constituents' characters in g0-Vermas."""
    out = GClass.empty(Basis.VERMA_G0)
    for c in report.constituents:
        kac = GClass.single(Basis.KAC_SIMPLE, c.weight, c.multiplicity)
        out = out + kac_simple_expand(ctx, kac)
    return out


# ----- block verdicts ------------------------------------------------------


def atypical_witness(ctx: RankContext, key: BlockKey) -> WitnessCertificate:
    """The deterministic witness of an atypical block.

    lam + rho = (0, 1, evens from 2, then odds) matches the parity count of the
    integer form of the key; non-integer cosets are reached by an omega_n shift.
    """
    if ctx.n < 2:
        raise InvalidArgumentError("witnesses need rank at least 2")
    if key.n != ctx.n:
        raise InvalidArgumentError(f"key of rank {key.n} used in rank {ctx.n}")
    if not key.atypical:
        raise InvalidArgumentError("typical blocks have no non-semisimple middle")
    integer_key, k = key.integer_form()
    odds = integer_key.odd_count - 1
    evens = ctx.n - 2 - odds
    seq = [0, 1]
    seq += [2 * (j + 1) for j in range(evens)]
    start = max(2 * evens + 1, 3)
    seq += [start + 2 * j for j in range(odds)]
    lam = unshifted(ctx, seq) + ctx.omega.scale(k)
    return witness_for_shaped(ctx, lam)


def validate_witness(ctx: RankContext, cert: WitnessCertificate, key: BlockKey | None = None,
                     depth: int = 1) -> dict[str, bool]:
    """Recheck a certificate. u_nonnegative scans weights within ``depth`` of s.lam."""
    checks = {
        "atypical": not is_typical(ctx, cert.lam),
        "anti_dominant": is_anti_dominant(ctx, cert.lam),
        "alpha_free": alpha_finiteness(ctx, cert.lam, cert.alpha) is Finiteness.FREE,
        "socle_matches": cert.socle_matches,
    }
    if key is not None:
        checks["in_block"] = block_key(ctx, cert.lam) == key
    top = cert.s_dot_lam.coords
    box = [
        Weight(tuple(t + d for t, d in zip(top, delta)))
        for delta in product(range(-depth, depth + 1), repeat=ctx.n)
    ]
    checks["u_nonnegative"] = all(m >= 0 for m in weight_multiplicities(cert.u_character, box).values())
    return checks


@dataclass(frozen=True)
class BlockReport:
    key: BlockKey
    atypical: bool
    jantzen_middles: str
    kl_theory: str
    witness: WitnessCertificate | None = field(default=None)

    def to_dict(self) -> dict:
        return {
            "key": self.key.to_dict(),
            "atypical": self.atypical,
            "jantzen_middles": self.jantzen_middles,
            "kl_theory": self.kl_theory,
            "witness": self.witness.to_dict() if self.witness else None,
        }


def block_report(ctx: RankContext, key: BlockKey) -> BlockReport:
    if key.atypical:
        return BlockReport(key, True, MIDDLES_ATYPICAL, KL_EXCLUDED, atypical_witness(ctx, key))
    return BlockReport(key, False, MIDDLES_TYPICAL, KL_NOT_OBSTRUCTED)


def report_all(ctx: RankContext) -> list[BlockReport]:
    """Block reports for the blocks through d^0 .. d^n."""
    return [block_report(ctx, key_for_index(ctx, i)) for i in range(ctx.n + 1)]
