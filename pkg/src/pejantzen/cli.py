"""CLI entry point for pejantzen.

All pejantzen.* imports are lazy (inside functions) so that
``pejantzen --help`` and argument parsing stay fast.

Commands:
    pejantzen weight typical|dominance|dot|hat|leq
    pejantzen weyl kl|bruhat
    pejantzen char super-expand|simple-expand|mult
    pejantzen block classify|same|census
    pejantzen oddref trace|socle-kac
    pejantzen jantzen middle|witness|report

Every command takes ``--n RANK``. Weights are comma-separated exact
rationals (``-2,0,2`` or ``1/2,1/2``); words are comma-separated simple
reflection indices (empty for the identity); ``--alpha i`` names the simple
root eps_i - eps_{i+1}.

Exit codes: 0 success, 1 invalid input, 2 valid input outside the
supported scope (body ``{"unsupported": reason}``).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

FORMAT_ENV = "PEJANTZEN_FORMAT"
FORMAT_CHOICES = ("json", "table")

# Options whose values may start with "-" (negative weights).
_VALUE_OPTIONS = ("--weight", "--other", "--at")

# (command, action) pairs that touch the Kazhdan-Lusztig memo.
_KL_ACTIONS = {
    ("weyl", "kl"),
    ("char", "simple-expand"),
    ("char", "mult"),
    ("jantzen", "middle"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


class _Unsupported(Exception):
    def __init__(self, reason: str, body: dict | None = None) -> None:
        super().__init__(reason)
        self.reason = reason
        self.body = body


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--weight -1,2`` as ``--weight=-1,2`` so argparse accepts it."""
    out: list[str] = []
    k = 0
    while k < len(argv):
        tok = argv[k]
        if tok in _VALUE_OPTIONS and k + 1 < len(argv) and argv[k + 1].startswith("-") \
                and argv[k + 1][1:2] not in ("", "-") and not argv[k + 1][1:2].isalpha():
            out.append(f"{tok}={argv[k + 1]}")
            k += 2
            continue
        out.append(tok)
        k += 1
    return out


def _output_format(args: argparse.Namespace) -> str:
    if getattr(args, "format", None):
        return args.format
    env = os.environ.get(FORMAT_ENV, "")
    if env in FORMAT_CHOICES:
        return env
    from pejantzen.settings import load_settings

    return load_settings()["output_format"]


def _json_out(obj) -> None:
    """Print JSON to stdout."""
    json.dump(obj, sys.stdout, indent=2)
    print()


def _table_out(obj) -> None:
    """Print TSV: a header of keys, then one record per line."""
    records = obj if isinstance(obj, list) else [obj]
    if not records:
        return
    if not all(isinstance(r, dict) for r in records):
        records = [{"value": r} for r in records]
    keys = list(records[0].keys())
    print("\t".join(keys))
    for rec in records:
        cells = []
        for key in keys:
            value = rec.get(key)
            cells.append(value if isinstance(value, str) else json.dumps(value, separators=(",", ":")))
        print("\t".join(cells))


def _emit(args: argparse.Namespace, obj) -> None:
    if _output_format(args) == "table":
        _table_out(obj)
    else:
        _json_out(obj)


def _context(args: argparse.Namespace):
    from pejantzen.structure import make_context

    return make_context(args.n)


def _weight(args: argparse.Namespace, attr: str = "weight"):
    from pejantzen.models import InvalidArgumentError
    from pejantzen.weights import Weight

    text = getattr(args, attr, None)
    if text is None:
        raise InvalidArgumentError(f"--{attr} is required")
    return Weight.parse(text, args.n)


def _word(text: str | None) -> list[int]:
    from pejantzen.models import InvalidArgumentError

    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise InvalidArgumentError(f"not a word of simple reflection indices: {text!r}") from exc


def _alpha(args: argparse.Namespace, ctx):
    return ctx.simple_root(args.alpha)


# ----- weight --------------------------------------------------------------


def cmd_weight_typical(args: argparse.Namespace) -> None:
    from pejantzen.weights import typicality

    ctx = _context(args)
    lam = _weight(args)
    _emit(args, {"weight": lam.to_list(), **typicality(ctx, lam).to_dict()})


def cmd_weight_dominance(args: argparse.Namespace) -> None:
    from pejantzen.weights import dominance_class, is_regular

    ctx = _context(args)
    lam = _weight(args)
    _emit(args, {
        "weight": lam.to_list(),
        "dominance": dominance_class(ctx, lam).value,
        "regular": is_regular(ctx, lam),
    })


def cmd_weight_dot(args: argparse.Namespace) -> None:
    from pejantzen.weights import dot_action
    from pejantzen.weyl import from_reduced_word

    ctx = _context(args)
    lam = _weight(args)
    w = from_reduced_word(ctx.n, _word(args.word))
    _emit(args, {"weight": lam.to_list(), "element": w.to_dict(), "result": dot_action(ctx, w, lam).to_list()})


def cmd_weight_hat(args: argparse.Namespace) -> None:
    from pejantzen.weights import hat

    ctx = _context(args)
    lam = _weight(args)
    _emit(args, {"weight": lam.to_list(), "hat": hat(ctx, lam).to_list()})


def cmd_weight_leq(args: argparse.Namespace) -> None:
    from pejantzen.weights import order_leq

    ctx = _context(args)
    mu = _weight(args)
    lam = _weight(args, "other")
    _emit(args, {"weight": mu.to_list(), "other": lam.to_list(), "leq": order_leq(ctx, mu, lam)})


# ----- weyl ----------------------------------------------------------------


def cmd_weyl_kl(args: argparse.Namespace) -> None:
    from pejantzen.kl import kl_polynomial
    from pejantzen.weyl import from_reduced_word

    ctx = _context(args)
    x = from_reduced_word(ctx.n, _word(args.x))
    y = from_reduced_word(ctx.n, _word(args.y))
    _emit(args, {"x": x.to_dict(), "y": y.to_dict(), "polynomial": kl_polynomial(x, y).to_dict()})


def cmd_weyl_bruhat(args: argparse.Namespace) -> None:
    from pejantzen.weyl import bruhat_leq, from_reduced_word

    ctx = _context(args)
    x = from_reduced_word(ctx.n, _word(args.x))
    y = from_reduced_word(ctx.n, _word(args.y))
    _emit(args, {"x": x.to_dict(), "y": y.to_dict(), "leq": bruhat_leq(x, y)})


# ----- char ----------------------------------------------------------------


def cmd_char_super_expand(args: argparse.Namespace) -> None:
    from pejantzen.characters import verma_super_expand

    ctx = _context(args)
    lam = _weight(args)
    _emit(args, verma_super_expand(ctx, lam).to_list())


def _simple_class(ctx, lam):
    from pejantzen.kl import orbit_decomposition, simple_in_verma

    base, w = orbit_decomposition(ctx, lam)
    return base, w, simple_in_verma(base, w)


def cmd_char_simple_expand(args: argparse.Namespace) -> None:
    ctx = _context(args)
    lam = _weight(args)
    base, w, cls = _simple_class(ctx, lam)
    _emit(args, {
        "weight": lam.to_list(),
        "base": base.to_list(),
        "element": w.to_dict(),
        "verma_expansion": cls.to_list(),
    })


def cmd_char_mult(args: argparse.Namespace) -> None:
    from pejantzen.characters import GClass, verma_super_expand, weight_multiplicity
    from pejantzen.models import Basis

    ctx = _context(args)
    lam = _weight(args)
    nu = _weight(args, "at")
    if args.of == "verma":
        cls = GClass.single(Basis.VERMA_G0, lam)
    elif args.of == "super":
        cls = verma_super_expand(ctx, lam)
    else:
        cls = _simple_class(ctx, lam)[2]
    _emit(args, {
        "weight": lam.to_list(),
        "of": args.of,
        "at": nu.to_list(),
        "multiplicity": weight_multiplicity(cls, nu),
    })


# ----- block ---------------------------------------------------------------


def cmd_block_classify(args: argparse.Namespace) -> None:
    from pejantzen.blocks import block_key

    ctx = _context(args)
    _emit(args, block_key(ctx, _weight(args)).to_dict())


def cmd_block_same(args: argparse.Namespace) -> None:
    from pejantzen.blocks import same_block

    ctx = _context(args)
    lam = _weight(args)
    mu = _weight(args, "other")
    _emit(args, {"weight": lam.to_list(), "other": mu.to_list(), "same_block": same_block(ctx, lam, mu)})


def cmd_block_census(args: argparse.Namespace) -> None:
    from pejantzen.blocks import census
    from pejantzen.settings import load_settings

    ctx = _context(args)
    workers = load_settings()["census_workers"] if args.workers is None else args.workers
    _emit(args, [entry.to_dict() for entry in census(ctx, args.box, workers)])


# ----- oddref --------------------------------------------------------------


def cmd_oddref_trace(args: argparse.Namespace) -> None:
    from pejantzen.oddref import br_to_b

    ctx = _context(args)
    lam = _weight(args)
    if args.shift_kac:
        lam = lam - ctx.omega.scale(ctx.n - 1)
    _, trace = br_to_b(ctx, lam)
    _emit(args, trace.to_dict())


def cmd_oddref_socle_kac(args: argparse.Namespace) -> None:
    from pejantzen.oddref import socle_of_kac

    ctx = _context(args)
    mu = _weight(args)
    _emit(args, {"mu": mu.to_list(), "socle": socle_of_kac(ctx, mu).to_list()})


# ----- jantzen -------------------------------------------------------------


def cmd_jantzen_middle(args: argparse.Namespace) -> None:
    from pejantzen.jantzen import jantzen_middle
    from pejantzen.models import ReportStatus

    ctx = _context(args)
    report = jantzen_middle(ctx, _weight(args), _alpha(args, ctx))
    if report.status is ReportStatus.UNSUPPORTED:
        raise _Unsupported(report.reason or "unsupported", {"report": report.to_dict()})
    _emit(args, report.to_dict())


def _key_from_args(args: argparse.Namespace, ctx):
    from pejantzen.blocks import block_key, key_for_index
    from pejantzen.models import InvalidArgumentError

    if args.weight is not None:
        return block_key(ctx, _weight(args))
    if args.index is not None:
        return key_for_index(ctx, args.index)
    raise InvalidArgumentError("one of --weight or --index is required")


def cmd_jantzen_witness(args: argparse.Namespace) -> None:
    from pejantzen.jantzen import atypical_witness, validate_witness

    ctx = _context(args)
    key = _key_from_args(args, ctx)
    cert = atypical_witness(ctx, key)
    _emit(args, {"key": key.to_dict(), "certificate": cert.to_dict(), "checks": validate_witness(ctx, cert, key)})


def cmd_jantzen_report(args: argparse.Namespace) -> None:
    from pejantzen.jantzen import block_report, report_all

    ctx = _context(args)
    if args.all:
        _emit(args, [r.to_dict() for r in report_all(ctx)])
        return
    _emit(args, block_report(ctx, _key_from_args(args, ctx)).to_dict())


# ----- wiring --------------------------------------------------------------


def _common_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="Rank of pe(n)")
    common.add_argument("--format", choices=FORMAT_CHOICES, default=None,
                        help=f"Output format (default: ${FORMAT_ENV}, then settings, then json)")
    common.add_argument("--kl-cache", metavar="PATH", default=None,
                        help="KL memo file (default: <cache dir>/kl.json)")
    common.add_argument("--no-kl-cache", action="store_true", help="Neither load nor save the KL memo")
    common.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")
    return common


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pejantzen",
        description=(
            "Category O combinatorics for the periplectic Lie superalgebra pe(n): "
            "weights, Kazhdan-Lusztig polynomials, characters, blocks, odd "
            "reflections and Jantzen middles. Output is JSON unless --format table."
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = _common_parser()
    sub = parser.add_subparsers(dest="command", required=True)

    def group(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        return p.add_subparsers(dest="action", required=True)

    def leaf(parent, name: str, help_text: str, *, weight: bool = True):
        p = parent.add_parser(name, help=help_text, parents=[common])
        if weight:
            p.add_argument("--weight", default=None, help="Weight, e.g. -2,0,2")
        return p

    weight = group("weight", "Weight predicates and actions")
    leaf(weight, "typical", "Typicality T(lam)")
    leaf(weight, "dominance", "Dominance class and regularity")
    p = leaf(weight, "dot", "Dot action w.lam")
    p.add_argument("--word", default="", help="Word of w, e.g. 1,2")
    leaf(weight, "hat", "lam^ = -w0 lam")
    p = leaf(weight, "leq", "Is --weight <= --other in the highest-weight order?")
    p.add_argument("--other", default=None)

    weyl = group("weyl", "Symmetric group computations")
    for name, help_text in (("kl", "Kazhdan-Lusztig polynomial P_{x,y}"), ("bruhat", "Bruhat order x <= y")):
        p = leaf(weyl, name, help_text, weight=False)
        p.add_argument("--x", default="", help="Word of x")
        p.add_argument("--y", default="", help="Word of y")

    char = group("char", "Characters")
    leaf(char, "super-expand", "[M~(lam)] in g0-Vermas")
    leaf(char, "simple-expand", "[L(lam)] in g0-Vermas (regular integral lam)")
    p = leaf(char, "mult", "Weight multiplicity")
    p.add_argument("--at", default=None, help="Weight nu")
    p.add_argument("--of", choices=("verma", "simple", "super"), default="simple",
                   help="Module: M(lam), L(lam) or M~(lam)")

    block = group("block", "Blocks of the integral category")
    leaf(block, "classify", "Block key of a weight")
    p = leaf(block, "same", "Do two weights share a block?")
    p.add_argument("--other", default=None)
    p = leaf(block, "census", "Blocks met by the integer weights of a box", weight=False)
    p.add_argument("--box", type=int, default=None, help="Half-width B of [-B, B]^n (default: n)")
    p.add_argument("--workers", type=int, default=None, help="Worker threads (default: settings)")

    oddref = group("oddref", "Odd reflections from b^r to b")
    p = leaf(oddref, "trace", "Trace the b^r-highest weight along the Borel chain")
    p.add_argument("--shift-kac", action="store_true",
                   help="Start from lam - (n-1) omega_n (socle of K(L(lam)))")
    leaf(oddref, "socle-kac", "Highest weight of the socle of K(L(mu))")

    jantzen = group("jantzen", "Jantzen middles and block verdicts")
    p = leaf(jantzen, "middle", "U_alpha(lam)")
    p.add_argument("--alpha", type=int, default=1, help="Simple root index i (eps_i - eps_{i+1})")
    for name, help_text in (("witness", "Witness certificate of an atypical block"),
                            ("report", "Verdict for a block")):
        p = leaf(jantzen, name, help_text)
        p.add_argument("--index", type=int, default=None, help="Block of d^i")
        if name == "report":
            p.add_argument("--all", action="store_true", help="Blocks of d^0 .. d^n")
    return parser



def _kl_cache_path(args: argparse.Namespace) -> Path | None:
    if args.no_kl_cache:
        return None
    if args.kl_cache:
        return Path(args.kl_cache)
    from pejantzen import cache
    from pejantzen.settings import load_settings

    return cache.KL_CACHE_FILE if load_settings()["kl_cache"] else None


def _dispatch(args: argparse.Namespace) -> None:
    handler = {
        "weight": {
            "typical": cmd_weight_typical,
            "dominance": cmd_weight_dominance,
            "dot": cmd_weight_dot,
            "hat": cmd_weight_hat,
            "leq": cmd_weight_leq,
        },
        "weyl": {"kl": cmd_weyl_kl, "bruhat": cmd_weyl_bruhat},
        "char": {
            "super-expand": cmd_char_super_expand,
            "simple-expand": cmd_char_simple_expand,
            "mult": cmd_char_mult,
        },
        "block": {"classify": cmd_block_classify, "same": cmd_block_same, "census": cmd_block_census},
        "oddref": {"trace": cmd_oddref_trace, "socle-kac": cmd_oddref_socle_kac},
        "jantzen": {"middle": cmd_jantzen_middle, "witness": cmd_jantzen_witness, "report": cmd_jantzen_report},
    }[args.command][args.action]
    if (args.command, args.action) not in _KL_ACTIONS:
        handler(args)
        return

    from pejantzen import cache, kl

    path = _kl_cache_path(args)
    if path is not None:
        cache.load_kl_cache(path)
    before = kl.memo_size()
    handler(args)
    if path is not None and kl.memo_size() > before:
        cache.save_kl_cache(path)


def main() -> None:
    parser = _build_parser()
    args = parser.parse_args(_glue_negative_values(sys.argv[1:]))

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    if getattr(args, "box", "unset") is None:
        args.box = args.n

    from pejantzen.models import PeError, UnsupportedError

    try:
        _dispatch(args)
    except _Unsupported as exc:
        _json_out({"unsupported": exc.reason, **(exc.body or {})})
        raise SystemExit(2)
    except UnsupportedError as exc:
        _json_out({"unsupported": exc.reason})
        raise SystemExit(2)
    except PeError as exc:
        print(f"pejantzen: {exc}", file=sys.stderr)
        raise SystemExit(1)


if __name__ == "__main__":
    main()
