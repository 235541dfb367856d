"""Command-line interface.

Every command prints deterministic text (no timestamps, no unordered
collections) so outputs can be golden-tested byte for byte.  Exit codes:
0 success, 1 parse or usage error, 2 violated mathematical precondition,
3 budget exceeded.  All error paths print a single ``error: ...`` line.
"""

import argparse
import sys

from .errors import BudgetError, InputError, PreconditionError
from .groups import (FreeAbelianGroup, FreeGroup, ProductGroup,
                     augmentation_ideal_rep, parse_presentation, regular_rep,
                     tensor_power, todd_coxeter, Exceeded)
from .complexes import (LocalSystem, build_cover, fundamental_group, homology,
                        load_complex, local_cohomology, local_homology,
                        render_homology)
from .duality import (bs_class_report, bs_power, essentiality_pairing,
                      orient, pd_check, pert_finite)
from .group_homology import bar_homology, shift_chain_check, shift_homology
from .coarse import (cayley_ball, gromov_counterexample_report,
                     isoperimetric_ratio, min_ponzi_bound, ponzi_feasible)


class _UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load_complex(path):
    return load_complex(_read(path))


def _load_presentation(path):
    return parse_presentation(_read(path))


def parse_group_spec(spec):
    """Group shorthands: f2, z, z2, z^n, and * products (e.g. z^5*f2)."""
    alphabet = iter("abcdefghijklmnopqrstuvwxyz")
    factors = []
    for token in spec.lower().split("*"):
        token = token.strip()
        if not token:
            raise InputError(f"bad group spec {spec!r}")
        kind, body = token[0], token[1:]
        if body.startswith("^"):
            body = body[1:]
        if body == "":
            rank = 1
        else:
            try:
                rank = int(body)
            except ValueError:
                raise InputError(f"bad group spec token {token!r}") from None
        if rank < 1:
            raise InputError(f"rank in {token!r} must be >= 1")
        try:
            names = tuple(next(alphabet) for _ in range(rank))
        except StopIteration:
            raise InputError("group spec needs more than 26 generators") from None
        if kind == "f":
            factors.append(FreeGroup(rank, names))
        elif kind == "z":
            factors.append(FreeAbelianGroup(rank, names))
        else:
            raise InputError(f"unknown group kind {token!r}")
    model = factors[0]
    for f in factors[1:]:
        model = ProductGroup(model, f)
    return model


def _resolve_coeff(cx, path, max_cosets):
    """Read a coefficient descriptor file: module: I^k | trivial k | regular."""
    descriptor = None
    for lineno, raw in enumerate(_read(path).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.startswith("module:"):
            raise InputError(f"{path}:{lineno}: expected 'module: ...'")
        if descriptor is not None:
            raise InputError(f"{path}:{lineno}: duplicate module line")
        descriptor = line[len("module:"):].strip()
    if descriptor is None:
        raise InputError(f"{path}: no 'module:' line")
    parts = descriptor.split()
    if parts[0] == "trivial":
        try:
            rank = int(parts[1]) if len(parts) > 1 else 1
        except ValueError:
            raise InputError(f"bad trivial rank in {descriptor!r}") from None
        if rank < 0:
            raise InputError(f"bad trivial rank in {descriptor!r}")
        return LocalSystem.trivial(cx, rank), None
    cover = build_cover(cx, max_cosets=max_cosets)
    if parts[0] == "regular":
        return LocalSystem.from_rep(cover, regular_rep(cover.model),
                                    label="Zpi"), cover
    if parts[0] == "I" or parts[0].startswith("I^"):
        try:
            power = int(parts[0][2:]) if parts[0] != "I" else 1
        except ValueError:
            raise InputError(f"bad ideal power in {descriptor!r}") from None
        if power < 1:
            raise InputError(f"bad ideal power in {descriptor!r}")
        rep = tensor_power(augmentation_ideal_rep(cover.model), power)
        label = "I" if power == 1 else f"I^{power}"
        return LocalSystem.from_rep(cover, rep, label=label), cover
    raise InputError(f"unknown coefficient module {descriptor!r}")


# ---------------------------------------------------------------------------
# subcommands

def _cmd_homology(args, out):
    cx = _load_complex(args.file)
    if args.coeff:
        system, cover = _resolve_coeff(cx, args.coeff, args.max_cosets)
        groups = local_homology(cover, system)
    else:
        groups = homology(cx)
    out.append(render_homology(groups))


def _cmd_cohomology(args, out):
    cx = _load_complex(args.file)
    if args.coeff:
        system, cover = _resolve_coeff(cx, args.coeff, args.max_cosets)
    else:
        system, cover = LocalSystem.trivial(cx), None
    out.append(render_homology(local_cohomology(cover, system), prefix="H^"))


def _cmd_pi1(args, out):
    cx = _load_complex(args.file)
    pres = fundamental_group(cx, basepoint=args.basepoint)
    out.append(pres.render().rstrip("\n"))
    try:
        model = todd_coxeter(pres, args.max_cosets)
        out.append(f"order = {model.order}")
    except Exceeded:
        out.append(f"order = unknown (coset budget {args.max_cosets} exceeded)")


def _cmd_cover(args, out):
    cx = _load_complex(args.file)
    cover = build_cover(cx, max_cosets=args.max_cosets)
    out.append(f"pi1 order = {cover.model.order}")
    counts = cover.cover_complex().counts()
    for k, c in enumerate(counts):
        out.append(f"dim {k}: {c} cells")
    out.append(render_homology(homology(cover.cover_complex())))


def _cmd_group_homology(args, out):
    pres = _load_presentation(args.presentation)
    model = todd_coxeter(pres, args.max_cosets)
    results = {}
    if args.method in ("bar", "both"):
        results["bar"] = bar_homology(model, args.n)
        out.append(f"bar   = {results['bar']}")
    if args.method in ("shift", "both"):
        results["shift"] = shift_homology(model, args.n)
        out.append(f"shift = {results['shift']}")
    if args.method == "both":
        if results["bar"] == results["shift"]:
            out.append("AGREE")
        else:
            out.append("DISAGREE")
            raise PreconditionError("bar and shift homology disagree")


def _cmd_shift_chain(args, out):
    pres = _load_presentation(args.presentation)
    model = todd_coxeter(pres, args.max_cosets)
    report = shift_chain_check(model, args.n)
    out.append(report.render())
    if not report.all_equal:
        raise PreconditionError("shift chain values differ")


def _cmd_pd_check(args, out):
    cx = _load_complex(args.file)
    manifold = orient(cx)
    if args.coeff:
        system, _ = _resolve_coeff(cx, args.coeff, args.max_cosets)
    else:
        system = LocalSystem.trivial(cx)
    report = pd_check(manifold, system)
    out.append(report.render())
    if not report.ok:
        raise PreconditionError("duality pairing failed")


def _cmd_essential(args, out):
    cx = _load_complex(args.file)
    manifold = orient(cx)
    cover = build_cover(cx, max_cosets=args.max_cosets)
    out.append(f"pi1 order = {cover.model.order}")
    report = essentiality_pairing(manifold, cover)
    out.append(report.render())
    out.append("ESSENTIAL" if not report.is_zero else "INESSENTIAL")


def _cmd_bs_class(args, out):
    cx = _load_complex(args.file)
    cover = build_cover(cx, max_cosets=args.max_cosets)
    report = bs_class_report(cover, args.power)
    out.append(report.render())


def _cmd_pert(args, out):
    cx = _load_complex(args.file)
    cover = build_cover(cx, max_cosets=args.max_cosets)
    power = bs_power(cover, args.power)
    report = pert_finite(power, cover)
    out.append(f"pert(beta^{args.power}):")
    out.append(report.render())


def _cmd_ball(args, out):
    model = parse_group_spec(args.group)
    ball = cayley_ball(model, radius=args.radius)
    out.append(f"group = {model.describe()}")
    out.append(f"radius = {args.radius}")
    out.append(f"vertices = {len(ball)}")
    out.append(f"edges = {len(ball.edges)}")
    out.append(f"inner = {ball.inner_count}")
    out.append(f"crossing = {len(ball.crossing_edges())}")
    shells = " ".join(str(len(ball.shell(d))) for d in range(args.radius + 1))
    out.append(f"shell sizes = {shells}")


def _cmd_ponzi(args, out):
    model = parse_group_spec(args.group)
    ball = cayley_ball(model, radius=args.radius)
    out.append(f"group = {model.describe()}")
    out.append(f"radius = {args.radius}  bound = {args.bound}")
    out.append(f"ball = {len(ball)}  inner = {ball.inner_count}")
    result = ponzi_feasible(ball, args.bound)
    if result.feasible:
        assert result.verify()
        nonzero = sum(1 for v in result.flow.values() if v)
        out.append("FEASIBLE")
        out.append(f"certificate: {nonzero} edges carry flow, "
                   f"max |flow| <= {args.bound}, every inner vertex nets +1 "
                   "(verified)")
    else:
        out.append("INFEASIBLE")
        out.append(f"cut certificate: capacity {result.capacity} < "
                   f"demand {result.demand} ({len(result.cut_edges)} graph edges)")


def _cmd_min_bound(args, out):
    model = parse_group_spec(args.group)
    ball = cayley_ball(model, radius=args.radius)
    res = min_ponzi_bound(ball)
    out.append(f"group = {model.describe()}")
    out.append(f"radius = {args.radius}")
    out.append(f"ball = {len(ball)}  inner = {ball.inner_count}")
    out.append(f"t_min = {res.t_min}")
    out.append("certificate at t_min verified = "
               f"{res.certificate.verify()}")
    if res.cut_below is not None:
        out.append(f"cut at t_min - 1: capacity {res.cut_below.capacity} < "
                   f"demand {res.cut_below.demand}")


def _cmd_folner(args, out):
    model = parse_group_spec(args.group)
    out.append(f"group = {model.describe()}")
    for r in range(1, args.radius + 1):
        ball = cayley_ball(model, radius=r)
        inner, crossing, ratio = isoperimetric_ratio(ball)
        out.append(f"R={r} inner={inner} crossing={crossing} ratio={ratio}")


def _cmd_gromov_report(args, out):
    factor = parse_group_spec(args.factor) if args.factor else None
    report = gromov_counterexample_report(args.rank, args.radius, factor=factor)
    if args.format == "kv":
        out.append(report.render_kv())
    else:
        out.append(report.render())
        if not report.certified:
            out.append("note: certification declined; see the trace above")


def build_parser():
    parser = _Parser(prog="eqhom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--max-cosets", type=int, default=20000,
                       help="coset enumeration budget")
        return p

    p = add("homology", _cmd_homology, help="homology of a complex file")
    p.add_argument("file")
    p.add_argument("--coeff", help="coefficient descriptor file")

    p = add("cohomology", _cmd_cohomology, help="cohomology of a complex file")
    p.add_argument("file")
    p.add_argument("--coeff")

    p = add("pi1", _cmd_pi1, help="edge-path presentation of pi_1")
    p.add_argument("file")
    p.add_argument("--basepoint", type=int, default=0)

    p = add("cover", _cmd_cover, help="universal cover cells and homology")
    p.add_argument("file")

    p = add("group-homology", _cmd_group_homology,
            help="H_n of a presented finite group")
    p.add_argument("presentation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("bar", "shift", "both"), default="both")

    p = add("shift-chain", _cmd_shift_chain,
            help="H_n = H_{n-1}(pi; I) = ... chain check")
    p.add_argument("presentation")
    p.add_argument("--n", type=int, required=True)

    p = add("pd-check", _cmd_pd_check, help="cap-with-[M] duality check")
    p.add_argument("file")
    p.add_argument("--coeff")

    p = add("essential", _cmd_essential, help="degree-n pairing test")
    p.add_argument("file")

    p = add("bs-class", _cmd_bs_class, help="obstruction class power")
    p.add_argument("file")
    p.add_argument("--power", type=int, default=1)

    p = add("pert", _cmd_pert, help="forget-equivariance image of beta^k")
    p.add_argument("file")
    p.add_argument("--power", type=int, default=1)

    p = add("ball", _cmd_ball, help="Cayley ball summary")
    p.add_argument("group")
    p.add_argument("--radius", type=int, required=True)

    p = add("ponzi", _cmd_ponzi, help="bounded-divergence flow probe")
    p.add_argument("group")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--bound", type=int, default=1)

    p = add("min-bound", _cmd_min_bound, help="least feasible flow bound")
    p.add_argument("group")
    p.add_argument("--radius", type=int, required=True)

    p = add("folner", _cmd_folner, help="isoperimetric ratios per radius")
    p.add_argument("group")
    p.add_argument("--radius", type=int, required=True)

    p = add("gromov-report", _cmd_gromov_report,
            help="three-section counterexample-mechanism report")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--factor", help="replace F_2 (e.g. z2) to probe the "
                                    "amenable direction")
    p.add_argument("--format", choices=("text", "kv"), default="text")

    return parser


def run(argv):
    """Execute a command line; returns (exit_code, output_text)."""
    out = []
    try:
        args = build_parser().parse_args(argv)
        args.fn(args, out)
        return 0, "\n".join(out) + "\n"
    except (_UsageError, InputError, ValueError) as exc:
        out.append(f"error: {exc}")
        return 1, "\n".join(out) + "\n"
    except BudgetError as exc:
        out.append(f"error: {exc}")
        return 3, "\n".join(out) + "\n"
    except PreconditionError as exc:
        out.append(f"error: {exc}")
        return 2, "\n".join(out) + "\n"


def main():
    code, text = run(sys.argv[1:])
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
