"""Command line front end.

One record per result line: JSON objects by default, CSV rows with
--format csv (meant for piping point dumps into plotting tools).
Exit status is 0 on success, 2 for bad usage or a rejected argument,
and 1 for an internal failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

from . import analytic, angles, discrepancy, expsum, factor


def _round15(v: float) -> float:
    """Floats are emitted with 15 significant digits (round-trip safe)."""
    return float(f"{v:.15g}")


class _Output:
    """Writes one record per call, JSON lines or CSV with a header row."""

    def __init__(self, command: str, fmt: str):
        self.command = command
        self.fmt = fmt
        self._writer = None

    def emit(self, params: dict, result, error_estimate=None) -> None:
        if self.fmt == "json":
            rec = {"command": self.command, "params": params, "result": result}
            if error_estimate is not None:
                rec["error_estimate"] = error_estimate
            print(json.dumps(rec))
            return
        row = dict(result) if isinstance(result, dict) else {"result": result}
        if error_estimate is not None:
            row["error_estimate"] = error_estimate
        flat = {
            k: json.dumps(v) if isinstance(v, (list, dict)) else v
            for k, v in row.items()
        }
        if self._writer is None:
            self._writer = csv.DictWriter(sys.stdout, fieldnames=list(flat))
            self._writer.writeheader()
        self._writer.writerow(flat)


def _threads(args) -> int:
    if args.threads is not None:
        if args.threads < 1:
            raise ValueError("--threads must be >= 1")
        return args.threads
    env = os.environ.get("EISEN_THREADS")
    if env:
        n = int(env)
        if n < 1:
            raise ValueError("EISEN_THREADS must be >= 1")
        return n
    return 1


def _cmd_points(args, out: _Output) -> None:
    pts = factor.circle_points(args.n)
    for z in pts.points:
        out.emit({"n": args.n}, {"a": z.a, "b": z.b, "angle": _round15(z.arg())})


def _cmd_rq(args, out: _Output) -> None:
    out.emit({"n": args.n}, factor.r_q(args.n))


def _cmd_factor(args, out: _Output) -> None:
    f = factor.factor_eisenstein(args.n)
    result = {
        "n": f.n,
        "unit_power": f.unit_power,
        "alpha3": f.alpha3,
        "split": [
            {"p": rec.p, "pi": [rec.pi.a, rec.pi.b], "exp_pi": e1, "exp_conj": e2}
            for rec, e1, e2 in f.split_factors
        ],
        "inert": [{"q": q, "exp": e} for q, e in f.inert_factors],
    }
    out.emit({"n": args.n}, result)


def _cmd_expsum(args, out: _Output) -> None:
    val = expsum.exp_sum(args.n, args.A).value
    out.emit(
        {"n": args.n, "A": args.A},
        {"re": _round15(val.real), "im": _round15(val.imag)},
    )


def _default_checkpoints(x: int) -> list[int]:
    cks = sorted({10**k for k in range(3, 8) if 10**k <= x} | {x})
    return cks


def _cmd_avg_expsum(args, out: _Output) -> None:
    if args.checkpoints:
        cks = sorted(int(c) for c in args.checkpoints.split(","))
    else:
        cks = _default_checkpoints(args.x)
    rep = expsum.avg_exp_sum(args.x, args.A, checkpoints=cks, threads=_threads(args))
    slope = rep.fitted_exponent
    slope_out = None if slope is None or math.isnan(slope) else _round15(slope)
    for cx, mean in rep.checkpoints:
        out.emit(
            {"x": args.x, "A": args.A},
            {"x": cx, "mean": _round15(mean), "fitted_exponent": slope_out},
        )


def _cmd_sector(args, out: _Output) -> None:
    q = angles.SectorQuery(args.x, args.phi1, args.phi2)
    observed, expected = angles.sector_count(q)
    out.emit(
        {"x": args.x, "phi1": args.phi1, "phi2": args.phi2},
        {
            "observed": observed,
            "expected": _round15(expected),
            "ratio": _round15(observed / expected),
        },
    )


def _cmd_chi_sum(args, out: _Output) -> None:
    val = angles.chi_prime_sum(args.x, args.a)
    out.emit(
        {"x": args.x, "a": args.a},
        {
            "re": _round15(val.value.real),
            "im": _round15(val.value.imag),
            "abs": _round15(abs(val.value)),
        },
    )


def _cmd_equi_stat(args, out: _Output) -> None:
    stat = angles.theta_equidistribution_stat(args.x)
    count = angles._ideal_arrays(args.x)[0].size
    out.emit({"x": args.x}, {"statistic": _round15(stat), "ideals": int(count)})


def _cmd_bad_circle(args, out: _Output) -> None:
    bc = angles.bad_circle(args.eps, args.k)
    offs = max(abs(math.remainder(z.arg(), math.pi / 3.0)) for z in bc.points.points)
    out.emit(
        {"eps": args.eps, "k": args.k},
        {
            "n": bc.n,
            "m": bc.m,
            "primes": list(bc.primes),
            "count": bc.points.count,
            "max_offset": _round15(offs),
        },
    )


def _cmd_discrepancy(args, out: _Output) -> None:
    res = discrepancy.discrepancy_exact(args.n)
    result = {
        "count": res.count,
        "delta": _round15(res.delta),
        "alpha": _round15(res.witness[0]),
        "beta": _round15(res.witness[1]),
    }
    if args.random_arcs:
        seed = args.seed if args.seed is not None else 0
        result["random_lower_bound"] = _round15(
            discrepancy.discrepancy_random_lower_bound(args.n, args.random_arcs, seed)
        )
    out.emit({"n": args.n}, result)


def _cmd_survey(args, out: _Output) -> None:
    rep = discrepancy.discrepancy_survey(args.x, args.gamma, threads=_threads(args))
    out.emit(
        {"x": args.x, "gamma": args.gamma},
        {
            "b_q": rep.b_q,
            "m_gamma": rep.m_gamma,
            "fraction": _round15(rep.fraction),
        },
    )


def _cmd_bq(args, out: _Output) -> None:
    out.emit({"x": args.x}, discrepancy.b_q(args.x))


def _cmd_theta(args, out: _Output) -> None:
    tol = args.tol if args.tol is not None else 1e-12
    val = analytic.theta(args.t, args.a, tol)
    out.emit({"t": args.t, "a": args.a}, _round15(val), error_estimate=tol)


def _cmd_theta_check(args, out: _Output) -> None:
    tol = args.tol if args.tol is not None else 1e-12
    r = analytic.theta_transform_residual(args.t, args.a, tol)
    out.emit({"t": args.t, "a": args.a}, {"residual": _round15(r)})


def _cmd_lfunc(args, out: _Output) -> None:
    tol = args.tol if args.tol is not None else 1e-9
    s = complex(args.sigma, args.t)
    val, err = analytic.l_dirichlet_with_error(s, args.a, tol)
    out.emit(
        {"sigma": args.sigma, "t": args.t, "a": args.a},
        {"re": _round15(val.real), "im": _round15(val.imag)},
        error_estimate=_round15(err),
    )


def _cmd_xi_check(args, out: _Output) -> None:
    tol = args.tol if args.tol is not None else 1e-9
    s = complex(args.re, args.im)
    xi = analytic.xi_integral(s, args.a, tol)
    r = analytic.functional_eq_residual(s, args.a, tol)
    out.emit(
        {"re": args.re, "im": args.im, "a": args.a},
        {
            "residual": _round15(r),
            "xi_re": _round15(xi.real),
            "xi_im": _round15(xi.imag),
        },
    )


def _cmd_li(args, out: _Output) -> None:
    out.emit({"x": args.x}, _round15(analytic.li(args.x)))


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="eisen",
        description="Lattice points, exponential sums and L-functions on the hexagonal lattice.",
    )
    top.add_argument("--format", choices=("json", "csv"), default="json")
    top.add_argument("--tol", type=float, default=None)
    top.add_argument("--threads", type=int, default=None)
    top.add_argument("--seed", type=int, default=None)

    # the same flags are accepted after the subcommand; SUPPRESS keeps a
    # flag given before the subcommand from being clobbered by a default
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("points", parents=[common], help="lattice points on |mu|^2 = N")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_points)

    p = sub.add_parser("rq", parents=[common], help="number of points on |mu|^2 = N")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_rq)

    p = sub.add_parser("factor", parents=[common], help="factorization over Z[w]")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("expsum", parents=[common], help="exponential sum S(N, A)")
    p.add_argument("n", type=int)
    p.add_argument("A", type=int)
    p.set_defaults(func=_cmd_expsum)

    p = sub.add_parser("avg-expsum", parents=[common], help="running mean of |S(n, A)|/6 up to X")
    p.add_argument("x", type=int)
    p.add_argument("A", type=int)
    p.add_argument("--checkpoints", type=str, default=None, help="comma separated x values")
    p.set_defaults(func=_cmd_avg_expsum)

    p = sub.add_parser("sector", parents=[common], help="split primes with angle in [PHI1, PHI2]")
    p.add_argument("x", type=int)
    p.add_argument("phi1", type=float)
    p.add_argument("phi2", type=float)
    p.set_defaults(func=_cmd_sector)

    p = sub.add_parser("chi-sum", parents=[common], help="sum of chi^{6a} over prime ideals")
    p.add_argument("x", type=int)
    p.add_argument("a", type=int)
    p.set_defaults(func=_cmd_chi_sum)

    p = sub.add_parser("equi-stat", parents=[common], help="KS statistic of ideal angles vs uniform")
    p.add_argument("x", type=int)
    p.set_defaults(func=_cmd_equi_stat)

    p = sub.add_parser("bad-circle", parents=[common], help="populated circle hugging the sextant directions")
    p.add_argument("eps", type=float)
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_bad_circle)

    p = sub.add_parser("discrepancy", parents=[common], help="exact circle discrepancy Delta(N)")
    p.add_argument("n", type=int)
    p.add_argument("--random-arcs", type=int, default=None)
    p.set_defaults(func=_cmd_discrepancy)

    p = sub.add_parser("survey", parents=[common], help="fraction of circles with Delta > r_Q^-gamma")
    p.add_argument("x", type=int)
    p.add_argument("gamma", type=float)
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("bq", parents=[common], help="count of populated circles up to X")
    p.add_argument("x", type=int)
    p.set_defaults(func=_cmd_bq)

    p = sub.add_parser("theta", parents=[common], help="theta(T, a) lattice sum")
    p.add_argument("t", type=float)
    p.add_argument("a", type=int)
    p.set_defaults(func=_cmd_theta)

    p = sub.add_parser("theta-check", parents=[common], help="theta transformation law residual")
    p.add_argument("t", type=float)
    p.add_argument("a", type=int)
    p.set_defaults(func=_cmd_theta_check)

    p = sub.add_parser("lfunc", parents=[common], help="L(SIGMA + iT, chi^{6a})")
    p.add_argument("sigma", type=float)
    p.add_argument("t", type=float)
    p.add_argument("a", type=int)
    p.set_defaults(func=_cmd_lfunc)

    p = sub.add_parser("xi-check", parents=[common], help="functional equation residual at RE + i IM")
    p.add_argument("re", type=float)
    p.add_argument("im", type=float)
    p.add_argument("a", type=int)
    p.set_defaults(func=_cmd_xi_check)

    p = sub.add_parser("li", parents=[common], help="logarithmic integral Li(X)")
    p.add_argument("x", type=float)
    p.set_defaults(func=_cmd_li)

    return top


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else 0
    out = _Output(args.command, args.format)
    try:
        args.func(args, out)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # pragma: no cover - defensive
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    return 0


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
