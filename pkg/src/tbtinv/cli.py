"""Command-line front end.

Subcommands: ``gen`` (random PD instance), ``invert`` (fast or reference
method), ``wwr`` (baseline recursion), ``opcount`` (cost-model sweep CSV)
and ``verify`` (cross-check fast vs reference vs baseline on an
instance).

Exit status: 0 pass, 1 tolerance failure, 2 input not positive definite,
3 I/O or usage error.
"""

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from . import costmodel, fileio
from .core import NotPositiveDefinite, OpCounter, TbtGenerator, \
    assemble_dense, band_to_dense
from .fast import fetch, tbt_factorization, tbt_grc
from .instances import generate_pd_tbt
from .oracle import build_factorization, grc_full, inverse_dense
from .wwr import normal_system, wwr_recurse, wwr_residual

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_NOT_PD = 2
EXIT_USAGE = 3


@dataclass
class RunConfig:
    """Validated parameters of one CLI invocation."""

    command: str
    n1: int = 1
    n2: int = 1
    seed: int = 0
    method: str = "fast"
    input: str | None = None
    output: str | None = None
    factor: str | None = None
    counter: bool = False
    n_min: int = 2
    n_max: int = 2
    tolerance: float = 1e-8
    ridge: float = 1e-6

    def __post_init__(self):
        if self.tolerance <= 0.0:
            raise ValueError("tolerance must be positive")
        if self.ridge <= 0.0:
            raise ValueError("ridge must be positive")
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError("sizes must be >= 1")
        if self.command == "wwr" and self.input is None and self.n2 < 2:
            raise ValueError("the baseline needs n2 >= 2")


@dataclass
class VerifyReport:
    """Cross-check results for one instance."""

    table_deviation: float
    inverse_residual: float
    wwr_relative_residual: float | None
    tolerance: float

    @property
    def passed(self) -> bool:
        checks = [self.table_deviation, self.inverse_residual]
        if self.wwr_relative_residual is not None:
            checks.append(self.wwr_relative_residual)
        return all(c <= self.tolerance for c in checks)

    def lines(self):
        yield f"fast-vs-reference table deviation: {self.table_deviation:.3e}"
        yield f"inverse residual |R X - I|_F / sqrt(n): {self.inverse_residual:.3e}"
        if self.wwr_relative_residual is not None:
            yield f"baseline normal-equation residual (relative): " \
                  f"{self.wwr_relative_residual:.3e}"
        verdict = "PASS" if self.passed else "FAIL"
        yield f"verdict: {verdict} (tolerance {self.tolerance:g})"


def _scalar_dev(x, y) -> float:
    return abs(x - y) / max(1.0, abs(y))


def _band_dev(x, y) -> float:
    dx, dy = band_to_dense(x), band_to_dense(y)
    return float(np.max(np.abs(dx - dy)) / max(1.0, np.max(np.abs(dy))))


def run_verify(g: TbtGenerator, tolerance: float = 1e-8) -> VerifyReport:
    """Cross-check the fast solver, reference recursion and baseline.

    Compares every fetched table tuple against the dense reference,
    measures the materialized-inverse residual, and (for n2 >= 2) the
    baseline's normal-equation residual.
    """
    n = g.n
    reference = grc_full(assemble_dense(g))
    tables = tbt_grc(g)
    dev = 0.0
    for k in range(n):
        for l in range(k, n):
            got = fetch(tables, k, l)
            want = reference.get(k, l)
            dev = max(dev,
                      _scalar_dev(got.a, want.a),
                      _scalar_dev(got.ap, want.ap),
                      _scalar_dev(got.v, want.v),
                      _scalar_dev(got.vp, want.vp),
                      _band_dev(got.p, want.p),
                      _band_dev(got.q, want.q))
    inverse = inverse_dense(tbt_factorization(g))
    resid = float(np.linalg.norm(reference.matrix @ inverse - np.eye(n))
                  / np.sqrt(n))
    wwr_rel = None
    if g.n2 >= 2:
        states = wwr_recurse(g)
        _, rhs = normal_system(g)
        scale = float(np.linalg.norm(rhs))
        wwr_rel = wwr_residual(g, states[-1]) / max(scale, 1.0)
    return VerifyReport(dev, resid, wwr_rel, tolerance)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tbtinv",
                     description="Structured inversion of Hermitian PD "
                                 "Toeplitz-block-Toeplitz matrices")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random PD instance")
    gen.add_argument("--n1", type=int, required=True, help="block size")
    gen.add_argument("--n2", type=int, required=True, help="block count")
    gen.add_argument("--seed", type=int, default=0, help="64-bit seed")
    gen.add_argument("--ridge", type=float, default=1e-6,
                     help="relative zero-lag ridge (default 1e-6)")
    gen.add_argument("--output", required=True, help="generator file path")

    inv = sub.add_parser("invert", help="materialize the inverse")
    inv.add_argument("--input", required=True, help="generator file path")
    inv.add_argument("--method", choices=("fast", "oracle"), default="fast",
                     help="half-table solver or dense reference recursion")
    inv.add_argument("--output", required=True, help="dense inverse path")
    inv.add_argument("--factor", default=None,
                     help="also write the banded factor here")
    inv.add_argument("--counter", action="store_true",
                     help="print the operation-count summary line")

    wwr = sub.add_parser("wwr", help="run the block-Levinson baseline")
    wwr.add_argument("--input", required=True, help="generator file path")
    wwr.add_argument("--output", required=True,
                     help="coefficient blocks + residual report path")

    opc = sub.add_parser("opcount", help="emit the cost-model sweep CSV")
    opc.add_argument("--min", type=int, required=True, dest="n_min")
    opc.add_argument("--max", type=int, required=True, dest="n_max")
    opc.add_argument("--output", required=True, help="CSV path")

    ver = sub.add_parser("verify", help="cross-check solvers on an instance")
    ver.add_argument("--input", required=True, help="generator file path")
    ver.add_argument("--tolerance", type=float, default=1e-8)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if v is not None}
    return RunConfig(**{k: v for k, v in fields.items()
                        if k in RunConfig.__dataclass_fields__})


def cmd_gen(cfg: RunConfig) -> int:
    g = generate_pd_tbt(cfg.n1, cfg.n2, cfg.seed, cfg.ridge)
    fileio.write_generator(g, cfg.output)
    print(f"wrote {cfg.output} (n1={cfg.n1} n2={cfg.n2} seed={cfg.seed})")
    return EXIT_PASS


def cmd_invert(cfg: RunConfig) -> int:
    g = fileio.read_generator(cfg.input)
    counter = OpCounter() if cfg.counter else None
    if cfg.method == "oracle":
        factor = build_factorization(grc_full(assemble_dense(g), counter))
    else:
        factor = tbt_factorization(g, counter)
    fileio.write_dense(inverse_dense(factor), cfg.output)
    if cfg.factor:
        fileio.write_factor(factor, cfg.factor)
    if counter is not None:
        print(f"mul={counter.mul} add={counter.add} div={counter.div}")
    return EXIT_PASS


def cmd_wwr(cfg: RunConfig) -> int:
    g = fileio.read_generator(cfg.input)
    states = wwr_recurse(g)
    resid = wwr_residual(g, states[-1])
    _, rhs = normal_system(g)
    rel = resid / max(float(np.linalg.norm(rhs)), 1.0)
    parts = [fileio.format_dense(coeff) for coeff in states[-1].coeffs]
    with open(cfg.output, "w") as fh:
        fh.write("\n".join(parts))
        fh.write(f"\nresidual {resid!r} relative {rel!r}\n")
    print(f"residual {resid:.3e} relative {rel:.3e}")
    return EXIT_PASS


def cmd_opcount(cfg: RunConfig) -> int:
    reports = costmodel.comparison_table(cfg.n_min, cfg.n_max)
    with open(cfg.output, "w") as fh:
        fh.write(costmodel.format_csv(reports))
    print(f"wrote {len(reports)} rows to {cfg.output}")
    return EXIT_PASS


def cmd_verify(cfg: RunConfig) -> int:
    g = fileio.read_generator(cfg.input)
    report = run_verify(g, cfg.tolerance)
    for line in report.lines():
        print(line)
    return EXIT_PASS if report.passed else EXIT_FAIL


_HANDLERS = {
    "gen": cmd_gen,
    "invert": cmd_invert,
    "wwr": cmd_wwr,
    "opcount": cmd_opcount,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _HANDLERS[cfg.command](cfg)
    except NotPositiveDefinite as exc:
        print(f"not positive definite: {exc}", file=sys.stderr)
        return EXIT_NOT_PD
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
