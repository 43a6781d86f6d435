"""Command line front end: ``vershik-ga reduce|gen|solve|bench``.

Exit codes: 0 success, 1 malformed input, 2 solver timeout.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench
from .dcsp import InstanceFormatError, format_instance, is_solution, load_instance
from .decisions import RandomSource
from .ga import DEFAULT_PARAMS, GaConfig, ParameterSet, run
from .instances import InstanceSpec, generate
from .traceback import format_trace, trace
from .words import GroupSpec, format_word, normal_form, parse_word, pseudo_normal_form


class UsageError(Exception):
    pass


def _int_list(text):
    return [int(t) for t in text.replace(",", " ").split()]


def cmd_reduce(args, out):
    spec = GroupSpec(args.rank)
    source = args.word
    path = Path(source)
    if source and "\n" not in source and path.is_file():
        lines = path.read_text().splitlines()
    else:
        lines = [source]
    reducer = pseudo_normal_form if args.pseudo else normal_form
    for lineno, line in enumerate(lines, start=1):
        try:
            word = parse_word(line, spec)
        except ValueError as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
        print(format_word(reducer(word, spec)), file=out)
    return 0


def cmd_gen(args, out):
    if args.problem_p and (args.Y or args.Z):
        raise UsageError("--problem-p excludes --Y/--Z")
    if (args.Y is None) != (args.Z is None):
        raise UsageError("--Y and --Z go together")
    y_set = z_set = None
    if args.Y is not None:
        y_set, z_set = frozenset(_int_list(args.Y)), frozenset(_int_list(args.Z))
    spec = InstanceSpec(args.rank, args.la, args.lx, args.ly, seed=args.seed,
                        y_set=y_set, z_set=z_set)
    g = generate(spec)
    text = format_instance(g.instance, g.witness,
                           comment=f"generated: rank {args.rank} la {args.la} lx {args.lx} "
                                   f"ly {args.ly} seed {args.seed}")
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return 0


def _params(args):
    if args.params is None:
        if args.pop is not None and args.pop != DEFAULT_PARAMS.p:
            raise UsageError("--pop other than 200 needs --params")
        return DEFAULT_PARAMS
    return ParameterSet.parse(args.params, args.pop)


def cmd_solve(args, out):
    inst, _ = load_instance(args.file)
    params = _params(args)
    config = GaConfig(sigma=args.sigma, initial_length=args.init_len, seed=args.seed,
                      substitution=args.substitution)
    callback = None
    if args.trace:
        def callback(i, pop):
            report = trace(inst, pop[0].chromosome, RandomSource(f"trace-{config.seed}-{i}"))
            print(f"-- generation {i}", file=sys.stderr)
            print(format_trace(report), file=sys.stderr)
    result = run(inst, params, config, callback=callback)
    if result.success:
        assert is_solution(inst, result.solution)
        print("x: " + format_word(result.solution.chi), file=out)
        print("y: " + format_word(result.solution.zeta), file=out)
    else:
        print(f"timeout: best cost {result.final_cost}", file=out)
    print(f"generations: {result.generations}", file=out)
    print(f"time: {result.elapsed:.3f}s", file=out)
    return 0 if result.success else 2


def cmd_bench(args, out):
    path = Path(args.config)
    suite = bench.parse_suite(path.read_text(), base=path.parent)

    def progress(r):
        print(f"{r.instance_id} seed {r.seed}: "
              + (f"solved in {r.generations} generations" if r.success else "timeout")
              + f" ({r.time_ms / 1000:.1f}s)", file=sys.stderr)

    records = bench.run_suite(suite, jobs=args.jobs, progress=progress)
    if args.out:
        bench.write_records(args.out, records)
    print(bench.format_summary(bench.summarize(records, suite.group)), file=out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="vershik-ga",
                                     description="Double coset search in Vershik groups by GA.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="print the normal form of a word")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--pseudo", action="store_true", help="pseudo-normal form (no reordering)")
    p.add_argument("word", help='word such as "6 8 -1 2", or a file with one word per line')
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--la", type=int, required=True)
    p.add_argument("--lx", type=int, required=True)
    p.add_argument("--ly", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--problem-p", action="store_true", help="Y={1..m-1}, Z={m+2..n} (default)")
    p.add_argument("--Y", help="explicit generator indices of Y")
    p.add_argument("--Z", help="explicit generator indices of Z")
    p.add_argument("-o", "--out", help="write here instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="run the GA on an instance file")
    p.add_argument("file")
    p.add_argument("--pop", type=int)
    p.add_argument("--params", help="six comma-separated child counts")
    p.add_argument("--sigma", type=int, default=GaConfig().sigma)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--init-len", type=int, default=1)
    p.add_argument("--trace", action="store_true", help="dump the traceback of the best member")
    p.add_argument("--substitution", choices=("random", "recommended"), default="random")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="run a benchmark suite")
    p.add_argument("--config", required=True)
    p.add_argument("--out", help="CSV file for the run records")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args, out)
    except (UsageError, InstanceFormatError, bench.SuiteFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
