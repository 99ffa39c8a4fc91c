import random
from argparse import Namespace

from src.routers import CommandResult, CommandRouter, arg
from src.schemas.ctable import CTableEntry, FunctionalEquationReport, FunctionalEquationSample
from src.schemas.general import RunConfig
from src.services import ctable


router = CommandRouter()


def _complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}*I"


# -------------------Constant Term Routes---------------------
@router.command(
    help="The eight c-functions of the Siegel-parabolic constant term.",
    arguments=[arg("--place", choices=ctable.PLACES, default=None,
                   help="expand zeta_B at a split, ramified or archimedean place")],
)
def show(args: Namespace, config: RunConfig) -> CommandResult:
    entries = []
    for entry in ctable.coset_table():
        value = entry.c if args.place is None else ctable.expand_place(entry.c, args.place)
        entries.append(CTableEntry(
            index=entry.index,
            place=args.place or "global",
            roots=[ctable.format_root(r) for r in sorted(entry.roots)],
            value=str(value),
        ))
    text = [f"c{e.index}: {e.value}" for e in entries]
    return CommandResult(entries, text)


@router.command(
    "check-fe",
    help="Evaluate the functional-equation constant at random s.",
    arguments=[
        arg("--db", nargs="+", type=int, required=True, help="primes ramified in B (an odd number of them)"),
        arg("--samples", type=int, default=20, help="number of sample points"),
    ],
)
def check_fe(args: Namespace, config: RunConfig) -> CommandResult:
    rng = random.Random(f"fgsp6:{config.seed}:check-fe")
    samples = []
    for _ in range(args.samples):
        s = complex(rng.uniform(1.2, 3.8), rng.uniform(0.5, 6.0))
        values = ctable.functional_equation_constant(args.db, s)
        ok = abs(values.constant - 1) <= config.tolerance and abs(values.ratio - 1) <= config.tolerance
        samples.append(FunctionalEquationSample(
            s=_complex(s), constant=_complex(values.constant), ratio=_complex(values.ratio), passed=ok,
        ))
    passed = all(x.passed for x in samples)
    report = FunctionalEquationReport(primes=args.db, tolerance=config.tolerance, samples=samples, passed=passed)
    text = [f"s = {x.s}: constant {x.constant}, ratio {x.ratio}{'' if x.passed else '  FAIL'}" for x in samples]
    text.append(f"functional equation: {'PASS' if passed else 'FAIL'} ({len(samples)} samples)")
    return CommandResult(report, text, exit_code=0 if passed else 1)
