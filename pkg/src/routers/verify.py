from argparse import Namespace

from src.routers import CommandResult, CommandRouter, arg
from src.schemas.general import RunConfig
from src.schemas.verify import SuiteReport, VerifyReport
from src.services import verify as suites


router = CommandRouter()


@router.command(
    help="Run property suites; exit 1 on the first counterexample of any suite.",
    arguments=[arg("suite", choices=["all"] + list(suites.SUITES), help="suite to run")],
)
def verify(args: Namespace, config: RunConfig) -> CommandResult:
    results = suites.run(args.suite, config.seed, config.trials, config.tolerance)
    reports = [
        SuiteReport(suite=r.suite, passed=r.passed, checks=r.checks, counterexample=r.counterexample)
        for r in results
    ]
    passed = all(r.passed for r in reports)
    text = []
    for r in reports:
        text.append(f"suite {r.suite}: {'PASS' if r.passed else 'FAIL'} ({r.checks} checks)")
        if not r.passed:
            text.append(f"  counterexample: {r.counterexample}")
    report = VerifyReport(seed=config.seed, trials=config.trials, passed=passed, suites=reports)
    return CommandResult(report, text, exit_code=0 if passed else 1)
