from argparse import Namespace

from src.routers import CommandResult, CommandRouter, arg
from src.routers.order import parse_form
from src.schemas.dirichlet import DirichletCoefficient, DirichletReport
from src.schemas.general import RunConfig
from src.services import clifford
from src.utils.read_file import read_coefficient_table
from src.utils.scalars import format_scalar


router = CommandRouter()


@router.command(
    help="Coefficients of the Dirichlet series attached to an order and a table of a(T).",
    arguments=[
        arg("--form", nargs=6, required=True, metavar="N", help="form coefficients a b c d e f"),
        arg("--weight", type=int, required=True, help="even weight 2r"),
        arg("--coeffs", required=True, help="whitespace-separated file of 'a b c d e f value' rows"),
        arg("--max-n", type=int, required=True, help="last coefficient index"),
    ],
)
def dirichlet(args: Namespace, config: RunConfig) -> CommandResult:
    form = parse_form(args.form)
    table = read_coefficient_table(args.coeffs)
    coefficients = clifford.dirichlet_coefficients(form, args.weight, table, args.max_n)
    entries = [DirichletCoefficient(index=n, value=format_scalar(v)) for n, v in coefficients]
    report = DirichletReport(form=str(form), weight=args.weight, coefficients=entries)
    return CommandResult(report, [f"{e.index} {e.value}" for e in entries])
