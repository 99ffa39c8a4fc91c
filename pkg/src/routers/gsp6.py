from argparse import Namespace

from src.routers import CommandResult, CommandRouter, arg
from src.routers.order import parse_form
from src.routers.w import RING_ARGUMENT
from src.schemas.general import RunConfig
from src.schemas.w import EmbeddingReport, FOActionReport
from src.services import gsp6
from src.services.quat import ring_from_form
from src.utils.scalars import format_scalar, parse_rational


router = CommandRouter()


def _matrix(values, size: int):
    return gsp6.parse_matrix(" ".join(values), size)


# -------------------GSp6 Routes---------------------
@router.command(
    "embed",
    help="The 32x32 matrix of iota(g) acting on W.",
    arguments=[arg("g", nargs=36, metavar="X", help="36 rationals, row-major"), RING_ARGUMENT],
)
def embed(args: Namespace, config: RunConfig) -> CommandResult:
    form = parse_form(args.form)
    g = gsp6.GSp6Element.from_matrix(_matrix(args.g, 6))
    image = gsp6.iota(ring_from_form(form), g)
    rows = [[format_scalar(x) for x in row] for row in image.matrix]
    report = EmbeddingReport(form=str(form), similitude=format_scalar(image.similitude), matrix=rows)
    return CommandResult(report, [f"similitude: {report.similitude}"] + [" ".join(row) for row in rows])


@router.command(
    "f-o",
    help="f_O . n(u) m(lam, m) and the indicator xi(lam, m).",
    arguments=[
        arg("--form", nargs=6, required=True, metavar="N", help="form coefficients a b c d e f"),
        arg("--u", nargs=9, required=True, metavar="X", help="symmetric 3x3 matrix, row-major"),
        arg("--lam", required=True, help="similitude parameter (rational)"),
        arg("--m", nargs=9, required=True, metavar="X", help="invertible 3x3 matrix, row-major"),
    ],
)
def f_o(args: Namespace, config: RunConfig) -> CommandResult:
    form = parse_form(args.form)
    lam = parse_rational(args.lam)
    m = _matrix(args.m, 3)
    image = gsp6.f_o_action(form, _matrix(args.u, 3), lam, m)
    xi = gsp6.xi_indicator(form, lam, m)
    report = FOActionReport(form=str(form), value=[format_scalar(x) for x in image.coords()], xi=xi)
    return CommandResult(report, [f"f_O g: {' '.join(report.value)}", f"xi: {xi}"])
