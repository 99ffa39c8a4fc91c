from argparse import Namespace

from src.routers import CommandResult, CommandRouter, arg
from src.routers.order import parse_form
from src.schemas.general import RunConfig
from src.schemas.w import NormalizeReport, WReport
from src.services import freudenthal
from src.services.quat import ring_from_form
from src.utils.scalars import format_scalar


router = CommandRouter()

HURWITZ = ["1", "1", "1", "1", "1", "1"]

RING_ARGUMENT = arg("--form", nargs=6, default=HURWITZ, metavar="N",
                    help="form of the quaternion ring (default: Hurwitz order)")
VECTOR_ARGUMENT = arg("vector", nargs=32, metavar="X", help="32 rationals (a, b, c, d) in the fixed coordinate order")


def _parse(args: Namespace, values):
    form = parse_form(args.form)
    return form, freudenthal.parse_welement(ring_from_form(form), " ".join(values))


def _coords(v) -> list:
    return [format_scalar(x) for x in v.coords()]


# -------------------W Routes---------------------
@router.command("rank", help="Rank of an element of W.", arguments=[VECTOR_ARGUMENT, RING_ARGUMENT])
def rank(args: Namespace, config: RunConfig) -> CommandResult:
    form, v = _parse(args, args.vector)
    r = freudenthal.wrank(v)
    return CommandResult(WReport(form=str(form), w=_coords(v), rank=r), [f"rank: {r}"])


@router.command("quartic", help="The quartic form Q(v).", arguments=[VECTOR_ARGUMENT, RING_ARGUMENT])
def quartic(args: Namespace, config: RunConfig) -> CommandResult:
    form, v = _parse(args, args.vector)
    q = format_scalar(freudenthal.quartic(v))
    return CommandResult(WReport(form=str(form), w=_coords(v), quartic=q), [f"quartic: {q}"])


@router.command(
    "pair",
    help="The symplectic pairing <u, v>.",
    arguments=[arg("u", nargs=32, metavar="X", help="32 rationals"), VECTOR_ARGUMENT, RING_ARGUMENT],
)
def pair(args: Namespace, config: RunConfig) -> CommandResult:
    form, u = _parse(args, args.u)
    _, v = _parse(args, args.vector)
    value = format_scalar(freudenthal.symplectic(u, v))
    return CommandResult(WReport(form=str(form), w=_coords(v), value=value), [f"pairing: {value}"])


@router.command(
    "normalize",
    help="A rational GSp6 translate of a rank-one element with d = 1.",
    arguments=[VECTOR_ARGUMENT, RING_ARGUMENT],
)
def normalize(args: Namespace, config: RunConfig) -> CommandResult:
    form, v = _parse(args, args.vector)
    result = freudenthal.normalize_d1(v)
    g6 = result.gsp6_element
    report = NormalizeReport(
        form=str(form),
        w=_coords(v),
        translate=_coords(result.translate),
        gsp6=[[format_scalar(x) for x in row] for row in g6.matrix],
        similitude=format_scalar(g6.similitude),
    )
    text = [f"translate: {' '.join(report.translate)}", f"similitude: {report.similitude}"]
    return CommandResult(report, text)
