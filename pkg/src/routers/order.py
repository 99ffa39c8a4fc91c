from argparse import Namespace

import sympy

from src.errors import UsageError
from src.routers import CommandResult, CommandRouter, arg
from src.schemas.general import RunConfig
from src.schemas.order import (
    FormReport,
    MaximalityReport,
    ShiftReport,
    SuborderEntry,
    SuborderReport,
)
from src.services import clifford
from src.services.quat import TernaryForm, ring_from_form
from src.utils.read_file import read_structure_constants
from src.utils.scalars import format_scalar


router = CommandRouter()

FORM_ARGUMENT = arg("--form", nargs=6, required=True, metavar="N", help="form coefficients a b c d e f")


def parse_form(values) -> TernaryForm:
    return TernaryForm.parse(" ".join(values))


def _coords(values) -> list:
    return [format_scalar(x) for x in values]


# -------------------Order Routes---------------------
@router.command(
    "from-form",
    help="Multiplication table, reduced discriminant and maximality of the ring of a form.",
    arguments=[arg("coefficients", nargs=6, metavar="N", help="form coefficients a b c d e f")],
)
def from_form(args: Namespace, config: RunConfig) -> CommandResult:
    form = parse_form(args.coefficients)
    ring = ring_from_form(form)
    table = [[_coords(ring.table[i][j]) for j in (1, 2, 3)] for i in (1, 2, 3)]
    disc = clifford.reduced_discriminant(form)
    maximal = form.is_positive_definite() and clifford.is_maximal(form)

    text = [f"form: {form}", "multiplication table (basis 1 v1 v2 v3):"]
    for i in range(3):
        for j in range(3):
            text.append(f"v{i + 1}*v{j + 1} = {' '.join(table[i][j])}")
    text.append(f"reduced discriminant: {format_scalar(disc)}, maximal: {str(maximal).lower()}")

    report = FormReport(form=str(form), table=table, reduced_discriminant=format_scalar(disc), maximal=maximal)
    return CommandResult(report, text)


@router.command(
    "suborders",
    help="Suborders of a given index, one per Hermite normal form.",
    arguments=[
        FORM_ARGUMENT,
        arg("--index", type=int, required=True, help="lattice index [B0 : O]"),
        arg("--count-only", action="store_true", help="print only the number of suborders"),
    ],
)
def suborders(args: Namespace, config: RunConfig) -> CommandResult:
    form = parse_form(args.form)
    if args.index < 1:
        raise UsageError("--index must be at least 1")
    found = [
        SuborderEntry(index=args.index, hnf=m, form=str(clifford.suborder_form(form, m)))
        for m in clifford.hnf_matrices(args.index)
        if clifford.suborder_test(form, m)
    ]
    report = SuborderReport(form=str(form), index=args.index, count=len(found),
                            suborders=[] if args.count_only else found)
    if args.count_only:
        return CommandResult(report, [str(len(found))])
    text = [f"{' '.join(str(x) for row in e.hnf for x in row)}  ->  {e.form}" for e in found]
    return CommandResult(report, text)


@router.command(
    "maximal",
    help="Reduced discriminant and maximality, with a superorder witness when not maximal.",
    arguments=[FORM_ARGUMENT],
)
def maximal(args: Namespace, config: RunConfig) -> CommandResult:
    form = parse_form(args.form)
    disc = clifford.reduced_discriminant(form)
    is_max = clifford.is_maximal(form)
    report = MaximalityReport(form=str(form), reduced_discriminant=format_scalar(disc), maximal=is_max)
    text = [f"reduced discriminant: {format_scalar(disc)}, maximal: {str(is_max).lower()}"]
    if not is_max:
        for p, e in sorted(sympy.factorint(int(abs(disc))).items()):
            if e < 2:
                continue
            witness = clifford.find_superorder(form, p)
            if witness is not None:
                report.superorder_prime = p
                report.superorder_witness = _coords(witness.coords)
                text.append(f"index-{p} superorder adjoins {' '.join(report.superorder_witness)}")
                break
    return CommandResult(report, text)


@router.command(
    "good-basis",
    help="Shifts x_i making w_i - x_i a good basis, from a structure-constant file.",
    arguments=[
        arg("--table", required=True,
            help="nine rows 'i j s0 s1 s2 s3' giving w_i w_j on (1, w1, w2, w3)"),
    ],
)
def good_basis(args: Namespace, config: RunConfig) -> CommandResult:
    sc = read_structure_constants(args.table)
    shifts = clifford.good_basis_shift(sc)
    report = ShiftReport(shifts=_coords(shifts), symmetric=sc.is_symmetric())
    return CommandResult(report, [f"shifts: {' '.join(report.shifts)}"])
