from pathlib import Path
from typing import Union

import pandas as pd

from src.errors import InvalidInputError
from src.services.clifford import CoefficientTable, StructureConstants
from src.services.quat import TernaryForm
from src.utils.scalars import parse_rational

COEFFICIENT_COLUMNS = ["a", "b", "c", "d", "e", "f", "value"]


def read_coefficient_frame(path: Union[str, Path]) -> pd.DataFrame:
    """
    Read a coefficient table into a DataFrame of strings.

    One row per form: ``a b c d e f value`` separated by whitespace, '#' starts a comment.
    Raises InvalidInputError if the file is missing, empty or has the wrong shape.
    """
    path = Path(path)
    if not path.exists():
        raise InvalidInputError(f"Coefficient file {path} does not exist")

    try:
        df = pd.read_csv(path, sep=r"\s+", comment="#", header=None, dtype=str, engine="python")
    except pd.errors.EmptyDataError:
        raise InvalidInputError(f"Coefficient file {path} is empty")
    except Exception as e:
        raise InvalidInputError(f"Error reading coefficient file {path}: {str(e)}")

    if df.empty:
        raise InvalidInputError(f"Coefficient file {path} is empty")

    if df.shape[1] != len(COEFFICIENT_COLUMNS) or df.isnull().values.any():
        raise InvalidInputError(
            f"Coefficient file {path} must have {len(COEFFICIENT_COLUMNS)} columns per row: "
            f"{' '.join(COEFFICIENT_COLUMNS)}")

    df.columns = COEFFICIENT_COLUMNS
    return df


def read_coefficient_table(path: Union[str, Path]) -> CoefficientTable:
    df = read_coefficient_frame(path)
    table = CoefficientTable()
    for line, row in enumerate(df.itertuples(index=False), start=1):
        try:
            values = [parse_rational(x) for x in row]
        except InvalidInputError as exc:
            raise InvalidInputError(f"Row {line} of {path}: {exc.message}") from exc
        form = TernaryForm(*values[:6])
        if not form.is_positive_definite():
            raise InvalidInputError(f"Row {line} of {path}: form {form} is not positive definite")
        table.add(form, values[6])
    return table


def read_structure_constants(path: Union[str, Path]) -> StructureConstants:
    """Nine rows ``i j s0 s1 s2 s3`` with w_i w_j = s0 + s1 w1 + s2 w2 + s3 w3."""
    path = Path(path)
    if not path.exists():
        raise InvalidInputError(f"Structure-constant file {path} does not exist")
    try:
        df = pd.read_csv(path, sep=r"\s+", comment="#", header=None, dtype=str, engine="python")
    except pd.errors.EmptyDataError:
        raise InvalidInputError(f"Structure-constant file {path} is empty")
    if df.shape != (9, 6) or df.isnull().values.any():
        raise InvalidInputError(f"Structure-constant file {path} must have nine rows of 'i j s0 s1 s2 s3'")

    table = {}
    for row in df.itertuples(index=False):
        i, j = (parse_rational(x) for x in row[:2])
        if i not in (1, 2, 3) or j not in (1, 2, 3) or (i, j) in table:
            raise InvalidInputError(f"Bad or repeated index pair ({row[0]}, {row[1]}) in {path}")
        table[int(i), int(j)] = tuple(parse_rational(x) for x in row[2:])
    return StructureConstants(table=tuple(tuple(table[i, j] for j in (1, 2, 3)) for i in (1, 2, 3)))
