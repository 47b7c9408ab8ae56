"""
Conversión entre documentos JSON y los objetos de la librería
"""
from __future__ import annotations

import json
import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from pydantic import ValidationError

from src.config.settings import settings
from src.core.errors import DimensionMismatch, ParseError
from src.core.extended import ExtendedInteger
from src.core.lattice import IntegralBox
from src.modules.bisubmodular.model import BisubFunction, SignedPair, signed_pairs
from src.modules.functions.model import Orientation, TableFunction
from src.modules.functions.separable import SeparableFunction, Shape, UnivariatePiece
from src.cli.schemas import BoxModel, InstanceFile, PieceModel, Report, SeparableModel

logger = logging.getLogger(__name__)

_INTEGER = re.compile(r"^[+-]?\d+$")
_RATIONAL = re.compile(r"^[+-]?\d+/\d+$")


# Números


def parse_integer(value: Union[int, str], what: str = "valor") -> int:
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, str) and _INTEGER.match(value.strip()):
        return int(value)
    raise ParseError(f"{what}: se esperaba un entero, se obtuvo {value!r}")


def parse_rational(value: Union[int, str], what: str = "valor") -> Fraction:
    if isinstance(value, str) and _RATIONAL.match(value.strip()):
        numerator, denominator = value.split("/")
        if int(denominator) == 0:
            raise ParseError(f"{what}: denominador nulo")
        return Fraction(int(numerator), int(denominator))
    return Fraction(parse_integer(value, what))


def parse_extended(value: Union[int, str], what: str = "valor") -> ExtendedInteger:
    if isinstance(value, str) and value.strip() in ("+inf", "-inf"):
        return ExtendedInteger.parse(value.strip())
    return ExtendedInteger.finite(parse_integer(value, what))


def format_number(value) -> str:
    """Forma canónica: entero decimal, "num/den" o "+inf" / "-inf" """
    if isinstance(value, ExtendedInteger):
        return str(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(value)


def format_vector(vector: Sequence) -> List[str]:
    return [format_number(c) for c in vector]


# Objetos


def box_from_model(model: BoxModel, dimension: Optional[int] = None) -> IntegralBox:
    try:
        box = IntegralBox(
            tuple(parse_extended(v, "box.lower") for v in model.lower),
            tuple(parse_extended(v, "box.upper") for v in model.upper),
        )
    except (ValueError, DimensionMismatch) as error:
        raise ParseError(f"Caja inválida: {error}") from None
    if dimension is not None and box.dimension != dimension:
        raise ParseError(f"La caja tiene dimensión {box.dimension}, se esperaba {dimension}")
    return box


def box_to_model(box: IntegralBox) -> Dict[str, List[str]]:
    return {"lower": format_vector(box.lower), "upper": format_vector(box.upper)}


def table_from_rows(
    rows, dimension: Optional[int], orientation: Orientation, truncated: bool = False
) -> TableFunction:
    entries = {}
    for point, value in rows:
        point = tuple(parse_integer(c, "punto de la tabla") for c in point)
        if point in entries:
            raise ParseError(f"Punto repetido en la tabla: {point}")
        entries[point] = parse_integer(value, f"valor en {point}")
    if not entries:
        raise ParseError("La tabla está vacía")
    n = dimension or len(next(iter(entries)))
    return TableFunction(n, entries, orientation, truncated)


def table_to_rows(f: TableFunction) -> List[List[Any]]:
    return [[format_vector(x), format_number(v)] for x, v in f.items()]


def piece_from_model(model: PieceModel, orientation: Orientation) -> UnivariatePiece:
    lower, upper = model.domain or ("-inf", "+inf")
    lower, upper = parse_extended(lower, "domain"), parse_extended(upper, "domain")
    shape = Shape(model.shape)
    if shape is Shape.BREAKPOINTS:
        values = model.params.get("values")
        if not isinstance(values, list):
            raise ParseError("breakpoints requiere params.values")
        return UnivariatePiece(
            shape, orientation, lower, upper, values=[parse_integer(v, "values") for v in values]
        )
    params = {}
    for key, value in model.params.items():
        if isinstance(value, list):
            raise ParseError(f"Parámetro {key} debe ser escalar")
        params[key] = parse_integer(value, key)
    return UnivariatePiece(shape, orientation, lower, upper, params)


def separable_from_model(model: SeparableModel) -> SeparableFunction:
    orientation = Orientation(model.orientation)
    return SeparableFunction(
        tuple(piece_from_model(p, orientation) for p in model.pieces), orientation
    )


def piece_to_model(piece: UnivariatePiece) -> Dict[str, Any]:
    params: Dict[str, Any] = {k: format_number(v) for k, v in sorted(piece.params.items())}
    if piece.shape is Shape.BREAKPOINTS:
        params = {"values": format_vector(piece.values)}
    return {
        "shape": piece.shape.value,
        "domain": [format_number(piece.lower), format_number(piece.upper)],
        "params": params,
    }


def separable_to_model(psi: SeparableFunction) -> Dict[str, Any]:
    return {
        "orientation": psi.orientation.value,
        "pieces": [piece_to_model(p) for p in psi.pieces],
    }


def bisub_from_rows(rows, dimension: Optional[int]) -> BisubFunction:
    values: Dict[SignedPair, int] = {}
    n = dimension or 0
    for (X, Y), value in rows:
        if any(i < 1 for i in list(X) + list(Y)):
            raise ParseError("Los índices de bisub comienzan en 1")
        pair = (frozenset(i - 1 for i in X), frozenset(i - 1 for i in Y))
        values[pair] = parse_integer(value, "bisub")
        n = max([n] + [i for i in list(X) + list(Y)])
    return BisubFunction(n, values)


def bisub_to_rows(f: BisubFunction) -> List[List[Any]]:
    return [
        [[sorted(i + 1 for i in X), sorted(i + 1 for i in Y)], format_number(f.values[(X, Y)])]
        for X, Y in signed_pairs(f.n)
    ]


# Documentos


def _validation_message(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first["loc"])
    return f"{location}: {first['msg']}"


def parse_instance(text: str) -> InstanceFile:
    """
    Raises:
        ParseError: Con línea y columna si el JSON es inválido
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as error:
        raise ParseError(f"JSON inválido: {error.msg}", error.lineno, error.colno) from None
    try:
        return InstanceFile.model_validate(document)
    except ValidationError as error:
        raise ParseError(f"Instancia inválida: {_validation_message(error)}") from None


def load_instance(path: Union[str, Path]) -> InstanceFile:
    """Lee un archivo de instancia"""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise ParseError(f"No se puede leer {path}: {error.strerror}") from None
    logger.debug("Instancia leída desde %s", path)
    return parse_instance(text)


def canonical_instance(instance: InstanceFile) -> Dict[str, Any]:
    """
    Forma canónica: números como cadenas, tablas ordenadas por punto,
    sin claves ausentes
    """
    document = instance.model_dump(exclude_none=True)
    n = instance.dimension
    orientation = {"table": Orientation.CONVEX, "g_table": Orientation.CONCAVE}
    for key, table_orientation in orientation.items():
        if instance_value := getattr(instance, key):
            document[key] = table_to_rows(table_from_rows(instance_value, n, table_orientation))
    if instance.separable is not None:
        document["separable"] = separable_to_model(separable_from_model(instance.separable))
    for key in ("box", "dual_box"):
        model = getattr(instance, key)
        if model is not None:
            document[key] = box_to_model(box_from_model(model))
    if instance.bisub is not None:
        document["bisub"] = bisub_to_rows(bisub_from_rows(instance.bisub, n))
    for key in ("point", "w", "alpha", "beta"):
        vector = getattr(instance, key)
        if vector is not None:
            document[key] = format_vector(parse_integer(c, key) for c in vector)
    if instance.samples is not None:
        document["samples"] = [
            format_vector(parse_rational(c, "samples") for c in s) for s in instance.samples
        ]
    for key in ("A", "B"):
        if getattr(instance, key) is not None:
            document[key] = sorted(getattr(instance, key))
    if not document.get("flags"):
        document.pop("flags", None)
    return document


def dump_document(document: Dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, indent=settings.REPORT_INDENT, ensure_ascii=False)


def dump_instance(instance: InstanceFile) -> str:
    return dump_document(canonical_instance(instance))


def dump_report(report: Report) -> str:
    return dump_document(report.model_dump())


def parse_report(text: str) -> Report:
    try:
        return Report.model_validate(json.loads(text))
    except json.JSONDecodeError as error:
        raise ParseError(f"JSON inválido: {error.msg}", error.lineno, error.colno) from None
    except ValidationError as error:
        raise ParseError(f"Reporte inválido: {_validation_message(error)}") from None
