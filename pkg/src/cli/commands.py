"""
Comandos de la CLI

Cada comando recibe la instancia ya validada y devuelve un Report; los
errores de la librería se convierten en reportes de error con el código
de salida de la excepción.
"""
from __future__ import annotations

import argparse
import logging
import random
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from src.core.errors import (
    DiscreteDualityError,
    EmptyIntersection,
    InfeasiblePrecondition,
    NotIntegrallyConvex,
    ParseError,
    UnboundedRegion,
)
from src.core.extended import PLUS_INF, ExtendedInteger, ext
from src.core.lattice import IntegralBox, LatticePoint, box_contains
from src.modules.bisubmodular import (
    BisubFunction,
    box_convolution,
    is_bisubmodular,
    minmax_cgk,
    minmax_fp,
    polyhedron_membership,
    sample_bisubmodular,
    signed_box_correction,
)
from src.modules.bisubmodular.model import weight
from src.modules.fenchel import (
    DualityCertificate,
    counterexample_gap_report,
    fenchel_certificate,
    integer_dual_maximum,
    local_minimum_check,
    minimize_difference,
    verify_certificate,
)
from src.modules.functions import (
    Orientation,
    SeparableFunction,
    TableFunction,
    UnivariatePiece,
    add_tables,
    biconjugate_check,
    concave_conjugate,
    convex_conjugate,
    generate_2_separable,
    random_separable_concave,
)
from src.modules.integral_convexity import is_integrally_convex_function, local_extension
from src.modules.subdifferential import (
    build_subgradient_system,
    enumerate_vertices,
    extract_integral_subgradient,
    fm_reduced_system,
    is_empty_by_elimination,
    is_integral_vertex,
    membership_check,
)
from src.cli.schemas import BoxModel, InstanceFile, Report
from src.cli.serialization import (
    bisub_from_rows,
    bisub_to_rows,
    box_from_model,
    box_to_model,
    format_number,
    format_vector,
    load_instance,
    parse_integer,
    parse_rational,
    parse_report,
    separable_from_model,
    separable_to_model,
    table_from_rows,
    table_to_rows,
)

logger = logging.getLogger(__name__)

EXIT_INCONSISTENT = 4

Handler = Callable[[InstanceFile, argparse.Namespace], Report]


# Lectura de la instancia


def _require(instance: InstanceFile, key: str):
    value = getattr(instance, key)
    if value is None:
        raise ParseError(f"La instancia no tiene la clave {key!r}")
    return value


def _truncated(instance: InstanceFile) -> bool:
    return "truncated" in instance.flags


def convex_table(instance: InstanceFile) -> TableFunction:
    return table_from_rows(
        _require(instance, "table"), instance.dimension, Orientation.CONVEX, _truncated(instance)
    )


def concave_table(instance: InstanceFile) -> TableFunction:
    return table_from_rows(
        _require(instance, "g_table"), instance.dimension, Orientation.CONCAVE, _truncated(instance)
    )


def separable(instance: InstanceFile) -> SeparableFunction:
    return separable_from_model(_require(instance, "separable"))


def zero_separable(n: int) -> SeparableFunction:
    pieces = tuple(UnivariatePiece.linear_form(0, Orientation.CONCAVE) for _ in range(n))
    return SeparableFunction(pieces, Orientation.CONCAVE)


def integer_vector(instance: InstanceFile, key: str) -> LatticePoint:
    return tuple(parse_integer(c, key) for c in _require(instance, key))


def optional_box(instance: InstanceFile, key: str, n: int) -> Optional[IntegralBox]:
    model = getattr(instance, key)
    return None if model is None else box_from_model(model, n)


def _one_based(indices: Optional[Sequence[int]], n: int) -> frozenset:
    indices = indices or []
    if any(not 1 <= i <= n for i in indices):
        raise ParseError(f"Índices fuera de 1..{n}: {sorted(indices)}")
    return frozenset(i - 1 for i in indices)


def _pair_json(pair) -> List[List[int]]:
    X, Y = pair
    return [sorted(i + 1 for i in X), sorted(i + 1 for i in Y)]


def generated_instance(seed: int, n: int = 2) -> InstanceFile:
    """
    Instancia sintética para --seed sin --instance

    Tabla 2-separable en [-1, 1]^n, Psi separable cóncava y una función
    bisubmodular, todas derivadas de la semilla.
    """
    rng = random.Random(seed)
    f = generate_2_separable(rng, n)
    psi = random_separable_concave(rng, n)
    bisub = sample_bisubmodular(rng, n)
    w = [rng.randint(0, 3) for _ in range(n)]
    logger.info("Instancia generada con semilla %d", seed)
    return InstanceFile.model_validate(
        {
            "dimension": n,
            "table": table_to_rows(f),
            "separable": separable_to_model(psi),
            "point": format_vector(f.domain[len(f) // 2]),
            "bisub": bisub_to_rows(bisub),
            "w": format_vector(w),
            "alpha": format_vector([-3] * n),
            "beta": format_vector([3] * n),
        }
    )


def resolve_instance(options: argparse.Namespace) -> InstanceFile:
    if options.instance:
        return load_instance(options.instance)
    if options.seed is not None:
        return generated_instance(options.seed)
    raise ParseError("Se requiere --instance o --seed")


# Serialización de resultados


def _certificate_payload(certificate: DualityCertificate) -> Dict[str, Any]:
    return {
        "primal_point": format_vector(certificate.primal_point),
        "dual_point": format_vector(certificate.dual_point),
        "primal_value": format_number(certificate.primal_value),
        "dual_value": format_number(certificate.dual_value),
        "box": box_to_model(certificate.box) if certificate.box is not None else None,
        "trace": [
            {"name": e.name, "holds": e.holds, "detail": e.detail} for e in certificate.trace
        ],
        "steps": _steps_payload(certificate.steps),
    }


def _steps_payload(steps) -> List[Dict[str, Any]]:
    return [
        {
            "level": step.level,
            "interval": str(step.interval),
            "value": None if step.value is None else format_number(step.value),
        }
        for step in steps
    ]


# Comandos


def cmd_check_ic(instance: InstanceFile, options: argparse.Namespace) -> Report:
    f = convex_table(instance)
    mode = getattr(options, "mode", None) or "c"
    result = is_integrally_convex_function(f, mode)
    if result.holds:
        return Report(command="check-ic", status="integrally_convex", payload={"mode": mode})
    witness: Dict[str, Any] = {"midpoint": format_vector(result.witness)}
    if result.pair is not None:
        witness["pair"] = [format_vector(result.pair[0]), format_vector(result.pair[1])]
    if result.extension_value is not None:
        witness["local_extension"] = format_number(result.extension_value)
    return Report(
        command="check-ic",
        status="not_integrally_convex",
        payload={"mode": mode, "witness": witness},
    )


def cmd_minimize(instance: InstanceFile, options: argparse.Namespace) -> Report:
    """min f, o min f - Psi si la instancia trae una función separable"""
    f = convex_table(instance)
    psi = separable(instance) if instance.separable is not None else zero_separable(f.dimension)
    x, value = minimize_difference(f, psi)
    difference = add_tables(f, psi.negated())
    return Report(
        command="minimize",
        status="minimized",
        payload={
            "point": format_vector(x),
            "value": format_number(value),
            "local_minimum": local_minimum_check(difference, x),
        },
    )


def _dual_points(instance: InstanceFile, n: int):
    if instance.samples is not None:
        return [tuple(parse_integer(c, "samples") for c in p) for p in instance.samples]
    box = optional_box(instance, "dual_box", n) or IntegralBox.cube(n, 1)
    return list(box.points())


def cmd_conjugate(instance: InstanceFile, options: argparse.Namespace) -> Report:
    f = convex_table(instance)
    points = _dual_points(instance, f.dimension)
    payload: Dict[str, Any] = {
        "conjugate": [[format_vector(p), format_number(convex_conjugate(f, p))] for p in points]
    }
    if instance.separable is not None:
        psi = separable(instance)
        payload["concave_conjugate"] = [
            [format_vector(p), format_number(concave_conjugate(psi, p))] for p in points
        ]
    if not f.truncated:
        biconjugate = biconjugate_check(f)
        payload["biconjugate"] = {
            "holds": biconjugate.holds,
            "radius": format_number(biconjugate.radius),
            "violating_point": None
            if biconjugate.violating_point is None
            else format_vector(biconjugate.violating_point),
        }
    return Report(command="conjugate", status="computed", payload=payload)


def cmd_subdiff(instance: InstanceFile, options: argparse.Namespace) -> Report:
    f = convex_table(instance)
    x = integer_vector(instance, "point")
    box = optional_box(instance, "box", f.dimension)
    system = build_subgradient_system(f, x)
    payload: Dict[str, Any] = {
        "point": format_vector(x),
        "rows": [str(row) for row in system.rows],
        "reduced_levels": [str(level) for level in fm_reduced_system(system)],
    }
    if box is not None:
        payload["box"] = box_to_model(box)
    try:
        vertices = enumerate_vertices(system, box)
        payload["vertices"] = [
            {"point": format_vector(v), "integral": is_integral_vertex(v)} for v in vertices
        ]
        payload["integral_vertices"] = sum(1 for v in vertices if is_integral_vertex(v))
    except UnboundedRegion:
        payload["vertices"] = "unbounded"

    try:
        extraction = extract_integral_subgradient(f, x, box)
    except NotIntegrallyConvex as error:
        payload["subgradient"] = None
        payload["note"] = f"NotIntegrallyConvex: {error}"
        return Report(
            command="subdiff",
            status="no_integral_subgradient",
            payload=payload,
            exit_code=EXIT_INCONSISTENT,
        )
    payload["steps"] = _steps_payload(extraction.steps)
    if not extraction.found:
        payload["subgradient"] = "empty"
        return Report(command="subdiff", status="empty", payload=payload)
    payload["subgradient"] = format_vector(extraction.point)
    return Report(command="subdiff", status="integral_subgradient", payload=payload)


def cmd_fenchel(instance: InstanceFile, options: argparse.Namespace) -> Report:
    """
    Certificado min = max, o reporte de brecha con la marca
    "no_ic_assumption"
    """
    f = convex_table(instance)
    if "no_ic_assumption" in instance.flags:
        g = concave_table(instance) if instance.g_table is not None else separable(instance)
        dual_box = optional_box(instance, "dual_box", f.dimension) or IntegralBox.cube(
            f.dimension, 3
        )
        gap = counterexample_gap_report(f, g, dual_box)
        return Report(
            command="fenchel",
            status="gap_report",
            payload={
                "chain": format_vector(gap.chain),
                "discrete_min": format_number(gap.discrete_min),
                "continuous_min": format_number(gap.continuous_min),
                "real_dual_max": format_number(gap.real_dual_max),
                "integer_dual_max": format_number(gap.integer_dual_max),
                "dual_box": box_to_model(gap.dual_box),
                "has_gap": gap.has_gap,
            },
        )
    certificate = fenchel_certificate(f, separable(instance))
    return Report(command="fenchel", status="certified", payload=_certificate_payload(certificate))


def _bisub_function(instance: InstanceFile) -> BisubFunction:
    f = bisub_from_rows(_require(instance, "bisub"), instance.dimension)
    result = is_bisubmodular(f)
    if not result:
        a, b = result.violation
        raise InfeasiblePrecondition(
            f"La tabla no es bisubmodular: {_pair_json(a)}, {_pair_json(b)}"
        )
    return f


def cmd_bisub(instance: InstanceFile, options: argparse.Namespace) -> Report:
    f = _bisub_function(instance)
    subcommand = getattr(options, "subcommand", None) or instance.subcommand or "cgk"
    payload: Dict[str, Any] = {"subcommand": subcommand}
    if subcommand == "conv":
        convolution = box_convolution(
            f, integer_vector(instance, "alpha"), integer_vector(instance, "beta")
        )
        payload["table"] = bisub_to_rows(convolution)
        return Report(command="bisub", status="convolution", payload=payload)

    if subcommand == "cgk":
        result = minmax_cgk(f, integer_vector(instance, "w"))
    else:
        A, B = _one_based(instance.A, f.n), _one_based(instance.B, f.n)
        result = minmax_fp(
            f, integer_vector(instance, "alpha"), integer_vector(instance, "beta"), A, B
        )
        payload["A"], payload["B"] = sorted(i + 1 for i in A), sorted(i + 1 for i in B)
    payload.update(
        {
            "lhs": format_number(result.lhs),
            "rhs": format_number(result.rhs),
            "primal_witness": format_vector(result.primal_witness),
            "dual_witness": _pair_json(result.dual_witness),
        }
    )
    return Report(command="bisub", status="minmax", payload=payload)


# Verificación de reportes


def _vector(values: Sequence, what: str) -> tuple:
    return tuple(parse_rational(v, what) for v in values)


def _integers(values: Sequence, what: str) -> LatticePoint:
    return tuple(parse_integer(v, what) for v in values)


def _extended(text: str) -> ExtendedInteger:
    return ExtendedInteger.parse(text)


def _verify_fenchel(instance: InstanceFile, payload: Dict[str, Any], status: str) -> Dict[str, bool]:
    f = convex_table(instance)
    if status == "gap_report":
        g = concave_table(instance) if instance.g_table is not None else separable(instance)
        chain = [_extended(v) for v in payload["chain"]]
        try:
            discrete = ext(minimize_difference(f, g)[1])
        except EmptyIntersection:
            discrete = PLUS_INF
        dual_box = box_from_model(BoxModel.model_validate(payload["dual_box"]), f.dimension)
        return {
            "discrete_min": discrete == chain[0],
            "integer_dual_max": integer_dual_maximum(f, g, dual_box) == chain[3],
            "chain_non_increasing": all(a >= b for a, b in zip(chain, chain[1:])),
        }
    psi = separable(instance)
    certificate = DualityCertificate(
        _integers(payload["primal_point"], "primal_point"),
        _integers(payload["dual_point"], "dual_point"),
        parse_integer(payload["primal_value"], "primal_value"),
        parse_integer(payload["dual_value"], "dual_value"),
    )
    return {"certificate": verify_certificate(f, psi, certificate)}


def _verify_subdiff(instance: InstanceFile, payload: Dict[str, Any], status: str) -> Dict[str, bool]:
    f = convex_table(instance)
    x = integer_vector(instance, "point")
    box = optional_box(instance, "box", f.dimension)
    system = build_subgradient_system(f, x)
    checks: Dict[str, bool] = {}
    if isinstance(payload.get("vertices"), list):
        checks["vertices_feasible"] = all(
            system.satisfied_by(_vector(v["point"], "vertex"), use_box=False)
            and (box is None or box_contains(box, _vector(v["point"], "vertex")))
            for v in payload["vertices"]
        )
    if status == "integral_subgradient":
        p = _integers(payload["subgradient"], "subgradient")
        checks["membership"] = membership_check(f, x, p)
        checks["in_box"] = box is None or box_contains(box, p)
    elif status == "empty":
        checks["empty"] = is_empty_by_elimination(system, box)
    elif status == "no_integral_subgradient":
        checks["not_integrally_convex"] = not is_integrally_convex_function(f)
    return checks


def _verify_check_ic(instance: InstanceFile, payload: Dict[str, Any], status: str) -> Dict[str, bool]:
    f = convex_table(instance)
    if status == "integrally_convex":
        return {"integrally_convex": bool(is_integrally_convex_function(f, payload["mode"]))}
    witness = payload["witness"]
    midpoint = _vector(witness["midpoint"], "midpoint")
    value = local_extension(f, midpoint)
    checks = {}
    if "local_extension" in witness:
        checks["local_extension"] = value == _extended(witness["local_extension"])
    if "pair" not in witness:
        checks["violation"] = value.is_plus_infinity
        return checks
    x, y = (_integers(v, "pair") for v in witness["pair"])
    checks["midpoint"] = tuple(Fraction(a + b, 2) for a, b in zip(x, y)) == midpoint
    checks["violation"] = (
        x in f and y in f and value > ext(Fraction(f.entries[x] + f.entries[y], 2))
    )
    return checks


def _verify_bisub(instance: InstanceFile, payload: Dict[str, Any], status: str) -> Dict[str, bool]:
    f = _bisub_function(instance)
    subcommand = payload["subcommand"]
    if status == "convolution":
        expected = box_convolution(
            f, integer_vector(instance, "alpha"), integer_vector(instance, "beta")
        )
        return {"table": bisub_to_rows(expected) == payload["table"]}
    z = _integers(payload["primal_witness"], "primal_witness")
    X, Y = (frozenset(i - 1 for i in part) for part in payload["dual_witness"])
    lhs, rhs = parse_integer(payload["lhs"], "lhs"), parse_integer(payload["rhs"], "rhs")
    checks = {"membership": polyhedron_membership(f, z), "equality": lhs == rhs}
    if subcommand == "cgk":
        w = integer_vector(instance, "w")
        ground = frozenset(range(f.n))
        checks["bounds"] = all(c <= b for c, b in zip(z, w))
        checks["lhs"] = sum(z) == lhs
        checks["rhs"] = f.values[(X, Y)] + weight(w, ground - X) + weight(w, Y) == rhs
    else:
        alpha, beta = integer_vector(instance, "alpha"), integer_vector(instance, "beta")
        A, B = _one_based(payload["A"], f.n), _one_based(payload["B"], f.n)
        checks["bounds"] = all(a <= c <= b for a, c, b in zip(alpha, z, beta))
        checks["lhs"] = weight(z, A) - weight(z, B) == lhs
        checks["rhs"] = f.values[(X, Y)] + signed_box_correction((X, Y), alpha, beta, A, B) == rhs
    return checks


def _verify_minimize(instance: InstanceFile, payload: Dict[str, Any], status: str) -> Dict[str, bool]:
    f = convex_table(instance)
    psi = separable(instance) if instance.separable is not None else zero_separable(f.dimension)
    x = _integers(payload["point"], "point")
    value = parse_integer(payload["value"], "value")
    difference = add_tables(f, psi.negated())
    return {
        "value": x in difference and difference.entries[x] == value,
        "minimum": all(v >= value for _, v in difference.items()),
    }


def _verify_conjugate(instance: InstanceFile, payload: Dict[str, Any], status: str) -> Dict[str, bool]:
    f = convex_table(instance)
    return {
        "conjugate": all(
            convex_conjugate(f, _integers(p, "p")) == _extended(value)
            for p, value in payload["conjugate"]
        )
    }


VERIFIERS = {
    "fenchel": _verify_fenchel,
    "subdiff": _verify_subdiff,
    "check-ic": _verify_check_ic,
    "bisub": _verify_bisub,
    "minimize": _verify_minimize,
    "conjugate": _verify_conjugate,
}


def cmd_verify(instance: InstanceFile, options: argparse.Namespace) -> Report:
    """
    Revalida un reporte previo contra la instancia

    Sólo usa evaluaciones y pruebas de pertenencia; un reporte rechazado
    termina con código 4.
    """
    if not getattr(options, "report", None):
        raise ParseError("verify requiere --report")
    path = Path(options.report)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise ParseError(f"No se puede leer {path}: {error.strerror}") from None
    report = parse_report(text)
    verifier = VERIFIERS.get(report.command)
    if verifier is None:
        raise ParseError(f"No se puede verificar un reporte de {report.command!r}")
    try:
        checks = verifier(instance, report.payload, report.status)
    except (KeyError, TypeError, ValueError) as error:
        raise ParseError(f"Payload incompleto: {error}") from None
    verified = bool(checks) and all(checks.values())
    if not verified:
        logger.warning("Reporte rechazado: %s", [k for k, v in checks.items() if not v])
    return Report(
        command="verify",
        status="verified" if verified else "rejected",
        payload={"command": report.command, "status": report.status, "checks": checks},
        exit_code=0 if verified else EXIT_INCONSISTENT,
    )


COMMANDS: Dict[str, Handler] = {
    "check-ic": cmd_check_ic,
    "minimize": cmd_minimize,
    "conjugate": cmd_conjugate,
    "subdiff": cmd_subdiff,
    "fenchel": cmd_fenchel,
    "bisub": cmd_bisub,
    "verify": cmd_verify,
}


def error_report(command: str, error: DiscreteDualityError) -> Report:
    payload: Dict[str, Any] = {"error": type(error).__name__, "message": str(error)}
    if isinstance(error, ParseError) and error.line is not None:
        payload["line"], payload["column"] = error.line, error.column
    return Report(command=command, status="error", payload=payload, exit_code=error.exit_code)


def execute(options: argparse.Namespace) -> Report:
    """
    Resuelve la instancia y ejecuta el comando pedido

    Returns:
        Report: Reporte del comando o reporte de error
    """
    command = options.command
    try:
        instance = resolve_instance(options)
        report = options.handler(instance, options)
    except DiscreteDualityError as error:
        logger.error("%s: %s", type(error).__name__, error)
        return error_report(command, error)
    logger.info("%s terminó con estado %s", command, report.status)
    return report


__all__ = ["COMMANDS", "execute", "generated_instance"]
