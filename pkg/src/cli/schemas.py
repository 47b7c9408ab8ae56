"""
Esquemas pydantic de los archivos de instancia y de los reportes

Los números se aceptan como enteros JSON o como cadenas decimales; los
racionales como "num/den" y las infinidades como "+inf" / "-inf".
"""
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

Number = Union[int, str]
TableRow = Tuple[List[Number], Number]
BisubRow = Tuple[Tuple[List[int], List[int]], Number]


class BoxModel(BaseModel):
    """Caja {"lower": [...], "upper": [...]}"""

    model_config = ConfigDict(extra="forbid")

    lower: List[Number]
    upper: List[Number]


class PieceModel(BaseModel):
    """
    Pieza univariada

    Attributes:
        shape: breakpoints, abs_form, quad_form, linear_form o kinked_form
        domain: [inferior, superior]; por defecto ["-inf", "+inf"]
        params: Parámetros de la forma; breakpoints usa "values"
    """

    model_config = ConfigDict(extra="forbid")

    shape: Literal["breakpoints", "abs_form", "quad_form", "linear_form", "kinked_form"]
    domain: Optional[Tuple[Number, Number]] = None
    params: Dict[str, Union[Number, List[Number]]] = Field(default_factory=dict)


class SeparableModel(BaseModel):
    """Función separable {"orientation": ..., "pieces": [...]}"""

    model_config = ConfigDict(extra="forbid")

    orientation: Literal["convex", "concave"] = "concave"
    pieces: List[PieceModel]


class InstanceFile(BaseModel):
    """
    Documento de instancia

    Todas las claves son opcionales; cada comando exige las que usa.
    """

    model_config = ConfigDict(extra="forbid")

    dimension: Optional[int] = None
    table: Optional[List[TableRow]] = None
    g_table: Optional[List[TableRow]] = None
    separable: Optional[SeparableModel] = None
    box: Optional[BoxModel] = None
    dual_box: Optional[BoxModel] = None
    bisub: Optional[List[BisubRow]] = None
    point: Optional[List[Number]] = None
    flags: List[str] = Field(default_factory=list)
    w: Optional[List[Number]] = None
    alpha: Optional[List[Number]] = None
    beta: Optional[List[Number]] = None
    A: Optional[List[int]] = None
    B: Optional[List[int]] = None
    subcommand: Optional[Literal["cgk", "fp", "conv"]] = None
    samples: Optional[List[List[Number]]] = None

    @field_validator("dimension")
    @classmethod
    def dimension_positive(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 1:
            raise ValueError("dimension debe ser >= 1")
        return value

    @field_validator("flags")
    @classmethod
    def known_flags(cls, value: List[str]) -> List[str]:
        unknown = set(value) - {"no_ic_assumption", "truncated"}
        if unknown:
            raise ValueError(f"flags desconocidos: {sorted(unknown)}")
        return sorted(set(value))


class Report(BaseModel):
    """
    Reporte de un comando

    Attributes:
        command: Comando ejecutado
        status: Resultado (p. ej. "certified", "integrally_convex")
        payload: Certificado, testigo o tabla, con números como cadenas
        timing: Tiempo transcurrido
        exit_code: Código de salida del proceso (no se serializa)
    """

    command: str
    status: str
    payload: Dict[str, Any] = Field(default_factory=dict)
    timing: Dict[str, str] = Field(default_factory=dict)
    exit_code: int = Field(default=0, exclude=True)
