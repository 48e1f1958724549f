"""
Parameter files: line-oriented ``key = value`` text validated by JSON Schema.
"""
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

import jsonschema

from ..config import PARAM_BASIS, PARAM_FORMAT
from .errors import ParamFileError
from .params import CodeParams, validate_params
from .sidon import SidonSet, bose_chowla

logger = logging.getLogger(__name__)

SCHEMA_PATH = Path(__file__).parent.parent / "schemas" / "param-file.schema.json"

KEY_ORDER = (
    "format",
    "basis",
    "q",
    "kprime",
    "k",
    "d",
    "sidon_modulus",
    "sidon",
    "alpha_coeffs",
    "rate",
    "kept",
)
_INT_KEYS = {"q", "kprime", "k", "d", "sidon_modulus", "kept"}
_LIST_KEYS = {"sidon", "alpha_coeffs"}


def _join(values) -> str:
    return ",".join(str(int(v)) for v in values)


def _coerce(key: str, raw: str) -> Any:
    """Best-effort typing; values that do not convert stay strings for the schema to reject."""
    if key in _INT_KEYS:
        try:
            return int(raw)
        except ValueError:
            return raw
    if key in _LIST_KEYS:
        try:
            return [int(tok) for tok in raw.split(",")]
        except ValueError:
            return raw
    return raw


@dataclass(frozen=True)
class ParamFile:
    params: CodeParams

    def to_mapping(self) -> Dict[str, Any]:
        p = self.params
        return {
            "format": PARAM_FORMAT,
            "basis": PARAM_BASIS,
            "q": p.q,
            "kprime": p.kprime,
            "k": p.k,
            "d": p.d,
            "sidon_modulus": p.sidon.modulus,
            "sidon": list(p.sidon.elements),
            "alpha_coeffs": list(p.alpha_coeffs),
            "rate": f"{p.rate.numerator}/{p.rate.denominator}",
            "kept": p.kept,
        }

    def dumps(self) -> str:
        lines = []
        for key, value in self.to_mapping().items():
            text = _join(value) if key in _LIST_KEYS else str(value)
            lines.append(f"{key} = {text}")
        return "\n".join(lines) + "\n"

    def save(self, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.dumps(), encoding="utf-8", newline="\n")
        logger.info("wrote parameter file %s", path)
        return path

    @classmethod
    def loads(cls, text: str, source: Optional[str] = None) -> "ParamFile":
        """Parse, schema-validate and re-check every semantic invariant."""
        where = f" in {source}" if source else ""
        data: Dict[str, Any] = {}
        for number, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" not in stripped:
                raise ParamFileError(f"line {number}{where}: expected 'key = value', got {stripped!r}")
            key, raw = (part.strip() for part in stripped.split("=", 1))
            if key in data:
                raise ParamFileError(f"line {number}{where}: duplicate key '{key}'")
            data[key] = _coerce(key, raw)

        cls._validate_schema(data, where)
        return cls(params=cls._build(data, where))

    @classmethod
    def load(cls, path: Path) -> "ParamFile":
        if not path.exists():
            raise FileNotFoundError(f"Parameter file not found: {path}")
        return cls.loads(path.read_text(encoding="utf-8"), str(path))

    @staticmethod
    def _validate_schema(data: Dict[str, Any], where: str = "") -> None:
        if not SCHEMA_PATH.exists():
            raise RuntimeError("Internal Error: Schema definition file missing.")
        schema = json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))
        try:
            jsonschema.validate(instance=data, schema=schema)
        except jsonschema.ValidationError as exc:
            path = " -> ".join(str(p) for p in exc.path) if exc.path else "root"
            raise ParamFileError(f"Schema Validation Error{where} at '{path}': {exc.message}") from exc

    @staticmethod
    def _build(data: Dict[str, Any], where: str = "") -> CodeParams:
        problems: List[str] = []
        kprime, k, d = data["kprime"], data["k"], data["d"]
        if k != kprime - 1:
            problems.append(f"k={k} must equal kprime - 1 = {kprime - 1}")
        if data["sidon_modulus"] != d * d - 1:
            problems.append(f"sidon_modulus={data['sidon_modulus']} must equal d^2 - 1 = {d * d - 1}")
        num, den = (int(t) for t in data["rate"].split("/"))
        if Fraction(num, den) != Fraction(kprime - 1, kprime - 1 + data["kept"]):
            problems.append(f"rate {data['rate']} does not match k/(k + kept)")
        if problems:
            raise ParamFileError(f"Invalid parameter file{where}: " + "; ".join(problems))

        elements = tuple(data["sidon"])
        generator = None
        try:
            canonical = bose_chowla(d)
        except ValueError:
            canonical = None
        if canonical is not None and canonical.elements == elements:
            generator = canonical.generator_code
        params = CodeParams(
            q=data["q"],
            kprime=kprime,
            d=d,
            sidon=SidonSet(p=d, elements=elements, generator_code=generator),
            alpha_coeffs=tuple(data["alpha_coeffs"]),
            kept=data["kept"],
        )
        problems = validate_params(params)
        if problems:
            raise ParamFileError(f"Invalid parameter file{where}: " + "; ".join(problems))
        return params


def load_params(path: Path) -> CodeParams:
    return ParamFile.load(path).params


def save_params(params: CodeParams, path: Path) -> Path:
    return ParamFile(params).save(path)
