"""
Structured-text document dialect shared by all commands
"""
import json
import re
from fractions import Fraction
from typing import Any, Dict

from hypermatch.shared.constants import InstanceKind
from hypermatch.shared.errors import ParseError

_RATIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text) -> Fraction:
    """
    Parse "p/q", "p" or a JSON integer into an exact rational

    Raises:
        ParseError: on zero denominators, floats or anything else
    """
    if isinstance(text, bool):
        raise ParseError(f"Not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"Not a rational: {text!r}")
    match = _RATIONAL.match(text)
    if match is None:
        raise ParseError(f"Not a rational: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ParseError(f"Zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value) -> str:
    """Lowest-terms "p" or "p/q" """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Document:
    """A typed payload that round-trips through JSON text"""

    def __init__(self, kind: InstanceKind, payload: Dict[str, Any]):
        self.kind = kind
        self.payload = payload

    def to_text(self) -> str:
        """Serialize with stable key order"""
        body = {'kind': self.kind.value}
        body.update(self.payload)
        return json.dumps(body, indent=2) + "\n"

    def to_bytes(self) -> bytes:
        return self.to_text().encode('utf-8')

    @staticmethod
    def from_text(text: str, default_kind: InstanceKind = InstanceKind.BMATCH) -> 'Document':
        """Deserialize; documents without a kind field are taken as default_kind"""
        try:
            body = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"Invalid document: {exc}") from exc
        if not isinstance(body, dict):
            raise ParseError("Document must be a JSON object")
        kind_value = body.pop('kind', default_kind.value)
        try:
            kind = InstanceKind(kind_value)
        except ValueError as exc:
            raise ParseError(f"Unknown document kind: {kind_value!r}") from exc
        return Document(kind, body)

    @staticmethod
    def from_bytes(data: bytes) -> 'Document':
        return Document.from_text(data.decode('utf-8'))
