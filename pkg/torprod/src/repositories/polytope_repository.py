# /src/repositories/polytope_repository.py

import json
import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from src.charfunc import (
    CharFunction, Ring, connected_sum_char, hirzebruch_char, make_char, prism_char, simplex_char,
)
from src.models import CharFunctionDocument, PolytopeDocument
from src.polytope import SimplePolytope, cube, point, prism, simplex, square
from src.utils.errors import ParseError

logger = logging.getLogger(__name__)


def _cube_char(n: int) -> CharFunction:
    vectors = {}
    for i in range(n):
        e = [1 if k == i else 0 for k in range(n)]
        vectors[f"F{2 * i + 1}"] = e
        vectors[f"F{2 * i + 2}"] = [-x for x in e]
    return make_char(vectors)


def _split(name: str):
    head, _, tail = name.partition(":")
    if not tail:
        return head, None
    try:
        return head, int(tail)
    except ValueError:
        raise ParseError(f"expected an integer after ':' in {name!r}")


class PolytopeRepository:
    """Named polytopes and characteristic functions, plus JSON files on disk."""

    POLYTOPES: Dict[str, Callable[..., SimplePolytope]] = {
        "point": point,
        "square": square,
        "prism": prism,
        "simplex": simplex,
        "cube": cube,
    }
    CHARS = ("simplex:<n>", "cube:<n>", "hirzebruch[:<r>]", "connected-sum", "prism")

    def ListAllPolytopes(self) -> List[str]:
        """Names accepted by GetPolytopeByName."""
        return ["point", "square", "prism", "simplex:<n>", "cube:<n>"]

    def ListAllCharFunctions(self) -> List[str]:
        """Names accepted by GetCharFunctionByName."""
        return list(self.CHARS)

    def GetPolytopeByName(self, name: str) -> SimplePolytope:
        """A built-in name such as ``simplex:3``, or a path to a JSON polytope document."""
        head, arg = _split(name)
        if head in ("simplex", "cube"):
            if arg is None:
                raise ParseError(f"{head} needs a dimension, e.g. {head}:2")
            return self.POLYTOPES[head](arg)
        if head in self.POLYTOPES and arg is None:
            return self.POLYTOPES[head]()
        if Path(name).suffix == ".json":
            return self.ImportPolytope(name)
        raise ParseError(f"unknown polytope {name!r}; known: {', '.join(self.ListAllPolytopes())}")

    def GetCharFunctionByName(self, name: str, r: Optional[int] = None) -> CharFunction:
        """A built-in name such as ``hirzebruch:1``, or a JSON path; ``r`` is the Hirzebruch twist."""
        head, arg = _split(name)
        if head == "simplex" and arg is not None:
            return simplex_char(arg)
        if head == "cube" and arg is not None:
            return _cube_char(arg)
        if head == "hirzebruch":
            twist = arg if arg is not None else r
            if twist is None:
                raise ParseError("hirzebruch needs r, as hirzebruch:<r> or --r")
            return hirzebruch_char(twist)
        if head == "connected-sum":
            return connected_sum_char()
        if head == "prism":
            return prism_char()
        if Path(name).suffix == ".json":
            return self.ImportCharFunction(name)
        raise ParseError(f"unknown characteristic function {name!r}; known: {', '.join(self.CHARS)}")

    def ImportPolytope(self, path: str) -> SimplePolytope:
        """Reads and validates a polytope document."""
        document = self._read(path, PolytopeDocument)
        logger.info("imported polytope %s from %s", document.name or "", path)
        return document.to_polytope()

    def ImportCharFunction(self, path: str) -> CharFunction:
        """Reads and validates a characteristic function document."""
        return self._read(path, CharFunctionDocument).to_char()

    def ExportPolytope(self, P: SimplePolytope, path: str, name: Optional[str] = None) -> None:
        """Writes the polytope as a JSON document."""
        Path(path).write_text(PolytopeDocument.from_polytope(P, name).model_dump_json(indent=2))

    def ExportCharFunction(self, char: CharFunction, path: str) -> None:
        """Writes the function as a JSON document, with its vectors under ``lambda``."""
        document = CharFunctionDocument.from_char(char)
        Path(path).write_text(document.model_dump_json(indent=2, by_alias=True))

    def _read(self, path: str, model):
        try:
            text = Path(path).read_text()
        except OSError as e:
            raise ParseError(f"cannot read {path}: {e.strerror}") from e
        try:
            return model.model_validate(json.loads(text))
        except (ValueError, ValidationError) as e:
            raise ParseError(f"{path}: {e}") from e
