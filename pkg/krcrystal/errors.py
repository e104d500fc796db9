"""Exception hierarchy and the uniform error envelope used by the CLI and the HTTP API."""

from __future__ import annotations

import json
from typing import Any


class KRError(Exception):
    """Base class for every error raised by the library."""

    exit_code = 1
    http_status = 422
    title = "Crystal error"
    hint: str | None = None

    def __init__(self, message: str, *, detail: Any = None, hint: str | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.detail = detail
        if hint is not None:
            self.hint = hint


# ── Domain errors (exit status 1) ──────────────────────────────────────


class DomainError(KRError):
    title = "Invalid input"


class InvalidCartanType(DomainError):
    title = "Unknown Cartan type"
    hint = 'Use a triple such as "D,4,1", "B,3,1" or "A,5,2" (A_{2n-1}^(2), odd size).'


class SpinNodeError(DomainError):
    title = "Spin node"
    hint = "r must be at most n-2 for D, n-1 for B and n for A2odd."


class InvalidLetter(DomainError):
    title = "Invalid letter"
    hint = "Letters are signed integers k with 1 <= |k| <= n; 0 only for the B family."


class InvalidElement(DomainError):
    title = "Invalid element"
    hint = "Rows are listed top-to-bottom, shorter rows first; the filling must lie in B^{r,s}."


class InvalidDiagram(DomainError):
    title = "Invalid +/- diagram"
    hint = 'Rows are listed top-to-bottom with entries "", "+" and "-".'


class WeightError(DomainError):
    title = "Invalid weight"
    hint = "Give n+1 comma-separated Lambda-coordinates whose level equals s."


class NotHighestWeight(DomainError):
    title = "Element is not highest weight"
    hint = "Raise the element first; the operation needs e_i(b) undefined on the subalgebra nodes."


class PairNotFound(DomainError):
    title = "No diagram pair"


class MinimalElementError(DomainError):
    title = "Minimal element construction failed"


class InvalidDocument(DomainError):
    title = "Malformed document"
    hint = "Documents are JSON row lists, e.g. [[3],[1]]."


# ── Resource errors (exit status 2) ────────────────────────────────────


class ResourceError(KRError):
    exit_code = 2
    http_status = 413
    title = "Resource limit"


class BudgetExceeded(ResourceError):
    title = "Enumeration budget exceeded"
    hint = "Raise KR_VERTEX_BUDGET / KR_TENSOR_BUDGET or choose a smaller crystal."


def format_error(exc: BaseException) -> dict[str, Any]:
    """Envelope {ok, status, title, message, hint, detail} for any exception."""
    if isinstance(exc, KRError):
        return {
            "ok": False,
            "status": exc.http_status,
            "title": exc.title,
            "message": exc.message,
            "hint": exc.hint,
            "detail": _detail_to_str(exc.detail),
        }
    return {
        "ok": False,
        "status": 500,
        "title": "Internal error",
        "message": str(exc)[:200] or exc.__class__.__name__,
        "hint": "Re-run with KR_LOG_LEVEL=DEBUG for the traceback.",
        "detail": exc.__class__.__name__,
    }


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, KRError):
        return exc.exit_code
    return 1


def _detail_to_str(detail: Any) -> str | None:
    if detail is None:
        return None
    if isinstance(detail, (dict, list, tuple)):
        return json.dumps(detail, ensure_ascii=False, separators=(",", ":"), default=str)
    return str(detail)
