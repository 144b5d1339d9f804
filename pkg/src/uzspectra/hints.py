"""Coercion of configuration leaves to annotated dataclass field types.

Config documents arrive as JSON and ``--set`` overrides arrive as text;
both are brought to the type a dataclass field declares. Supported
hints: ``Any``, ``bool``, ``int``, ``float``, ``str``, ``Literal``,
``Optional``/``Union`` (typing and PEP 604), ``tuple[...]``,
``list[...]``, ``dict[str, ...]`` and nested dataclasses.
"""

from __future__ import annotations

import json
from collections.abc import Mapping as ABCMapping
from contextlib import suppress
from dataclasses import MISSING, fields, is_dataclass
from math import isfinite
from sys import modules
from types import UnionType
from typing import (
    Any,
    Dict,
    List,
    Literal,
    Tuple,
    Type,
    TypeVar,
    Union,
    get_args,
    get_origin,
    get_type_hints,
)

from .errors import ConfigError

T = TypeVar("T")


def parse_leaf(text: str) -> Any:
    """Interpret override text as JSON, falling back to the raw string.

    ``"3"`` gives ``3``, ``"[0, 1, 5]"`` a list, ``"null"`` None and
    ``"csv"`` stays ``"csv"``.
    """
    with suppress(ValueError):
        return json.loads(text)
    return text


def field_hints(cls: type) -> Dict[str, object]:
    """Resolved annotations of a dataclass.

    String annotations (``from __future__ import annotations``) are
    evaluated in the defining module's namespace.
    """
    namespace: Dict[str, Any] = vars(modules[cls.__module__])
    return get_type_hints(cls, globalns=namespace)


class HintCoerce:
    """Bring JSON-shaped values to the types their hints declare."""

    @staticmethod
    def _is_union_origin(origin: object) -> bool:
        return origin is Union or origin is UnionType

    @staticmethod
    def _describe(hint: object) -> str:
        return getattr(hint, "__name__", None) or repr(hint)

    @classmethod
    def _scalar(cls, value: Any, hint: type, path: str) -> Any:
        if hint is bool:
            if isinstance(value, bool):
                return value
            if isinstance(value, str) and value.lower() in ("true", "false"):
                return value.lower() == "true"
        elif hint is int:
            if isinstance(value, int) and not isinstance(value, bool):
                return value
            if isinstance(value, float) and value.is_integer():
                return int(value)
            if isinstance(value, str):
                with suppress(ValueError):
                    return int(value)
        elif hint is float:
            if isinstance(value, (int, float)) and not isinstance(
                    value, bool):
                number: float = float(value)
            elif isinstance(value, str):
                try:
                    number = float(value)
                except ValueError:
                    number = float("nan")
            else:
                number = float("nan")
            if isfinite(number):
                return number
        elif hint is str:
            if isinstance(value, str):
                return value
        elif isinstance(value, hint):
            return value
        raise ConfigError(
            f"expected {cls._describe(hint)}, got {value!r}", path=path)

    @classmethod
    def _sequence(cls, value: Any, origin: type, args: Tuple[Any, ...],
                  path: str) -> Any:
        if isinstance(value, (str, bytes)) or not isinstance(
                value, (list, tuple)):
            raise ConfigError(f"expected a list, got {value!r}", path=path)
        if origin is tuple and args and not (len(args) == 2
                                             and args[1] is Ellipsis):
            if len(args) != len(value):
                raise ConfigError(
                    f"expected {len(args)} items, got {len(value)}",
                    path=path)
            return tuple(
                cls.coerce(v, t, f"{path}[{i}]")
                for i, (v, t) in enumerate(zip(value, args, strict=True)))
        item: object = args[0] if args else Any
        items: List[Any] = [
            cls.coerce(v, item, f"{path}[{i}]") for i, v in enumerate(value)
        ]
        return tuple(items) if origin is tuple else items

    @classmethod
    def coerce(cls, value: Any, hint: object, path: str) -> Any:
        """Return ``value`` converted to ``hint``.

        Args:
            value: JSON-shaped input.
            hint: Resolved typing hint.
            path: Dotted path used in error messages.

        Raises:
            ConfigError: If the value cannot represent the hint.
        """
        if hint in (Any, object):
            return value
        if hint is type(None):
            if value is None:
                return None
            raise ConfigError(f"expected null, got {value!r}", path=path)
        if isinstance(hint, type) and is_dataclass(hint):
            return cls.build(hint, value, path)
        origin: object = get_origin(hint)
        args: Tuple[Any, ...] = get_args(hint)
        if origin is Literal:
            for literal in args:
                if value == literal:
                    return literal
            allowed: str = ", ".join(repr(a) for a in args)
            raise ConfigError(f"expected one of {allowed}, got {value!r}",
                              path=path)
        if cls._is_union_origin(origin):
            if value is None and type(None) in args:
                return None
            for option in args:
                if option is type(None):
                    continue
                with suppress(ConfigError):
                    return cls.coerce(value, option, path)
            raise ConfigError(f"{value!r} matches no member of {hint!r}",
                              path=path)
        if origin in (tuple, list):
            return cls._sequence(value, origin, args, path)
        if origin is dict:
            if not isinstance(value, ABCMapping):
                raise ConfigError(f"expected a mapping, got {value!r}",
                                  path=path)
            inner: object = args[1] if len(args) == 2 else Any
            return {
                str(k): cls.coerce(v, inner, f"{path}.{k}")
                for k, v in value.items()
            }
        if origin is None and isinstance(hint, type):
            return cls._scalar(value, hint, path)
        raise TypeError(f"unsupported hint {hint!r}")

    @classmethod
    def build(cls, target: Type[T], value: Any, path: str = "") -> T:
        """Construct dataclass ``target`` from a mapping.

        Missing keys take the field defaults; unknown keys are rejected.
        A list is read positionally, so a grid may be given as
        ``[start, stop, count]``.

        Raises:
            ConfigError: On unknown or missing keys, failed coercions, or
                a ``ConfigError``/``ValueError`` raised by the dataclass
                itself.
        """
        if isinstance(value, target):
            return value
        if isinstance(value, (list, tuple)):
            names: List[str] = [f.name for f in fields(target)]
            if len(value) > len(names):
                raise ConfigError(
                    f"expected at most {len(names)} items, got {len(value)}",
                    path=path or None)
            value = dict(zip(names, value))
        if not isinstance(value, ABCMapping):
            raise ConfigError(f"expected a mapping, got {value!r}",
                              path=path or None)
        hints: Dict[str, object] = field_hints(target)
        known: Dict[str, Any] = {f.name: f for f in fields(target)}
        prefix: str = f"{path}." if path else ""
        for key in value:
            if key not in known:
                raise ConfigError("unknown key", path=f"{prefix}{key}")
        kwargs: Dict[str, Any] = {}
        for name, f in known.items():
            if name in value:
                kwargs[name] = cls.coerce(value[name], hints[name],
                                          f"{prefix}{name}")
            elif f.default is MISSING and f.default_factory is MISSING:
                raise ConfigError("required", path=f"{prefix}{name}")
        try:
            return target(**kwargs)
        except ConfigError as exc:
            raise exc.under(path) from None
        except ValueError as exc:
            raise ConfigError(str(exc), path=path or None) from exc
