# Copyright (C) 2024 Callum Dickinson
#
# bhix is free software: you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation,
# either version 3 of the License, or (at your option) any later version.
#
# bhix is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY;
# without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
# See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with bhix.
# If not, see <https://www.gnu.org/licenses/>.


"""
bhix type hints.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Any, Literal, Type

from pydantic import Field, GetCoreSchemaHandler
from pydantic_core import core_schema
from typing_extensions import Annotated, Self

Vertex = Annotated[int, Field(ge=0)]
NonNegativeInt = Annotated[int, Field(ge=0)]
PositiveInt = Annotated[int, Field(ge=1)]
PositiveFloat = Annotated[float, Field(gt=0)]

OutputFormat = Literal["json", "csv", "text"]
EigenSolver = Literal["jacobi", "lapack"]


class BaseEnum(str, Enum):
    """
    String enumeration whose members serialise as their values.
    """

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_name_str(cls, name: str) -> Self:
        """
        Look up a member by name or value, ignoring case and `-`/`_` differences.

        Args:
            name (str): Member name or value.

        Returns:
            Matching enumeration member
        """

        key = name.strip().lower().replace("-", "_")
        for member in cls:
            if key in (member.name.lower(), member.value.lower().replace("-", "_")):
                return member
        raise ValueError(f"Invalid {cls.__name__} name or value: {name}")


class Rational(Fraction):
    """
    Exact rational number, serialised as a `"p/q"` string.

    Accepts integers, `Fraction` objects and strings such as `"124/5"`.
    """

    @classmethod
    def __get_pydantic_core_schema__(
        cls,
        source: Type[Any],
        handler: GetCoreSchemaHandler,
    ) -> core_schema.CoreSchema:
        return core_schema.no_info_plain_validator_function(
            cls.validate,
            serialization=core_schema.plain_serializer_function_ser_schema(
                cls.encode,
                when_used="json",
            ),
        )

    @classmethod
    def validate(cls, value: Any) -> Self:
        if isinstance(value, float):
            raise ValueError("Rational values must be given exactly (int, Fraction or 'p/q')")
        return cls(value)

    @staticmethod
    def encode(value: Fraction) -> str:
        return str(value)
