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
Extremal graph families: closed-form biharmonic indices, free tree enumeration
and the exhaustive scans over trees and diameter-2 graphs.
"""

from __future__ import annotations

from .closed_forms import (
    ClosedForm,
    ClosedFormCase,
    ExtremeCheck,
    FamilyVerificationReport,
    closed_form_bh,
    double_star_extremes,
    factorization,
    firefly_extremes,
    verify_family_factorizations,
)
from .scans import (
    Diameter2Report,
    DiameterBoundReport,
    ScanReport,
    conjecture_scan,
    diameter2_scan,
    theorem_5_2_scan,
)
from .trees import TreeIterator, enumerate_trees

__all__ = [
    "ClosedForm",
    "ClosedFormCase",
    "Diameter2Report",
    "DiameterBoundReport",
    "ExtremeCheck",
    "FamilyVerificationReport",
    "ScanReport",
    "TreeIterator",
    "closed_form_bh",
    "conjecture_scan",
    "diameter2_scan",
    "double_star_extremes",
    "enumerate_trees",
    "factorization",
    "firefly_extremes",
    "theorem_5_2_scan",
    "verify_family_factorizations",
]
