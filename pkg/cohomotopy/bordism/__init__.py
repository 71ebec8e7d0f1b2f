# cohomotopy\cohomotopy\bordism\__init__.py

from .tables import CoefficientTable
from .g_to_h import STRUCTURE_GROUPS, g_to_h_ses
from .section import SectionVerdict, EulerData, SectionDecision, section_existence
from .oracle import parse_sphere_dimension, wedge_oracle

__all__ = [
    # Coefficients
    'CoefficientTable',

    # Bordism sequences
    'STRUCTURE_GROUPS', 'g_to_h_ses',

    # Sections of bundles
    'SectionVerdict', 'EulerData', 'SectionDecision', 'section_existence',

    # Oracle
    'parse_sphere_dimension', 'wedge_oracle',
]
