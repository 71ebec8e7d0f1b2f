# cohomotopy\cohomotopy\cochain\__init__.py

from .datum import (
    StructureTag,
    MAP_TYPES,
    OperationOverrides,
    HomologyData,
    CohomologyDatum,
)
from .ring import RingGenerator, RingPresentation, CohomologyRing, RingIngestion, ingest_ring
from .wu import derive_wu_actions
from .operations import OperationFactory, operation_hom, op_kernel, op_image, op_quotient
from .validator import RELATIONS, Violation, ValidationReport, validate_datum
from .loader import parse_datum, load_datum, load_data, parse_group, parse_matrix, DatumBuilder

__all__ = [
    # Data model
    'StructureTag', 'MAP_TYPES', 'OperationOverrides', 'HomologyData', 'CohomologyDatum',

    # Ring ingestion
    'RingGenerator', 'RingPresentation', 'CohomologyRing', 'RingIngestion', 'ingest_ring',
    'derive_wu_actions',

    # Operations
    'OperationFactory', 'operation_hom', 'op_kernel', 'op_image', 'op_quotient',

    # Validation
    'RELATIONS', 'Violation', 'ValidationReport', 'validate_datum',

    # Loading
    'parse_datum', 'load_datum', 'load_data', 'parse_group', 'parse_matrix', 'DatumBuilder',
]
