# cohomotopy\cohomotopy\__init__.py

from .errors import (
    CohomotopyError, ContainmentError, DegreeError, MissingDataError, DataError, HypothesisError,
    DispatchError, TagError, InconsistentInputError, RangeError, ParseError,
)
from .algebra import (
    IntegerMatrix,
    smith_normal_form,
    PresentedAbelianGroup,
    GroupInvariants,
    AbHom,
    Subgroup,
    ModPMap,
    Verdict,
    build_extension,
    classify_elementary_two_extension,
    enumerate_extensions,
)
from .cochain import (
    StructureTag,
    CohomologyDatum,
    OperationOverrides,
    CohomologyRing,
    ingest_ring,
    derive_wu_actions,
    op_kernel,
    op_quotient,
    validate_datum,
    load_datum,
    load_data,
    DatumBuilder,
)
from .engines import (
    Parameter,
    ParametricGroup,
    SESReport,
    codim2_group,
    codim2_bordism_dual,
    framed_spin_bordism2,
    ker_alpha3,
    ker_sq2_bar,
    assemble_codim3,
    string_fast_path,
    spin3_bordism,
    EngineFactory,
    EngineBuilder,
)
from .bordism import CoefficientTable, EulerData, SectionVerdict, g_to_h_ses, section_existence, wedge_oracle
from .reports import ReportDocument

__all__ = [
    # Errors
    'CohomotopyError', 'ContainmentError', 'DegreeError', 'MissingDataError', 'DataError', 'HypothesisError',
    'DispatchError', 'TagError', 'InconsistentInputError', 'RangeError', 'ParseError',

    # Exact algebra
    'IntegerMatrix', 'smith_normal_form', 'PresentedAbelianGroup', 'GroupInvariants', 'AbHom', 'Subgroup',
    'ModPMap', 'Verdict', 'build_extension', 'classify_elementary_two_extension', 'enumerate_extensions',

    # Cochain model
    'StructureTag', 'CohomologyDatum', 'OperationOverrides', 'CohomologyRing', 'ingest_ring',
    'derive_wu_actions', 'op_kernel', 'op_quotient', 'validate_datum', 'load_datum', 'load_data',
    'DatumBuilder',

    # Engines
    'Parameter', 'ParametricGroup', 'SESReport', 'codim2_group', 'codim2_bordism_dual',
    'framed_spin_bordism2', 'ker_alpha3', 'ker_sq2_bar', 'assemble_codim3', 'string_fast_path',
    'spin3_bordism', 'EngineFactory', 'EngineBuilder',

    # Bordism
    'CoefficientTable', 'EulerData', 'SectionVerdict', 'g_to_h_ses', 'section_existence', 'wedge_oracle',

    # Reports
    'ReportDocument',
]
