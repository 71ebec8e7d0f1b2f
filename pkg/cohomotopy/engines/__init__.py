# cohomotopy\cohomotopy\engines\__init__.py

from .types import (
    Assignment,
    Provenance,
    Parameter,
    exact_accounting,
    SESBranch,
    ParametricBranch,
    ParametricGroup,
    SESReport,
)
from .codim2 import (
    Codim2Result,
    epsilon_parameter,
    codim2_classifier,
    codim2_group,
    codim2_bordism_dual,
    framed_spin_bordism2,
)
from .codim3 import (
    eps_sq4z,
    compute_g1,
    joint_kernel,
    Alpha3Data,
    alpha3_data,
    ker_alpha3_report,
    ker_alpha3,
    ker_alpha3_shifted,
    ker_sq2_bar_report,
    ker_sq2_bar,
    theta_quotient_n2,
    compute_g2,
    q2_group,
    TowerGroups,
    tower_groups,
    dispatch_case,
    three_primary_parameter,
    three_primary_criterion,
    assemble_codim3,
    string_fast_path,
    spin3_bordism,
)
from .factory import EngineFactory, EngineBuilder

__all__ = [
    # Result types
    'Assignment', 'Provenance', 'Parameter', 'exact_accounting',
    'SESBranch', 'ParametricBranch', 'ParametricGroup', 'SESReport',

    # Codimension two
    'Codim2Result', 'epsilon_parameter', 'codim2_classifier', 'codim2_group',
    'codim2_bordism_dual', 'framed_spin_bordism2',

    # Codimension three
    'eps_sq4z', 'compute_g1', 'joint_kernel', 'Alpha3Data', 'alpha3_data',
    'ker_alpha3_report', 'ker_alpha3', 'ker_alpha3_shifted', 'ker_sq2_bar_report', 'ker_sq2_bar',
    'theta_quotient_n2', 'compute_g2', 'q2_group', 'TowerGroups', 'tower_groups',
    'dispatch_case', 'three_primary_parameter', 'three_primary_criterion',
    'assemble_codim3', 'string_fast_path', 'spin3_bordism',

    # Dispatch
    'EngineFactory', 'EngineBuilder',
]
