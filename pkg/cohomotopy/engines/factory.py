# cohomotopy\cohomotopy\engines\factory.py

import importlib
from typing import Any, Callable, Dict, List, Tuple

from ..cochain import CohomologyDatum, OperationOverrides


class EngineFactory:
    """Factory resolving engine entry points by name."""

    # name -> (module, function, accepts overrides)
    _ENGINE_TYPES: Dict[str, Tuple[str, str, bool]] = {
        "codim2": ("codim2", "codim2_group", True),
        "codim2-dual": ("codim2", "codim2_bordism_dual", False),
        "framed-spin2": ("codim2", "framed_spin_bordism2", False),
        "codim3": ("codim3", "assemble_codim3", True),
        "string": ("codim3", "string_fast_path", True),
        "spin3": ("codim3", "spin3_bordism", True),
        "tower": ("codim3", "tower_groups", True),
    }

    _DEFAULT_BY_CODIMENSION = {2: "codim2", 3: "codim3"}

    @classmethod
    def create_engine(cls, engine_type: str) -> Tuple[Callable[..., Any], bool]:
        if engine_type not in cls._ENGINE_TYPES:
            raise ValueError(f"Unsupported engine: {engine_type}. Available: {cls.get_supported_types()}")
        module_name, function_name, takes_overrides = cls._ENGINE_TYPES[engine_type]
        module = importlib.import_module(f"cohomotopy.engines.{module_name}")
        return getattr(module, function_name), takes_overrides

    @classmethod
    def for_codimension(cls, codimension: int) -> str:
        if codimension not in cls._DEFAULT_BY_CODIMENSION:
            raise ValueError(f"No engine for codimension {codimension}")
        return cls._DEFAULT_BY_CODIMENSION[codimension]

    @classmethod
    def get_supported_types(cls) -> List[str]:
        return list(cls._ENGINE_TYPES.keys())


class EngineBuilder:
    """Fluent setup of an engine run: datum, overrides and options."""

    def __init__(self, datum: CohomologyDatum):
        self.datum = datum
        self.overrides: OperationOverrides = datum.overrides
        self.options: Dict[str, Any] = {}

    @classmethod
    def create(cls, datum: CohomologyDatum) -> 'EngineBuilder':
        return cls(datum)

    def with_overrides(self, **updates) -> 'EngineBuilder':
        self.overrides = self.overrides.merged(**updates)
        return self

    def assume_phi_trivial(self, enabled: bool = True) -> 'EngineBuilder':
        return self.with_overrides(phi_trivial=True) if enabled else self

    def assume_t_trivial(self, enabled: bool = True) -> 'EngineBuilder':
        return self.with_overrides(t_trivial=True) if enabled else self

    def assume_eps3_zero(self, enabled: bool = True) -> 'EngineBuilder':
        return self.with_overrides(three_primary_epsilon=0) if enabled else self

    def enumerate_extensions(self, enabled: bool = True) -> 'EngineBuilder':
        if enabled:
            self.options["enumerate_candidates"] = True
        return self

    def run(self, engine_type: str = None) -> Any:
        engine_type = engine_type or EngineFactory.for_codimension(self.datum.codimension)
        function, takes_overrides = EngineFactory.create_engine(engine_type)
        if not takes_overrides:
            return function(self.datum)
        options = self.options if engine_type == "codim3" else {}
        return function(self.datum, self.overrides, **options)
