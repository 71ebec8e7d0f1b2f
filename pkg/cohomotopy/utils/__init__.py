# cohomotopy\cohomotopy\utils\__init__.py

from .config import SchemaConstants, ExitCodes, EngineConstants, CorpusConfig, RunConfig, config
from .logging_setup import configure_logging

__all__ = [
    'SchemaConstants', 'ExitCodes', 'EngineConstants', 'CorpusConfig', 'RunConfig', 'config',
    'configure_logging',
]
