# cohomotopy\cohomotopy\utils\config.py

import os
from pathlib import Path
from typing import List


class SchemaConstants:
    SCHEMA_VERSION = 1
    JSON_INDENT = 2


class ExitCodes:
    OK = 0
    VALIDATION_FAILED = 1
    PARSE_ERROR = 2
    HYPOTHESIS_ERROR = 3


class EngineConstants:
    ENUMERATION_ORDER_LIMIT = 64
    ORACLE_STEM_LIMIT = 7
    MIN_STABLE_N = 5
    SUPPORTED_CODIMENSIONS = (2, 3)


class CorpusConfig:
    ENV_VAR = "COHOMOTOPY_CORPUS"
    DEFAULT_DIR = Path(__file__).resolve().parents[2] / "corpus"

    @classmethod
    def get_corpus_dir(cls) -> Path:
        """Corpus directory, overridable through the environment."""
        override = os.environ.get(cls.ENV_VAR)
        return Path(override) if override else cls.DEFAULT_DIR

    @classmethod
    def list_files(cls) -> List[Path]:
        corpus_dir = cls.get_corpus_dir()
        if not corpus_dir.is_dir():
            return []
        return sorted(corpus_dir.glob("*.json"))

    @classmethod
    def get_corpus_file(cls, name: str) -> Path:
        files = {p.stem: p for p in cls.list_files()}
        stem = name[:-5] if name.endswith(".json") else name
        if stem not in files:
            raise ValueError(f"Unknown corpus file: {name}. Available: {sorted(files)}")
        return files[stem]


# Run settings set from the command line
class RunConfig:
    def __init__(self):
        self.verbosity = 0
        self.enumerate_extensions = False


config = RunConfig()
