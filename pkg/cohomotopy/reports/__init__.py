# cohomotopy\cohomotopy\reports\__init__.py

from .document import ReportDocument, file_digest, to_jsonable, dumps, write_documents
from .render import render_validation, render_parametric, render_report

__all__ = [
    'ReportDocument', 'file_digest', 'to_jsonable', 'dumps', 'write_documents',
    'render_validation', 'render_parametric', 'render_report',
]
