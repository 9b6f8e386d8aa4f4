"""
Formatos de archivo: listas de aristas y JSON
"""

from .edge_list import parse_edge_list, format_edge_list, read_edge_list, write_edge_list
from .reports import write_json, read_json

__all__ = [
    'parse_edge_list',
    'format_edge_list',
    'read_edge_list',
    'write_edge_list',
    'write_json',
    'read_json'
]
