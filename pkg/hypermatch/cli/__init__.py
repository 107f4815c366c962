"""
Command-line interface and the instance file codec
"""

from .codec import decode_instance, encode_instance, encode_decomposition, decode_decomposition
from .main import run, main

__all__ = [
    'decode_instance',
    'encode_instance',
    'encode_decomposition',
    'decode_decomposition',
    'run',
    'main',
]
