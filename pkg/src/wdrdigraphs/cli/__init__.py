from .parsing import InputParser, parse_input
from .rendering import render_report, load_report, render_catalog
from .main import main, build_parser

__all__ = ['InputParser', 'parse_input', 'render_report', 'load_report',
           'render_catalog', 'main', 'build_parser']
