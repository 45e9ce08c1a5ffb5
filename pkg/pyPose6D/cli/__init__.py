r'''
Command-line surface: ``pypose6d <command>`` or ``python -m pyPose6D <command>``.
'''
from pyPose6D.cli.main import main,build_parser
