"""
Launcher for running the command-line front end from a source checkout
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from hypermatch.cli.main import run

if __name__ == "__main__":
    sys.exit(run())
