"""
Entry point for running the command-line application.
"""
import sys

from qappell.main import create_app

if __name__ == "__main__":
    sys.exit(create_app().run(sys.argv[1:]))
