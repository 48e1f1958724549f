"""
Makes the wozencraft_codes package executable.
Invokes the main CLI application defined in wozencraft_codes.cli.
"""

from wozencraft_codes.cli import app

if __name__ == "__main__":
    app()
