"""Entry point: ``python main.py <command> ...`` is the same as ``glat <command> ...``."""

from src.cli import main

if __name__ == "__main__":
    main()
